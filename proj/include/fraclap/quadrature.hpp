#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

#include "fraclap/errors.hpp"

namespace fraclap::quadrature {

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
};

namespace detail {

// 15-point Kronrod nodes/weights and embedded 7-point Gauss weights
// (QUADPACK dqk15 tables).
inline constexpr double xgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
};
inline constexpr double wgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
inline constexpr double wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

template <typename F>
QuadResult kronrod15(const F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double hl = 0.5 * (b - a);
    const double fc = f(c);
    double resk = wgk[7] * fc;
    double resg = wg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double absc = hl * xgk[j];
        const double fsum = f(c - absc) + f(c + absc);
        resk += wgk[j] * fsum;
        if (j % 2 == 1) resg += wg[j / 2] * fsum;
    }
    QuadResult r;
    r.value = resk * hl;
    r.error_estimate = std::fabs((resk - resg) * hl);
    r.evaluations = 15;
    return r;
}

struct Interval {
    double a, b, value, error;
    bool operator<(const Interval& o) const { return error < o.error; }
};

inline std::string budget_message(double err, double tol) {
    std::ostringstream os;
    os << "quadrature: interval budget exhausted (error estimate " << err << ", tol " << tol << ")";
    return os.str();
}

/// Global refinement: split the worst interval until the summed error
/// estimate drops below abs_tol.
template <typename F>
QuadResult refine(const F& f, std::priority_queue<Interval>& heap, QuadResult totals,
                  double abs_tol, std::size_t max_intervals) {
    std::size_t n_intervals = heap.size();
    while (totals.error_estimate > abs_tol) {
        if (n_intervals >= max_intervals)
            throw ConvergenceError(budget_message(totals.error_estimate, abs_tol));
        const Interval worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b)
            throw ConvergenceError("quadrature: interval underflow before reaching tolerance");
        const QuadResult left = kronrod15(f, worst.a, mid);
        const QuadResult right = kronrod15(f, mid, worst.b);
        totals.value += left.value + right.value - worst.value;
        totals.error_estimate += left.error_estimate + right.error_estimate - worst.error;
        totals.evaluations += left.evaluations + right.evaluations;
        heap.push({worst.a, mid, left.value, left.error_estimate});
        heap.push({mid, worst.b, right.value, right.error_estimate});
        ++n_intervals;
    }
    return totals;
}

} // namespace detail

/// Adaptive Gauss-Kronrod (7,15) over [a, b] to absolute tolerance;
/// throws ConvergenceError once max_intervals is exhausted.
template <typename F>
QuadResult integrate(const F& f, double a, double b, double abs_tol,
                     std::size_t max_intervals = 4000) {
    QuadResult first = detail::kronrod15(f, a, b);
    std::priority_queue<detail::Interval> heap;
    heap.push({a, b, first.value, first.error_estimate});
    return detail::refine(f, heap, first, abs_tol, max_intervals);
}

/// Integrate over [breakpoints.front(), breakpoints.back()] with forced
/// initial panel edges, then refine globally against one shared absolute
/// tolerance. Used where the integrand has sharp features at known
/// locations.
template <typename F>
QuadResult integrate_panels(const F& f, const std::vector<double>& breakpoints, double abs_tol,
                            std::size_t max_intervals = 20000) {
    if (breakpoints.size() < 2) return {};
    std::priority_queue<detail::Interval> heap;
    QuadResult totals;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        QuadResult r = detail::kronrod15(f, breakpoints[i], breakpoints[i + 1]);
        totals.value += r.value;
        totals.error_estimate += r.error_estimate;
        totals.evaluations += r.evaluations;
        heap.push({breakpoints[i], breakpoints[i + 1], r.value, r.error_estimate});
    }
    return detail::refine(f, heap, totals, abs_tol, max_intervals);
}

/// Panel edges geometrically refined toward `focus` (both sides), down to
/// resolution `scale`. Returns sorted unique edges spanning [a, b].
inline std::vector<double> geometric_breakpoints(double a, double b, double focus, double scale) {
    std::vector<double> pts{a, b};
    for (double d = scale; focus - d > a || focus + d < b; d *= 2.0) {
        if (focus - d > a) pts.push_back(focus - d);
        if (focus + d < b) pts.push_back(focus + d);
        if (d > (b - a)) break;
    }
    if (focus > a && focus < b) pts.push_back(focus);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

} // namespace fraclap::quadrature
