#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "fraclap/chain.hpp"
#include "fraclap/errors.hpp"
#include "fraclap/frac_order.hpp"
#include "fraclap/quadrature.hpp"
#include "fraclap/specfun.hpp"

namespace fraclap::continuum {

/// Continuum kernel parameters. length unset = infinite line; eps = 0
/// selects the hypersingular pointwise representation, eps > 0 the
/// regularized one.
struct KernelSpec {
    FracOrder order;
    std::optional<double> length; // cm; nullopt = infinite line
    double rho0 = 1.0;            // g / cm
    double a_alpha = 1.0;         // sec^-2 cm^alpha
    double eps = 0.0;             // cm

    static KernelSpec infinite_line(FracOrder order, double rho0 = 1.0, double a_alpha = 1.0,
                                    double eps = 0.0) {
        return KernelSpec(order, std::nullopt, rho0, a_alpha, eps);
    }
    static KernelSpec periodic(FracOrder order, double length, double rho0 = 1.0,
                               double a_alpha = 1.0, double eps = 0.0) {
        if (!(length > 0.0)) throw DomainError("KernelSpec: length must be > 0");
        return KernelSpec(order, length, rho0, a_alpha, eps);
    }

    bool is_periodic() const { return length.has_value(); }

private:
    KernelSpec(FracOrder order_, std::optional<double> length_, double rho0_, double a_alpha_,
               double eps_)
        : order(order_), length(length_), rho0(rho0_), a_alpha(a_alpha_), eps(eps_) {
        if (!(rho0 > 0.0)) throw DomainError("KernelSpec: rho0 must be > 0");
        if (!(a_alpha > 0.0)) throw DomainError("KernelSpec: A_alpha must be > 0");
        if (eps < 0.0) throw DomainError("KernelSpec: eps must be >= 0");
    }
};

struct ScalingConstants {
    double mu;     // g
    double omega2; // sec^-2
};

/// Lattice scaling that keeps total mass and elastic energy finite as
/// h -> 0:  mu = rho0 h,  Omega^2 = A_alpha h^-alpha.
inline ScalingConstants scaling_constants(double h, const FracOrder& order, double rho0,
                                          double a_alpha) {
    if (!(h > 0.0)) throw DomainError("scaling_constants: h must be > 0");
    return {rho0 * h, a_alpha * std::pow(h, -order.alpha())};
}

namespace detail {

/// (alpha!/pi) sin(alpha pi/2); exactly zero when alpha/2 is an integer.
inline double kernel_prefactor(const FracOrder& order) {
    if (order.is_integer_half()) return 0.0;
    return std::exp(std::lgamma(order.alpha() + 1.0)) / std::numbers::pi *
           specfun::sin_pi(order.half());
}

/// i^(alpha+1) on the principal branch, exact at integer alpha.
inline std::complex<double> i_pow_alpha_plus_1(double alpha) {
    const double t = (alpha + 1.0) / 2.0;
    return {specfun::cos_pi(t), specfun::sin_pi(t)};
}

/// Reduce x to the principal interval [0, L).
inline double principal_interval(double x, double L) {
    double xi = std::fmod(x, L);
    if (xi < 0.0) xi += L;
    return xi;
}

} // namespace detail

/// Pointwise kernel of the infinite-space fractional Laplacian,
/// (alpha!/pi) sin(alpha pi/2) |x|^-(alpha+1); physical prefactor
/// rho0 A_alpha is applied by the caller. Hypersingular at x = 0.
inline double riesz_kernel_infinite(const FracOrder& order, double x) {
    if (x == 0.0) throw DomainError("riesz_kernel_infinite: x = 0 is the hypersingular point");
    if (order.is_integer_half()) return 0.0;
    return detail::kernel_prefactor(order) * std::pow(std::fabs(x), -order.alpha() - 1.0);
}

/// Distributionally regularized kernel
/// -(alpha!/pi) Re{ i^(alpha+1) / (x + i eps)^(alpha+1) }; finite
/// everywhere, tends to the pointwise kernel for x != 0 as eps -> 0+.
inline double riesz_kernel_regularized(const FracOrder& order, double x, double eps) {
    if (!(eps > 0.0)) throw DomainError("riesz_kernel_regularized: eps must be > 0");
    const double beta = order.alpha() + 1.0;
    const std::complex<double> z(x, eps);
    const std::complex<double> term = detail::i_pow_alpha_plus_1(order.alpha()) / std::pow(z, beta);
    return -std::exp(std::lgamma(beta)) / std::numbers::pi * term.real();
}

/// L-periodic kernel in closed form through Hurwitz zetas:
///   K_L(x) = (alpha! sin(alpha pi/2) / (pi L^(alpha+1)))
///            { -|xi|^-(alpha+1) + ztilde(alpha+1, xi) + ztilde(alpha+1, -xi) }
/// with xi = x/L reduced to the principal interval. The -|xi| term cancels
/// the n = 0 image inside ztilde(.,-xi), so the evaluation uses the
/// cancellation-free equivalent zeta(b,xi) + zeta(b,1-xi).
inline double periodic_kernel_zeta(const KernelSpec& spec, double x) {
    if (!spec.is_periodic()) throw DomainError("periodic_kernel_zeta: periodic spec required");
    const double L = *spec.length;
    const double xi = detail::principal_interval(x, L) / L;
    if (xi == 0.0)
        throw DomainError("periodic_kernel_zeta: x lies on a lattice singularity");
    if (spec.order.is_integer_half()) return 0.0;
    const double beta = spec.order.alpha() + 1.0;
    const double bracket = specfun::hurwitz_zeta(beta, xi) + specfun::hurwitz_zeta(beta, 1.0 - xi);
    return detail::kernel_prefactor(spec.order) * std::pow(L, -beta) * bracket;
}

/// The same kernel as an Ewald-style image sum sum_n g_inf(|x - nL|),
/// truncated once the midpoint-rule tail integral bounds the remainder
/// below tol. Serves as the independent oracle for periodic_kernel_zeta.
inline double periodic_kernel_imagesum(const KernelSpec& spec, double x, double tol = 1e-10) {
    if (!spec.is_periodic()) throw DomainError("periodic_kernel_imagesum: periodic spec required");
    if (!(tol > 0.0)) throw DomainError("periodic_kernel_imagesum: tol must be > 0");
    const double L = *spec.length;
    const double xr = detail::principal_interval(x, L);
    if (xr == 0.0)
        throw DomainError("periodic_kernel_imagesum: x lies on a lattice singularity");
    if (spec.order.is_integer_half()) return 0.0;

    const double beta = spec.order.alpha() + 1.0;
    const double pref = detail::kernel_prefactor(spec.order);
    const double apref = std::fabs(pref);

    double sum = std::pow(xr, -beta);
    double comp = 0.0;
    long m = 0;
    constexpr long budget = 1L << 24;
    while (true) {
        // remainder of both sub-series approximated by the midpoint
        // integral; the midpoint-rule error is bounded by |f'(M+1/2)|/24
        const double a_minus = (static_cast<double>(m) + 0.5) * L - xr;
        const double a_plus = (static_cast<double>(m) + 0.5) * L + xr;
        const double err_bound = apref * beta * L / 24.0 *
                                 (std::pow(a_minus, -beta - 1.0) + std::pow(a_plus, -beta - 1.0));
        if (err_bound < 0.5 * tol && m >= 1) {
            const double tail = (std::pow(a_minus, 1.0 - beta) + std::pow(a_plus, 1.0 - beta)) /
                                (L * (beta - 1.0));
            return pref * (sum + tail);
        }
        if (m >= budget)
            throw ConvergenceError("periodic_kernel_imagesum: image budget exhausted at tol " +
                                   std::to_string(tol));
        ++m;
        const double term = std::pow(static_cast<double>(m) * L - xr, -beta) +
                            std::pow(static_cast<double>(m) * L + xr, -beta);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
}

/// Regularized L-periodic kernel, direct summation of regularized images
/// (the complex-shifted powers) with the smooth far tail restored by the
/// midpoint integral of the unregularized power law. Finite for all x,
/// including the lattice points.
inline double periodic_kernel_regularized(const KernelSpec& spec, double x, long n_max = 256) {
    if (!spec.is_periodic()) throw DomainError("periodic_kernel_regularized: periodic spec required");
    if (!(spec.eps > 0.0)) throw DomainError("periodic_kernel_regularized: eps must be > 0");
    if (n_max < 1) throw DomainError("periodic_kernel_regularized: n_max must be >= 1");
    const double L = *spec.length;
    const double xr = detail::principal_interval(x, L);
    const double alpha = spec.order.alpha();
    const double beta = alpha + 1.0;
    const std::complex<double> rot = detail::i_pow_alpha_plus_1(alpha);
    const double gpref = std::exp(std::lgamma(beta)) / std::numbers::pi;

    double re_sum = 0.0, comp = 0.0;
    for (long n = -n_max; n <= n_max; ++n) {
        const std::complex<double> z(xr - static_cast<double>(n) * L, spec.eps);
        const double term = (rot / std::pow(z, beta)).real();
        const double y = term - comp;
        const double t = re_sum + y;
        comp = (t - re_sum) - y;
        re_sum = t;
    }
    double value = -gpref * re_sum;

    // far images: regularization is negligible out there (eps << n L)
    const double pref = detail::kernel_prefactor(spec.order);
    if (pref != 0.0) {
        const double a_minus = (static_cast<double>(n_max) + 0.5) * L - xr;
        const double a_plus = (static_cast<double>(n_max) + 0.5) * L + xr;
        value += pref * (std::pow(a_minus, 1.0 - beta) + std::pow(a_plus, 1.0 - beta)) /
                 (L * (beta - 1.0));
    }
    return value;
}

/// Exact eigenvalue -|2 pi l / L|^alpha of the L-periodic fractional
/// Laplacian on the Bloch mode l.
inline double periodic_eigenvalue(const FracOrder& order, double L, long l) {
    if (!(L > 0.0)) throw DomainError("periodic_eigenvalue: L must be > 0");
    if (l == 0) return 0.0;
    const double k = 2.0 * std::numbers::pi * static_cast<double>(std::labs(l)) / L;
    return -std::pow(k, order.alpha());
}

/// Measure the eigenvalue at one regularization eps by convolving the
/// regularized periodic kernel with the Bloch mode over one period:
///   lambda(eps) = int_0^L K_L(y) cos(k_l y) dy.
/// The kernel peaks at the lattice points are resolved with panels
/// geometrically refined toward y = 0 (and mirrored via symmetry).
inline double verify_eigen_by_convolution(const KernelSpec& spec, long l, double quad_tol) {
    if (!spec.is_periodic()) throw DomainError("verify_eigen_by_convolution: periodic spec required");
    if (!(spec.eps > 0.0)) throw DomainError("verify_eigen_by_convolution: eps must be > 0");
    if (!(quad_tol > 0.0)) throw DomainError("verify_eigen_by_convolution: quad_tol must be > 0");
    const double L = *spec.length;
    const double k = 2.0 * std::numbers::pi * static_cast<double>(std::labs(l)) / L;
    const auto integrand = [&](double y) {
        return periodic_kernel_regularized(spec, y) * std::cos(k * y);
    };
    // integrand is symmetric about L/2, integrate half and double
    const std::vector<double> panels =
        quadrature::geometric_breakpoints(0.0, 0.5 * L, 0.0, spec.eps / 16.0);
    quadrature::QuadResult r = quadrature::integrate_panels(integrand, panels, 0.5 * quad_tol);
    return 2.0 * r.value;
}

/// Richardson extrapolation of values on a geometric eps ladder
/// (ratio 1/2 per rung) assuming an error series in eps, eps^2, ...
inline double richardson_extrapolate(const std::vector<double>& ladder) {
    if (ladder.empty()) throw DomainError("richardson_extrapolate: empty ladder");
    std::vector<double> t = ladder;
    const std::size_t n = t.size();
    for (std::size_t m = 1; m < n; ++m) {
        const double w = std::pow(2.0, static_cast<double>(m));
        for (std::size_t j = n - 1; j >= m; --j) t[j] = (w * t[j] - t[j - 1]) / (w - 1.0);
    }
    return t[n - 1];
}

/// Convolution eigenvalue extrapolated over the geometric eps ladder
/// eps0, eps0/2, ... (rungs entries). This is the measurement compared
/// against periodic_eigenvalue.
inline double measure_eigenvalue_extrapolated(const FracOrder& order, double L, long l,
                                              double eps0, int rungs, double quad_tol) {
    if (rungs < 1) throw DomainError("measure_eigenvalue_extrapolated: rungs must be >= 1");
    std::vector<double> ladder;
    double eps = eps0;
    for (int j = 0; j < rungs; ++j, eps *= 0.5) {
        KernelSpec spec = KernelSpec::periodic(order, L, 1.0, 1.0, eps);
        ladder.push_back(verify_eigen_by_convolution(spec, l, quad_tol));
    }
    return richardson_extrapolate(ladder);
}

// ---------------------------------------------------------------------------
// integer-order degeneration

/// 2m-th derivative of the Lorentzian eps/(pi (x^2+eps^2)), evaluated by
/// the real binomial expansion of Im[(x+i eps)^(2m+1)]; no complex powers
/// involved, which keeps this an independent route against the
/// complex-arithmetic kernel.
inline double lorentzian_derivative(long m, double x, double eps) {
    if (m < 0) throw DomainError("lorentzian_derivative: m must be >= 0");
    const long n = 2 * m + 1;
    // Im[(x+i eps)^n] = sum over odd j of C(n,j) x^(n-j) eps^j (-1)^((j-1)/2)
    double im = 0.0;
    double binom = static_cast<double>(n); // C(n,1)
    for (long j = 1; j <= n; j += 2) {
        const double sgn = (((j - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
        im += sgn * binom * std::pow(x, static_cast<double>(n - j)) * std::pow(eps, static_cast<double>(j));
        binom *= static_cast<double>((n - j) * (n - j - 1)) /
                 static_cast<double>((j + 1) * (j + 2));
    }
    double fact = 1.0;
    for (long i = 2; i <= 2 * m; ++i) fact *= static_cast<double>(i);
    const double r2 = x * x + eps * eps;
    return fact / std::numbers::pi * im * std::pow(r2, -static_cast<double>(n));
}

struct IntegerOrderReport {
    struct Row {
        double x;
        double kernel_value;     // regularized kernel at alpha = 2m
        double lorentzian_value; // (-1)^(m+1) d^(2m)/dx^(2m) of periodized Lorentzian
        double abs_error;
    };
    long m = 0;
    double eps = 0.0;
    std::vector<Row> rows;
    double max_rel_error = 0.0;
};

/// Check that the regularized kernel at alpha = 2m equals
/// (-1)^(m+1) times the 2m-th derivative of the periodized Lorentzian.
inline IntegerOrderReport integer_order_check(long m, double L, double eps, long n_images = 64,
                                              const std::vector<double>& xs = {}) {
    if (m < 0) throw DomainError("integer_order_check: m must be >= 0");
    if (!(eps > 0.0)) throw DomainError("integer_order_check: eps must be > 0");
    IntegerOrderReport report;
    report.m = m;
    report.eps = eps;
    std::vector<double> points = xs;
    if (points.empty())
        points = {0.0, 0.25 * eps, eps, 4.0 * eps, 0.1 * L, 0.25 * L, 0.5 * L, 0.75 * L};

    const double sign = (m % 2 == 0) ? -1.0 : 1.0; // (-1)^(m+1)
    for (double x : points) {
        double kernel = 0.0;
        double lorentz = 0.0;
        if (m == 0) {
            // alpha -> 0+ limit: the kernel degenerates to the negative
            // delta; compare the single regularized image (alpha = 0 itself
            // is outside FracOrder) against the Lorentzian directly.
            const std::complex<double> z(x, eps);
            kernel = -(1.0 / std::numbers::pi) * (std::complex<double>(0.0, 1.0) / z).real();
            lorentz = sign * lorentzian_derivative(0, x, eps);
        } else {
            KernelSpec spec = KernelSpec::periodic(FracOrder(2.0 * static_cast<double>(m)), L, 1.0, 1.0, eps);
            kernel = periodic_kernel_regularized(spec, x, n_images);
            double acc = 0.0;
            const double xr = detail::principal_interval(x, L);
            for (long n = -n_images; n <= n_images; ++n)
                acc += lorentzian_derivative(m, xr - static_cast<double>(n) * L, eps);
            lorentz = sign * acc;
        }
        const double err = std::fabs(kernel - lorentz);
        report.rows.push_back({x, kernel, lorentz, err});
        const double scale = std::max(std::fabs(lorentz), std::pow(eps, -2.0 * static_cast<double>(m) - 1.0));
        report.max_rel_error = std::max(report.max_rel_error, err / scale);
    }
    return report;
}

// ---------------------------------------------------------------------------
// discrete -> continuum convergence

struct ConvergenceReport {
    struct Row {
        double h;
        long n;
        long p;
        double x;
        double discrete_value;  // -mu(h) h^-2 f_N(|p|)
        double continuum_value; // rho0 A_alpha K_L(x)
        double abs_error;
    };
    std::vector<Row> rows;
    double fitted_order = 0.0; // least-squares slope of log(err) vs log(h)
};

/// Scaled discrete kernel against the continuum periodic kernel along a
/// sequence of lattice constants. Every h must align x and L with the
/// lattice (x/h and L/h integral within 1e-9).
inline ConvergenceReport convergence_study(const FracOrder& order, double L, double rho0,
                                           double a_alpha, double x,
                                           const std::vector<double>& h_sequence) {
    if (!(L > 0.0)) throw DomainError("convergence_study: L must be > 0");
    if (!(x > 0.0 && x < L)) throw DomainError("convergence_study: x must lie inside (0, L)");
    if (h_sequence.size() < 2) throw DomainError("convergence_study: need at least two h values");
    for (std::size_t i = 1; i < h_sequence.size(); ++i)
        if (!(h_sequence[i] < h_sequence[i - 1]))
            throw DomainError("convergence_study: h sequence must be strictly decreasing");

    KernelSpec kspec = KernelSpec::periodic(order, L);
    const double continuum = rho0 * a_alpha * periodic_kernel_zeta(kspec, x);

    ConvergenceReport report;
    for (double h : h_sequence) {
        const double n_real = L / h;
        const double p_real = x / h;
        const long n = static_cast<long>(std::llround(n_real));
        const long p = static_cast<long>(std::llround(p_real));
        if (std::fabs(n_real - static_cast<double>(n)) > 1e-9 * std::max(1.0, n_real))
            throw AlignmentError("convergence_study: L/h = " + std::to_string(n_real) +
                                 " is not an integer");
        if (std::fabs(p_real - static_cast<double>(p)) > 1e-9 * std::max(1.0, p_real))
            throw AlignmentError("convergence_study: x/h = " + std::to_string(p_real) +
                                 " is not an integer");
        const ScalingConstants sc = scaling_constants(h, order, rho0, a_alpha);
        chain::ChainSpec cspec = chain::ChainSpec::finite(n, order, sc.omega2, sc.mu, h);
        chain::SymbolRow row = chain::build_symbol_row(cspec, chain::BuildMethod::Spectral);
        const double discrete = -sc.mu / (h * h) * row.at(p);
        report.rows.push_back({h, n, p, x, discrete, continuum, std::fabs(discrete - continuum)});
    }

    // least-squares slope of log(error) against log(h)
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    long cnt = 0;
    for (const auto& r : report.rows) {
        if (r.abs_error <= 0.0) continue;
        const double lx = std::log(r.h), ly = std::log(r.abs_error);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++cnt;
    }
    if (cnt >= 2) {
        const double d = static_cast<double>(cnt) * sxx - sx * sx;
        if (d != 0.0) report.fitted_order = (static_cast<double>(cnt) * sxy - sx * sy) / d;
    }
    return report;
}

/// Window integral of the regularized infinite-space kernel over [-X, X];
/// shrinks relative to the peak scale (alpha!/pi) eps^-alpha as eps -> 0,
/// reflecting constant-field annihilation in the zero-dimensional limit.
inline double zero_string_limit_check(const FracOrder& order, double eps, double X,
                                      double quad_tol = 1e-9) {
    if (!(eps > 0.0)) throw DomainError("zero_string_limit_check: eps must be > 0");
    if (!(X > 10.0 * eps)) throw DomainError("zero_string_limit_check: X must be >> eps");
    const auto integrand = [&](double x) { return riesz_kernel_regularized(order, x, eps); };
    // kernel is even: integrate [0, X] and double, panels refined at 0
    const std::vector<double> panels = quadrature::geometric_breakpoints(0.0, X, 0.0, eps / 16.0);
    quadrature::QuadResult r = quadrature::integrate_panels(integrand, panels, 0.5 * quad_tol);
    return 2.0 * r.value;
}

} // namespace fraclap::continuum
