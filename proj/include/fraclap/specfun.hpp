#pragma once

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "fraclap/errors.hpp"
#include "fraclap/frac_order.hpp"
#include "fraclap/signed_log.hpp"

namespace fraclap::specfun {

/// sin(pi*x) with exact argument reduction; exact zero at integer x.
inline double sin_pi(double x) {
    const double n = std::round(x);
    const double r = x - n;
    if (r == 0.0) return 0.0;
    const double s = std::sin(std::numbers::pi * r);
    // sin(pi(n+r)) = (-1)^n sin(pi r)
    return (static_cast<long long>(n) % 2 == 0) ? s : -s;
}

/// cos(pi*x) with exact argument reduction; exact zero at half-integer x.
inline double cos_pi(double x) {
    const double n = std::round(x);
    const double r = x - n;
    double c;
    if (std::fabs(r) == 0.5) {
        c = 0.0;
    } else {
        c = std::cos(std::numbers::pi * r);
    }
    return (static_cast<long long>(n) % 2 == 0) ? c : -c;
}

namespace detail {

inline bool near_nonpositive_integer(double x, double tol) {
    if (x > 0.5) return false;
    return std::fabs(x - std::round(x)) < tol;
}

} // namespace detail

/// Gamma(x) as a signed log value.
///
/// Positive arguments go straight to lgamma; negative non-integer
/// arguments route through the reflection formula
/// Gamma(x) = pi / (sin(pi x) Gamma(1-x)), which keeps every lgamma
/// argument positive. Arguments within FracOrder::tol_pole of
/// {0, -1, -2, ...} raise PoleError.
inline SignedLogValue gamma(double x) {
    if (detail::near_nonpositive_integer(x, FracOrder::tol_pole))
        throw PoleError("gamma: argument " + std::to_string(x) + " is at or near a pole");
    if (x > 0.0)
        return {1, std::lgamma(x)};
    const double s = sin_pi(x);
    const int sign = s > 0.0 ? 1 : -1;
    const double log_mag = std::log(std::numbers::pi) - std::log(std::fabs(s)) - std::lgamma(1.0 - x);
    return {sign, log_mag};
}

/// Gamma(x) collapsed to double.
inline double gamma_value(double x) { return gamma(x).value(); }

/// log Gamma(x) for x > 0 (thin wrapper, keeps call sites uniform).
inline double log_gamma_pos(double x) { return std::lgamma(x); }

namespace detail {

/// Branch for 0 <= p <= p0:  alpha! / ((alpha/2+p)! (alpha/2-p)!),
/// all gamma arguments positive. Extended to any p via the analytically
/// continued gamma, which is what "evaluated by continuation" means for
/// the cross-branch consistency checks.
inline SignedLogValue binomial_gamma_ratio(const FracOrder& order, long p) {
    p = std::labs(p);
    const double a = order.alpha();
    const double h = order.half();
    const SignedLogValue num{1, std::lgamma(a + 1.0)};
    const SignedLogValue d1{1, std::lgamma(h + static_cast<double>(p) + 1.0)};
    const SignedLogValue d2 = gamma(h - static_cast<double>(p) + 1.0);
    return num / (d1 * d2);
}

/// Branch for |p| > alpha/2:
/// (-1)^(p+1) (alpha!/pi) sin(alpha pi/2) Gamma(p-alpha/2) / Gamma(alpha/2+p+1).
/// Extended to p <= alpha/2 via the continued gamma in the same way.
inline SignedLogValue binomial_reflected(const FracOrder& order, long p) {
    p = std::labs(p);
    const double a = order.alpha();
    const double h = order.half();
    const double s = sin_pi(h); // sin(alpha pi / 2)
    if (s == 0.0) return SignedLogValue::zero();
    const SignedLogValue gnum = gamma(static_cast<double>(p) - h);
    int sign = (p % 2 == 0) ? -1 : 1; // (-1)^(p+1)
    sign *= (s > 0.0 ? 1 : -1) * gnum.sign;
    const double log_mag = std::lgamma(a + 1.0) - std::log(std::numbers::pi) +
                           std::log(std::fabs(s)) + gnum.log_magnitude -
                           std::lgamma(h + static_cast<double>(p) + 1.0);
    return {sign, log_mag};
}

} // namespace detail

/// Generalized centered binomial coefficient (alpha choose alpha/2 + p).
///
/// Symmetric in p <-> -p. For integer alpha/2 = m this is the plain
/// centered binomial (2m)!/((m+p)!(m-p)!), exactly zero for |p| > m.
/// Otherwise the two closed-form branches are selected so that every
/// gamma argument stays positive: the gamma-ratio form for |p| <= p0 and
/// the reflected form beyond.
inline SignedLogValue generalized_binomial(const FracOrder& order, long p) {
    p = std::labs(p);
    if (order.is_integer_half()) {
        const long m = order.half_integer();
        if (p > m) return SignedLogValue::zero();
        const double lm = std::lgamma(2.0 * m + 1.0) - std::lgamma(static_cast<double>(m + p) + 1.0) -
                          std::lgamma(static_cast<double>(m - p) + 1.0);
        return {1, lm};
    }
    if (p <= order.p0()) return detail::binomial_gamma_ratio(order, p);
    return detail::binomial_reflected(order, p);
}

namespace detail {

// B_{2j} / (2j)! for the Euler-Maclaurin tail of the Hurwitz zeta.
inline constexpr double bernoulli_over_factorial[] = {
    1.0,
    0.083333333333333333333,   // B2/2!
    -0.0013888888888888888889, // B4/4!
    3.3068783068783068783e-05,
    -8.2671957671957671958e-07,
    2.0876756987868098979e-08,
    -5.2841901386874931848e-10,
    1.3382536530684678833e-11,
    -3.3896802963225828668e-13,
    8.5860620562778445641e-15,
    -2.1748686985580618730e-16,
    5.5090028283602295152e-18,
    -1.3954464685812523341e-19,
    3.5347070396294674717e-21,
    -8.9535174270375468504e-23,
};

} // namespace detail

/// Hurwitz zeta(beta, x) = sum_{n>=0} (x+n)^(-beta) for beta > 1, x > 0.
///
/// Direct terms until x+n is comfortably large, then the Euler-Maclaurin
/// tail: integral + half term + Bernoulli corrections, stopping when the
/// correction drops below tol (default 1e-12 absolute).
inline double hurwitz_zeta(double beta, double x, double tol = 1e-12) {
    if (!(beta > 1.0))
        throw DomainError("hurwitz_zeta: beta must be > 1, got " + std::to_string(beta));
    if (!(x > 0.0))
        throw DomainError("hurwitz_zeta: x must be > 0, got " + std::to_string(x));

    // Enough direct terms that the asymptotic tail converges fast.
    const double target = std::max(10.0, beta);
    long kmax = 0;
    if (x < target) kmax = static_cast<long>(std::ceil(target - x)) + 1;

    double sum = 0.0, comp = 0.0; // Kahan
    for (long k = kmax - 1; k >= 0; --k) {
        const double term = std::pow(x + static_cast<double>(k), -beta);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }

    const double q = x + static_cast<double>(kmax);
    const double qp = std::pow(q, -beta);
    double tail = q * qp / (beta - 1.0) + 0.5 * qp; // integral + half term

    double poly = beta;        // beta (beta+1) ... running product
    double power = qp / q;     // q^(-beta-1), q^(-beta-3), ...
    for (std::size_t j = 1; j < std::size(detail::bernoulli_over_factorial); ++j) {
        const double corr = detail::bernoulli_over_factorial[j] * poly * power;
        tail += corr;
        if (std::fabs(corr) < 0.1 * tol) break;
        poly *= (beta + 2.0 * j - 1.0) * (beta + 2.0 * j);
        power /= q * q;
    }
    return sum + tail;
}

/// Modified Hurwitz zeta: ztilde(beta, x) = sum_{n>=0} |x+n|^(-beta),
/// defined for beta > 1 and x in (-1, 1], x != 0. For x > 0 all terms are
/// positive and it coincides with hurwitz_zeta; for x in (-1, 0) only the
/// n = 0 term needs the absolute value.
inline double hurwitz_zeta_abs(double beta, double x, double tol = 1e-12) {
    if (!(beta > 1.0))
        throw DomainError("hurwitz_zeta_abs: beta must be > 1, got " + std::to_string(beta));
    if (!(x > -1.0 && x <= 1.0) || x == 0.0)
        throw DomainError("hurwitz_zeta_abs: x must lie in (-1, 1], x != 0, got " + std::to_string(x));
    if (x > 0.0) return hurwitz_zeta(beta, x, tol);
    return std::pow(-x, -beta) + hurwitz_zeta(beta, 1.0 + x, tol);
}

} // namespace fraclap::specfun
