#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fraclap/chain.hpp"
#include "fraclap/continuum.hpp"
#include "fraclap/matrix.hpp"
#include "fraclap/specfun.hpp"

namespace fraclap::verify {

struct CheckResult {
    std::string name;
    double residual = 0.0;  // worst measured deviation, in the check's own units
    double threshold = 0.0; // pass iff residual <= threshold
    bool pass = false;
    std::string detail;
};

namespace detail {

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
/// Self-contained so the verify suite does not depend on an external
/// solver; tests cross-check against an independent one.
inline std::vector<double> jacobi_eigenvalues(DenseMatrix a, std::size_t max_sweeps = 100) {
    const std::size_t n = a.size();
    if (n == 0) return {};
    for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0, diag = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            diag += std::fabs(a(i, i));
            for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
        }
        if (std::sqrt(off) <= 1e-15 * std::max(1.0, diag)) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::fabs(apq) <= 1e-300) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

inline double rel_err(double got, double want) {
    const double scale = std::max(std::fabs(want), 1e-300);
    return std::fabs(got - want) / scale;
}

inline const std::vector<double>& alpha_set() {
    static const std::vector<double> a{0.5, 1.0, 1.5, 2.0, 2.5, std::numbers::pi, 3.7};
    return a;
}

inline CheckResult make(const std::string& name, double residual, double threshold,
                        const std::string& detail) {
    return {name, residual, threshold, residual <= threshold, detail};
}

} // namespace detail

// --------------------------------------------------------------------------
// special-function identities

inline CheckResult check_euler_reflection() {
    std::mt19937 rng(20240811);
    std::uniform_real_distribution<double> uni(1e-3, 1.0 - 1e-3);
    std::uniform_int_distribution<int> shift(0, 20);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double mu = uni(rng);
        const int n = shift(rng);
        // Gamma(mu+n) Gamma(1-mu-n) = pi / sin(pi (mu+n))
        const SignedLogValue lhs = specfun::gamma(mu + n) * specfun::gamma(1.0 - mu - n);
        const double rhs = std::numbers::pi / specfun::sin_pi(mu + n);
        worst = std::max(worst, detail::rel_err(lhs.value(), rhs));
    }
    return detail::make("euler-reflection", worst, 1e-12, "1000 random mu in (0,1), shifts n <= 20");
}

inline CheckResult check_duplication() {
    std::mt19937 rng(20240812);
    std::uniform_real_distribution<double> uni(1e-3, 30.0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double a = uni(rng);
        const double lhs = std::exp(std::lgamma(a + 1.0) - std::lgamma(a / 2.0 + 1.0));
        const double rhs = std::pow(2.0, a) / std::sqrt(std::numbers::pi) *
                           std::exp(std::lgamma((a + 1.0) / 2.0));
        worst = std::max(worst, detail::rel_err(lhs, rhs));
    }
    return detail::make("duplication", worst, 1e-12, "alpha!/ (alpha/2)! vs 2^alpha/sqrt(pi) ((alpha-1)/2)!, 1000 samples in (0,30)");
}

inline CheckResult check_binomial_recursion() {
    double worst = 0.0;
    for (double alpha : {0.5, 1.0, 1.5, 2.5, std::numbers::pi, 3.7}) {
        const FracOrder order(alpha);
        for (long p = 0; p <= 50; ++p) {
            const double c0 = specfun::generalized_binomial(order, p).value();
            const double c1 = specfun::generalized_binomial(order, p + 1).value();
            const double want = c0 * (alpha / 2.0 - p) / (alpha / 2.0 + p + 1.0);
            const double scale = std::max({std::fabs(c1), std::fabs(want), 1e-300});
            worst = std::max(worst, std::fabs(c1 - want) / scale);
        }
    }
    return detail::make("binomial-recursion", worst, 1e-12, "coefficient ratio recursion, |p| <= 50");
}

inline CheckResult check_binomial_addition() {
    double worst = 0.0;
    for (double alpha : {0.5, 1.0, 1.5, 2.5, std::numbers::pi, 3.7}) {
        const FracOrder order(alpha);
        for (long p = -50; p <= 50; ++p) {
            const SignedLogValue a = specfun::generalized_binomial(order, p);
            const SignedLogValue b = specfun::generalized_binomial(order, p - 1);
            // (alpha+1)! / ((alpha/2+p)! (alpha/2-p+1)!)
            const SignedLogValue num{1, std::lgamma(alpha + 2.0)};
            const SignedLogValue d1 = specfun::gamma(alpha / 2.0 + p + 1.0);
            const SignedLogValue d2 = specfun::gamma(alpha / 2.0 - p + 2.0);
            const double want = (num / (d1 * d2)).value();
            const double got = a.value() + b.value();
            const double scale = std::max({std::fabs(a.value()), std::fabs(want), 1e-300});
            worst = std::max(worst, std::fabs(got - want) / scale);
        }
    }
    return detail::make("binomial-addition", worst, 1e-12, "addition rule to order alpha+1, |p| <= 50");
}

inline CheckResult check_integer_binomial() {
    double worst = 0.0;
    for (long m : {1L, 2L, 3L, 5L}) {
        const FracOrder order(2.0 * static_cast<double>(m));
        // exact integer binomials by Pascal recursion
        std::vector<double> pascal(static_cast<std::size_t>(2 * m + 1), 0.0);
        pascal[0] = 1.0;
        for (long row = 1; row <= 2 * m; ++row)
            for (long j = row; j >= 1; --j) pascal[static_cast<std::size_t>(j)] += pascal[static_cast<std::size_t>(j - 1)];
        for (long p = 0; p <= m; ++p) {
            const double want = pascal[static_cast<std::size_t>(m + p)];
            const double got = specfun::generalized_binomial(order, p).value();
            worst = std::max(worst, detail::rel_err(got, want));
        }
        for (long p = m + 1; p <= m + 6; ++p)
            worst = std::max(worst, std::fabs(specfun::generalized_binomial(order, p).value()));
    }
    return detail::make("integer-binomial", worst, 1e-12, "alpha = 2m vs Pascal triangle, zero beyond |p| = m");
}

inline CheckResult check_diagonal_element() {
    double worst = 0.0;
    for (double alpha : detail::alpha_set()) {
        const FracOrder order(alpha);
        const double want = std::exp(std::lgamma(alpha + 1.0) - 2.0 * std::lgamma(alpha / 2.0 + 1.0));
        worst = std::max(worst, detail::rel_err(chain::element_infinite(order, 0), want));
        if (!(chain::element_infinite(order, 0) > 0.0)) worst = std::max(worst, 1.0);
    }
    return detail::make("diagonal-element", worst, 1e-12, "f(0) = alpha!/((alpha/2)!)^2 > 0");
}

inline CheckResult check_branch_consistency() {
    double worst = 0.0;
    for (double alpha : {0.5, 1.0, 1.5, 2.5, std::numbers::pi, 3.7}) {
        const FracOrder order(alpha);
        if (order.is_integer_half()) continue;
        for (long p = 0; p <= order.p0() + 10; ++p) {
            const double b1 = specfun::detail::binomial_gamma_ratio(order, p).value();
            const double b2 = specfun::detail::binomial_reflected(order, p).value();
            worst = std::max(worst, detail::rel_err(b1, b2));
        }
    }
    return detail::make("branch-consistency", worst, 1e-10, "gamma-ratio vs reflected branch on continuation");
}

// --------------------------------------------------------------------------
// chain checks

inline CheckResult check_quadrature_oracle() {
    double worst = 0.0;
    for (double alpha : {0.5, 1.0, 2.5, 3.7}) {
        const FracOrder order(alpha);
        for (long p : {0L, 1L, 2L, 5L, 11L, 20L}) {
            const double closed = chain::element_infinite(order, p);
            const double quad = chain::element_infinite_quadrature(order, p, 1e-11);
            worst = std::max(worst, std::fabs(closed - quad));
        }
    }
    return detail::make("quadrature-oracle", worst, 1e-10, "closed form vs Brillouin-zone integral, absolute");
}

inline CheckResult check_spectral_imagesum() {
    double worst = 0.0;
    for (long n : {2L, 3L, 8L, 17L}) {
        for (double alpha : detail::alpha_set()) {
            const chain::ChainSpec spec = chain::ChainSpec::finite(n, FracOrder(alpha));
            for (long p = 0; p < n; ++p) {
                const double s = chain::element_periodic_spectral(spec, p);
                const double i = chain::element_periodic_imagesum(spec, p, 1e-11);
                const double tol = std::max(1e-8 * std::fabs(s), 1e-10);
                worst = std::max(worst, std::fabs(s - i) / tol);
            }
        }
    }
    return detail::make("spectral-imagesum", worst, 1.0, "normalized to max(1e-8 rel, 1e-10 abs)");
}

inline CheckResult check_zero_mode() {
    double worst = 0.0;
    for (long n : {1L, 2L, 3L, 8L, 17L, 64L}) {
        for (double alpha : detail::alpha_set()) {
            const chain::ChainSpec spec = chain::ChainSpec::finite(n, FracOrder(alpha));
            const chain::SymbolRow row = chain::build_symbol_row(spec);
            double sum = 0.0;
            for (double v : row.values) sum += v;
            worst = std::max(worst, std::fabs(sum));
        }
    }
    return detail::make("zero-mode", worst, 1e-10, "row sums over N in {1,2,3,8,17,64}");
}

inline CheckResult check_negative_semidefinite() {
    double worst = 0.0;
    std::string detail_str;
    for (long n : {8L, 17L}) {
        for (double alpha : {1.5, 3.7}) {
            const chain::ChainSpec spec = chain::ChainSpec::finite(n, FracOrder(alpha));
            const chain::SymbolRow row = chain::build_symbol_row(spec);
            const DenseMatrix m = chain::laplacian_matrix(spec, row);
            const std::vector<double> ev = detail::jacobi_eigenvalues(m);
            long zeros = 0;
            for (double e : ev) {
                if (std::fabs(e) <= 1e-10) ++zeros;
                else if (e > 0.0) worst = std::max(worst, e);
            }
            if (zeros != 1) worst = std::max(worst, 1.0);
        }
    }
    return detail::make("negative-semidefinite", worst, 1e-10,
                        "Jacobi spectrum: one zero mode, all other eigenvalues negative");
}

inline CheckResult check_infinite_limit() {
    // |f_N(p) - f_inf(p)| must fall at least like N^-alpha
    double worst = 0.0;
    const double alpha = 1.5;
    const FracOrder order(alpha);
    const double f_inf = chain::element_infinite(order, 1);
    double prev = 0.0;
    for (long n : {8L, 16L, 32L, 64L}) {
        const chain::ChainSpec spec = chain::ChainSpec::finite(n, order);
        const double err = std::fabs(chain::element_periodic_spectral(spec, 1) - f_inf);
        if (prev > 0.0) worst = std::max(worst, err / (prev * std::pow(2.0, -alpha)));
        prev = err;
    }
    return detail::make("infinite-limit", worst, 1.0, "error ratio per doubling vs 2^-alpha bound");
}

inline CheckResult check_asymptotic_tail() {
    double worst = 0.0;
    for (double alpha : {1.0, 1.5}) {
        const FracOrder order(alpha);
        const double ratio = chain::element_infinite(order, 1000) / chain::asymptotic_element(order, 1000);
        worst = std::max(worst, std::fabs(ratio - 1.0));
    }
    return detail::make("asymptotic-tail", worst, 0.01, "f(1000) against the power-law asymptote");
}

inline CheckResult check_alternating_sign() {
    double bad = 0.0;
    for (double alpha : {0.6, 1.0, 2.5, 3.7}) {
        const FracOrder order(alpha);
        if (order.is_integer_half()) continue;
        const long p0 = order.p0();
        for (long p = 0; p <= p0; ++p) {
            const double v = chain::element_infinite(order, p);
            if (!((p % 2 == 0 && v > 0.0) || (p % 2 == 1 && v < 0.0))) bad += 1.0;
        }
        const double expected_sign = (p0 % 2 == 0) ? 1.0 : -1.0;
        for (long p = p0 + 1; p <= p0 + 30; ++p) {
            const double v = chain::element_infinite(order, p);
            if (!(v * expected_sign > 0.0)) bad += 1.0;
        }
    }
    return detail::make("alternating-sign", bad, 0.0, "alternation up to p0, constant sign (-1)^p0 beyond");
}

inline CheckResult check_classical_recovery() {
    const long n = 8;
    const chain::ChainSpec spec = chain::ChainSpec::finite(n, FracOrder(2.0));
    const chain::SymbolRow row = chain::build_symbol_row(spec);
    double worst = 0.0;
    for (long p = 0; p < n; ++p) {
        const double want = (p == 0) ? 2.0 : ((p == 1 || p == n - 1) ? -1.0 : 0.0);
        worst = std::max(worst, std::fabs(row.values[static_cast<std::size_t>(p)] - want) /
                                    std::max(1.0, std::fabs(want)));
    }
    const chain::DispersionTable table = chain::dispersion(spec);
    for (const auto& e : table.entries) {
        const double want = 4.0 * std::pow(std::sin(e.kappa / 2.0), 2.0);
        worst = std::max(worst, std::fabs(e.omega2 - want) / std::max(1.0, want));
    }
    return detail::make("classical-recovery", worst, 1e-12, "alpha = 2 Born-von-Karman row and dispersion");
}

// --------------------------------------------------------------------------
// continuum checks

inline CheckResult check_riesz_regularized() {
    double worst = 0.0;
    for (double alpha : {0.5, 1.0, 1.5}) {
        const FracOrder order(alpha);
        const double point = continuum::riesz_kernel_infinite(order, 1.0);
        const double reg = continuum::riesz_kernel_regularized(order, 1.0, 1e-6);
        worst = std::max(worst, detail::rel_err(reg, point));
    }
    return detail::make("riesz-regularized", worst, 1e-4, "eps = 1e-6 regularization vs pointwise kernel at x = 1");
}

inline CheckResult check_kernel_zeta_imagesum() {
    double worst = 0.0;
    for (double alpha : {0.5, 1.0, 1.5, 2.5, 3.7}) {
        const continuum::KernelSpec spec = continuum::KernelSpec::periodic(FracOrder(alpha), 1.0);
        for (double xi = 0.1; xi < 0.95; xi += 0.1) {
            const double z = continuum::periodic_kernel_zeta(spec, xi);
            const double s = continuum::periodic_kernel_imagesum(spec, xi, 1e-10);
            const double tol = std::max(1e-8 * std::fabs(z), 1e-12);
            worst = std::max(worst, std::fabs(z - s) / tol);
        }
    }
    return detail::make("kernel-zeta-imagesum", worst, 1.0, "normalized to max(1e-8 rel, 1e-12 abs)");
}

inline CheckResult check_kernel_value() {
    const continuum::KernelSpec spec = continuum::KernelSpec::periodic(FracOrder(1.0), 1.0);
    const double z = continuum::periodic_kernel_zeta(spec, 0.5);
    const double s = continuum::periodic_kernel_imagesum(spec, 0.5, 1e-10);
    const double worst = std::max(detail::rel_err(z, std::numbers::pi), detail::rel_err(s, std::numbers::pi));
    return detail::make("kernel-value", worst, 1e-8, "K_{L=1}^{(1)}(1/2) = pi by both routes");
}

inline CheckResult check_periodic_symmetry() {
    double worst = 0.0;
    const continuum::KernelSpec spec = continuum::KernelSpec::periodic(FracOrder(1.3), 1.7);
    for (double xi : {0.15, 0.3, 0.45}) {
        const double L = 1.7;
        const double a = continuum::periodic_kernel_zeta(spec, xi * L);
        const double b = continuum::periodic_kernel_zeta(spec, L - xi * L);
        const double c = continuum::periodic_kernel_zeta(spec, xi * L + 3.0 * L);
        worst = std::max(worst, detail::rel_err(b, a));
        worst = std::max(worst, detail::rel_err(c, a));
    }
    return detail::make("periodic-symmetry", worst, 1e-12, "K(x) = K(L-x) = K(x+nL)");
}

inline CheckResult check_integer_degeneration() {
    double worst = 0.0;
    const continuum::KernelSpec spec = continuum::KernelSpec::periodic(FracOrder(2.0), 1.0);
    for (double x : {0.2, 0.5, 0.8})
        worst = std::max(worst, std::fabs(continuum::periodic_kernel_zeta(spec, x)));
    for (long m : {0L, 1L, 2L}) {
        const continuum::IntegerOrderReport rep = continuum::integer_order_check(m, 1.0, 1e-2);
        worst = std::max(worst, rep.max_rel_error);
    }
    return detail::make("integer-degeneration", worst, 1e-8,
                        "alpha = 2m: zero kernel away from lattice, Lorentzian-derivative match");
}

inline CheckResult check_spectral_law() {
    double worst = 0.0;
    for (double alpha : {1.0, 2.0}) {
        for (long l : {1L, 2L}) {
            const double measured =
                continuum::measure_eigenvalue_extrapolated(FracOrder(alpha), 1.0, l, 1e-2, 3, 1e-6);
            const double want = continuum::periodic_eigenvalue(FracOrder(alpha), 1.0, l);
            worst = std::max(worst, detail::rel_err(measured, want));
        }
    }
    return detail::make("spectral-law", worst, 0.01, "extrapolated Bloch convolution vs -|k_l|^alpha");
}

inline CheckResult check_constant_annihilation() {
    const continuum::KernelSpec spec = continuum::KernelSpec::periodic(FracOrder(1.0), 1.0, 1.0, 1.0, 1e-2);
    const double lambda0 = continuum::verify_eigen_by_convolution(spec, 0, 1e-6);
    return detail::make("constant-annihilation", std::fabs(lambda0), 1e-4,
                        "convolution with the l = 0 mode");
}

inline CheckResult check_fourier_consistency() {
    // the measured Fourier coefficient of K_L equals the infinite-space
    // transform -|k|^alpha at k = k_l
    const double alpha = 1.5;
    const double L = 1.0;
    const long l = 2;
    const double measured = continuum::measure_eigenvalue_extrapolated(FracOrder(alpha), L, l, 1e-2, 3, 1e-6);
    const double k = 2.0 * std::numbers::pi * static_cast<double>(l) / L;
    const double want = -std::pow(k, alpha);
    return detail::make("fourier-consistency", detail::rel_err(measured, want), 0.01,
                        "int_0^L K_L e^{-i k_l x} dx vs continuous spectrum at k_l");
}

inline CheckResult check_continuum_limit() {
    std::vector<double> hs;
    for (int k = 3; k <= 8; ++k) hs.push_back(std::pow(2.0, -k));
    const continuum::ConvergenceReport rep =
        continuum::convergence_study(FracOrder(1.0), 1.0, 1.0, 1.0, 0.5, hs);
    double worst = 0.0;
    for (std::size_t i = 1; i < rep.rows.size(); ++i)
        if (!(rep.rows[i].abs_error < rep.rows[i - 1].abs_error)) worst = std::max(worst, 1.0);
    const double ratio = rep.rows.back().abs_error / rep.rows.front().abs_error;
    worst = std::max(worst, ratio / 0.1);
    std::ostringstream os;
    os << "fitted order " << rep.fitted_order << ", final/initial error " << ratio;
    return detail::make("continuum-limit", worst, 1.0, os.str());
}

inline CheckResult check_linfty_recovery() {
    // The image-term deficit is bounded by the tail integral ~ L^-alpha:
    // D(L) L^alpha must decrease (the pointwise deficit itself decays one
    // order faster).
    double worst = 0.0;
    for (double alpha : {0.5, 1.0, 1.5}) {
        const FracOrder order(alpha);
        const double x = 1.0;
        const double k_inf = continuum::riesz_kernel_infinite(order, x);
        double prev = -1.0;
        for (double L : {2.0, 4.0, 8.0, 16.0, 32.0}) {
            const continuum::KernelSpec spec = continuum::KernelSpec::periodic(order, L);
            const double d = std::fabs(continuum::periodic_kernel_zeta(spec, x) - k_inf) *
                             std::pow(L, alpha);
            if (prev >= 0.0 && !(d < prev)) worst = std::max(worst, d / prev);
            prev = d;
        }
    }
    return detail::make("linfty-recovery", worst, 1.0,
                        "deficit scaled by L^alpha decreases over L in {2,...,32}");
}

inline CheckResult check_zero_string() {
    double worst = 0.0;
    for (double alpha : {1.0, 2.0}) {
        const FracOrder order(alpha);
        const double X = 10.0;
        double prev_norm = -1.0;
        for (double eps : {1e-3, 5e-4, 2.5e-4}) {
            const double integral = continuum::zero_string_limit_check(order, eps, X);
            const double peak_scale = std::exp(std::lgamma(alpha + 1.0)) / std::numbers::pi *
                                      std::pow(eps, -alpha);
            const double normalized = std::fabs(integral) / peak_scale;
            worst = std::max(worst, normalized / 1e-3);
            if (prev_norm >= 0.0 && normalized > prev_norm * 1.0001 + 1e-12)
                worst = std::max(worst, 2.0);
            prev_norm = normalized;
        }
    }
    return detail::make("zero-string", worst, 1.0,
                        "window integral small on the peak scale and shrinking with eps");
}

inline CheckResult check_figure_dispersion() {
    double worst = 0.0;
    for (double alpha : {0.5, 1.0, 2.0, 3.0, 4.0}) {
        const double peak = 0.5 * std::pow(2.0, alpha / 2.0) *
                            std::pow(std::fabs(std::sin(std::numbers::pi / 2.0)), alpha / 2.0);
        worst = std::max(worst, detail::rel_err(peak, 0.5 * std::pow(2.0, alpha / 2.0)));
    }
    // alpha -> 0+: surface flattens to 0.5 away from kappa = 0
    for (double kappa : {0.5, 1.5, 3.0}) {
        const double v = 0.5 * std::pow(2.0 * std::fabs(std::sin(kappa / 2.0)), 0.005);
        if (std::fabs(v - 0.5) > 0.02) worst = std::max(worst, 1.0);
    }
    return detail::make("figure-dispersion", worst, 1e-12, "peak 0.5 2^(alpha/2) at kappa = pi; alpha->0 plateau");
}

inline CheckResult check_figure_kernel_sign() {
    double bad = 0.0;
    for (double alpha : {0.5, 1.0, 1.5, 1.9}) {
        const continuum::KernelSpec spec = continuum::KernelSpec::periodic(FracOrder(alpha), 1.0);
        if (!(continuum::periodic_kernel_zeta(spec, 0.4) > 0.0)) bad += 1.0;
    }
    {
        const continuum::KernelSpec spec = continuum::KernelSpec::periodic(FracOrder(2.0), 1.0);
        if (continuum::periodic_kernel_zeta(spec, 0.4) != 0.0) bad += 1.0;
    }
    for (double alpha : {2.5, 3.0, 3.7}) {
        const continuum::KernelSpec spec = continuum::KernelSpec::periodic(FracOrder(alpha), 1.0);
        if (!(continuum::periodic_kernel_zeta(spec, 0.4) < 0.0)) bad += 1.0;
    }
    return detail::make("figure-kernel-sign", bad, 0.0, "positive/zero/negative across alpha in (0,2)/{2}/(2,4)");
}

// --------------------------------------------------------------------------

inline const std::vector<std::pair<std::string, CheckResult (*)()>>& registry() {
    static const std::vector<std::pair<std::string, CheckResult (*)()>> reg{
        {"euler-reflection", &check_euler_reflection},
        {"duplication", &check_duplication},
        {"binomial-recursion", &check_binomial_recursion},
        {"binomial-addition", &check_binomial_addition},
        {"integer-binomial", &check_integer_binomial},
        {"diagonal-element", &check_diagonal_element},
        {"branch-consistency", &check_branch_consistency},
        {"quadrature-oracle", &check_quadrature_oracle},
        {"spectral-imagesum", &check_spectral_imagesum},
        {"zero-mode", &check_zero_mode},
        {"negative-semidefinite", &check_negative_semidefinite},
        {"infinite-limit", &check_infinite_limit},
        {"asymptotic-tail", &check_asymptotic_tail},
        {"alternating-sign", &check_alternating_sign},
        {"classical-recovery", &check_classical_recovery},
        {"riesz-regularized", &check_riesz_regularized},
        {"kernel-zeta-imagesum", &check_kernel_zeta_imagesum},
        {"kernel-value", &check_kernel_value},
        {"periodic-symmetry", &check_periodic_symmetry},
        {"integer-degeneration", &check_integer_degeneration},
        {"spectral-law", &check_spectral_law},
        {"constant-annihilation", &check_constant_annihilation},
        {"fourier-consistency", &check_fourier_consistency},
        {"continuum-limit", &check_continuum_limit},
        {"linfty-recovery", &check_linfty_recovery},
        {"zero-string", &check_zero_string},
        {"figure-dispersion", &check_figure_dispersion},
        {"figure-kernel-sign", &check_figure_kernel_sign},
    };
    return reg;
}

inline std::vector<std::string> available_checks() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) names.push_back(name);
    return names;
}

/// Run checks by name; empty selection runs everything. Unknown names
/// raise DomainError.
inline std::vector<CheckResult> run_checks(const std::vector<std::string>& selection = {}) {
    std::vector<CheckResult> results;
    if (selection.empty()) {
        for (const auto& [name, fn] : registry()) results.push_back(fn());
        return results;
    }
    for (const std::string& want : selection) {
        bool found = false;
        for (const auto& [name, fn] : registry()) {
            if (name == want) {
                results.push_back(fn());
                found = true;
                break;
            }
        }
        if (!found) throw DomainError("unknown check: " + want);
    }
    return results;
}

} // namespace fraclap::verify
