#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "fraclap/errors.hpp"
#include "fraclap/frac_order.hpp"
#include "fraclap/matrix.hpp"
#include "fraclap/specfun.hpp"
#include "fraclap/quadrature.hpp"

namespace fraclap::chain {

/// Parameters of a cyclic chain of N identical particles.
///
/// n == 0 marks the infinite chain. omega2 is the squared frequency
/// Omega_alpha^2 (sec^-2) multiplying the power-law symbol, mu the
/// particle mass (g), h the lattice constant (cm).
struct ChainSpec {
    long n;
    FracOrder order;
    double omega2;
    double mu;
    double h;

    static ChainSpec finite(long n, FracOrder order, double omega2 = 1.0, double mu = 1.0,
                            double h = 1.0) {
        if (n < 1) throw DomainError("ChainSpec: finite chain needs N >= 1, got " + std::to_string(n));
        return ChainSpec(n, order, omega2, mu, h);
    }

    static ChainSpec infinite(FracOrder order, double omega2 = 1.0, double mu = 1.0, double h = 1.0) {
        return ChainSpec(0, order, omega2, mu, h);
    }

    bool is_finite() const { return n > 0; }
    double length() const { return static_cast<double>(n) * h; }

private:
    ChainSpec(long n_, FracOrder order_, double omega2_, double mu_, double h_)
        : n(n_), order(order_), omega2(omega2_), mu(mu_), h(h_) {
        if (!(omega2 > 0.0)) throw DomainError("ChainSpec: omega2 must be > 0");
        if (!(mu > 0.0)) throw DomainError("ChainSpec: mu must be > 0");
        if (!(h > 0.0)) throw DomainError("ChainSpec: h must be > 0");
    }
};

enum class BuildMethod { Spectral, ImageSum };

inline const char* to_string(BuildMethod m) {
    return m == BuildMethod::Spectral ? "spectral" : "imagesum";
}

/// First row f_N(|p|) of the symmetric circulant characteristic matrix,
/// scaled by Omega^2. The whole N x N operator is derived from it.
struct SymbolRow {
    FracOrder order;
    std::vector<double> values;
    BuildMethod generator = BuildMethod::Spectral;

    long size() const { return static_cast<long>(values.size()); }
    /// Cyclic access: at(p) == at(p + nN).
    double at(long p) const {
        const long n = size();
        long r = p % n;
        if (r < 0) r += n;
        return values[static_cast<std::size_t>(r)];
    }
};

/// Particle displacements u_p with cyclic indexing.
struct DisplacementField {
    std::vector<std::complex<double>> values;

    DisplacementField() = default;
    explicit DisplacementField(std::vector<std::complex<double>> v) : values(std::move(v)) {}
    static DisplacementField from_real(const std::vector<double>& v) {
        DisplacementField f;
        f.values.assign(v.begin(), v.end());
        return f;
    }
    static DisplacementField constant(long n, std::complex<double> c = 1.0) {
        DisplacementField f;
        f.values.assign(static_cast<std::size_t>(n), c);
        return f;
    }
    /// Bloch mode u_p = exp(i kappa_l p) for the N-periodic chain.
    static DisplacementField bloch(long n, long l) {
        DisplacementField f;
        f.values.resize(static_cast<std::size_t>(n));
        for (long p = 0; p < n; ++p) {
            const double phase = 2.0 * std::numbers::pi * static_cast<double>(l) *
                                 static_cast<double>(p) / static_cast<double>(n);
            f.values[static_cast<std::size_t>(p)] = {std::cos(phase), std::sin(phase)};
        }
        return f;
    }

    long size() const { return static_cast<long>(values.size()); }
};

/// Wave numbers kappa_l = 2 pi l / N with eigenvalues omega^2(kappa_l).
struct DispersionTable {
    struct Entry {
        long l;
        double kappa;
        double omega2;
    };
    std::vector<Entry> entries;
};

// ---------------------------------------------------------------------------
// infinite chain

/// Closed-form infinite-chain element f_inf(|p|) with Omega^2 = 1:
/// (-1)^p (alpha choose alpha/2 + p). Zero for |p| > alpha/2 at integer
/// alpha/2; sign alternates up to p0 and is constant (-1)^p0 beyond.
inline double element_infinite(const FracOrder& order, long p) {
    p = std::labs(p);
    const SignedLogValue c = specfun::generalized_binomial(order, p);
    if (c.is_zero()) return 0.0;
    const double v = c.value();
    return (p % 2 == 0) ? v : -v;
}

/// Brillouin-zone integral for the same element, the independent
/// quadrature oracle:
///   f(|p|) = 2^(alpha+1)/pi * int_0^{pi/2} sin^alpha(phi) cos(2 p phi) dphi.
inline double element_infinite_quadrature(const FracOrder& order, long p, double tol = 1e-11) {
    if (!(tol > 0.0)) throw DomainError("element_infinite_quadrature: tol must be > 0");
    p = std::labs(p);
    const double alpha = order.alpha();
    const double scale = std::pow(2.0, alpha + 1.0) / std::numbers::pi;
    const auto integrand = [&](double phi) {
        return std::pow(std::sin(phi), alpha) * std::cos(2.0 * static_cast<double>(p) * phi);
    };
    // scale applied afterwards, so the tolerance passed down is reduced
    quadrature::QuadResult r =
        quadrature::integrate(integrand, 0.0, std::numbers::pi / 2.0, tol / scale, 20000);
    return scale * r.value;
}

/// Power-law asymptote of the infinite-chain element,
/// -(alpha!/pi) sin(alpha pi/2) p^(-alpha-1); identically zero at integer
/// alpha/2. Used for tail bounds and convergence tests.
inline double asymptotic_element(const FracOrder& order, long p) {
    if (p < 1) throw DomainError("asymptotic_element: p must be >= 1");
    if (order.is_integer_half()) return 0.0;
    const double pref = std::exp(std::lgamma(order.alpha() + 1.0)) / std::numbers::pi *
                        specfun::sin_pi(order.half());
    return -pref * std::pow(static_cast<double>(p), -order.alpha() - 1.0);
}

// ---------------------------------------------------------------------------
// finite N-periodic chain

namespace detail {

inline long cyclic_index(long p, long n) {
    long r = p % n;
    if (r < 0) r += n;
    return r;
}

/// Spectral sum (1/N) sum_l cos(kappa_l p) (2 |sin(kappa_l/2)|)^alpha,
/// Omega^2 = 1. The imaginary part is analytically zero, so the sum is
/// taken over cosines only.
inline double spectral_core(const FracOrder& order, long n, long p) {
    const double alpha = order.alpha();
    double sum = 0.0, comp = 0.0;
    for (long l = 0; l < n; ++l) {
        const double sl = std::fabs(std::sin(std::numbers::pi * static_cast<double>(l) / static_cast<double>(n)));
        if (sl == 0.0) continue;
        const double lambda = std::pow(2.0 * sl, alpha);
        const double ang = 2.0 * std::numbers::pi * static_cast<double>(l) * static_cast<double>(p) /
                           static_cast<double>(n);
        const double term = lambda * std::cos(ang);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum / static_cast<double>(n);
}

/// Image sum sum_n f_inf(|p - nN|), Omega^2 = 1.
///
/// Integer alpha/2: the infinite-chain row has finite support, the sum is
/// exact. Otherwise: direct images up to a head length plus the
/// asymptotic power-law tail summed in closed form through the Hurwitz
/// zeta; the head is doubled until the estimate moves by less than tol/2.
/// The correction beyond the asymptote decays like n^(-alpha-3), so each
/// doubling shrinks the remainder by at least 2^-(alpha+2) and the last
/// increment bounds it.
inline double imagesum_core(const FracOrder& order, long n, long p, double tol) {
    p = cyclic_index(p, n);
    if (order.is_integer_half()) {
        const long m = order.half_integer();
        double sum = 0.0;
        // images with |p - kN| <= m
        const long k_lo = static_cast<long>(std::floor(static_cast<double>(p - m) / static_cast<double>(n)));
        const long k_hi = static_cast<long>(std::ceil(static_cast<double>(p + m) / static_cast<double>(n)));
        for (long k = k_lo; k <= k_hi; ++k) sum += element_infinite(order, p - k * n);
        return sum;
    }

    const double alpha = order.alpha();
    const double beta = alpha + 1.0;
    const double xi = static_cast<double>(p) / static_cast<double>(n);
    const double tail_pref = -std::exp(std::lgamma(alpha + 1.0)) / std::numbers::pi *
                             specfun::sin_pi(order.half()) * std::pow(static_cast<double>(n), -beta);

    const auto estimate = [&](long head, double& head_sum, double& head_comp, long done) {
        // extend the direct head sum from `done` to `head` shells
        for (long k = done + 1; k <= head; ++k) {
            const double term = element_infinite(order, static_cast<long>(k) * n - p) +
                                element_infinite(order, static_cast<long>(k) * n + p);
            const double y = term - head_comp;
            const double t = head_sum + y;
            head_comp = (t - head_sum) - y;
            head_sum = t;
        }
        const double a = static_cast<double>(head) + 1.0;
        const double tail = tail_pref * (specfun::hurwitz_zeta(beta, a - xi, tol * 1e-3) +
                                         specfun::hurwitz_zeta(beta, a + xi, tol * 1e-3));
        return head_sum + tail;
    };

    double head_sum = element_infinite(order, p);
    double head_comp = 0.0;
    long head = 8;
    double prev = estimate(head, head_sum, head_comp, 0);
    constexpr long head_budget = 1L << 22;
    while (true) {
        const long next = head * 2;
        if (next > head_budget)
            throw ConvergenceError("element_periodic_imagesum: image budget exhausted at tol " +
                                   std::to_string(tol));
        const double cur = estimate(next, head_sum, head_comp, head);
        head = next;
        if (std::fabs(cur - prev) <= 0.5 * tol) return cur;
        prev = cur;
    }
}

inline unsigned thread_count() {
    if (const char* env = std::getenv("FRACLAP_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 1) return static_cast<unsigned>(std::min<long>(v, 64));
    }
    return 1;
}

} // namespace detail

/// Matrix element f_N(|p|) of the finite chain via the exact spectral sum
/// (inverse DFT of the dispersion eigenvalues); includes the Omega^2 scale.
inline double element_periodic_spectral(const ChainSpec& spec, long p) {
    if (!spec.is_finite()) throw DomainError("element_periodic_spectral: finite chain required");
    return spec.omega2 * detail::spectral_core(spec.order, spec.n, detail::cyclic_index(p, spec.n));
}

/// Matrix element f_N(|p|) via the periodized image sum over infinite-chain
/// elements; the independent cross-check of the spectral route. Includes
/// the Omega^2 scale; tol is the absolute tolerance of the dimensionless
/// core.
inline double element_periodic_imagesum(const ChainSpec& spec, long p, double tol = 1e-10) {
    if (!spec.is_finite()) throw DomainError("element_periodic_imagesum: finite chain required");
    if (!(tol > 0.0)) throw DomainError("element_periodic_imagesum: tol must be > 0");
    return spec.omega2 * detail::imagesum_core(spec.order, spec.n, p, tol);
}

/// Build the full symbol row values[p] = f_N(|p|), p = 0..N-1.
///
/// Elements are computed for p <= N/2 and mirrored, which makes the
/// reflection symmetry values[p] == values[N-p] exact. The zero-mode row
/// sum is checked before returning. Honors FRACLAP_THREADS.
inline SymbolRow build_symbol_row(const ChainSpec& spec, BuildMethod method = BuildMethod::Spectral,
                                  double tol = 1e-10) {
    if (!spec.is_finite()) throw DomainError("build_symbol_row: finite chain required");
    const long n = spec.n;
    SymbolRow row{spec.order, std::vector<double>(static_cast<std::size_t>(n), 0.0), method};

    // per-element tolerance tight enough that the row sum stays within tol
    const double elem_tol = tol / static_cast<double>(std::max<long>(n, 2));

    const auto compute = [&](long p) {
        if (method == BuildMethod::Spectral)
            return spec.omega2 * detail::spectral_core(spec.order, n, p);
        return spec.omega2 * detail::imagesum_core(spec.order, n, p, elem_tol);
    };

    const long half = n / 2;
    const unsigned workers = std::min<unsigned>(detail::thread_count(), static_cast<unsigned>(half + 1));
    if (workers > 1) {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (long p = static_cast<long>(w); p <= half; p += workers)
                    row.values[static_cast<std::size_t>(p)] = compute(p);
            });
        }
        for (auto& t : pool) t.join();
    } else {
        for (long p = 0; p <= half; ++p) row.values[static_cast<std::size_t>(p)] = compute(p);
    }
    for (long p = half + 1; p < n; ++p)
        row.values[static_cast<std::size_t>(p)] = row.values[static_cast<std::size_t>(n - p)];

    double sum = 0.0, comp = 0.0;
    for (double v : row.values) {
        const double y = v - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    const double scale = spec.omega2 * std::pow(2.0, spec.order.alpha());
    if (std::fabs(sum) > std::max(tol, 1e-13 * static_cast<double>(n) * scale))
        throw InvariantError("build_symbol_row: zero-mode row sum residual " + std::to_string(sum));
    if (n >= 2 && !(row.values[0] > 0.0))
        throw InvariantError("build_symbol_row: diagonal element must be positive");
    return row;
}

/// Fractional Laplacian matrix Delta(p,q) = -mu f_N(|p-q|), a symmetric
/// negative-semidefinite circulant whose rows sum to zero.
inline DenseMatrix laplacian_matrix(const ChainSpec& spec, const SymbolRow& row) {
    if (!spec.is_finite() || row.size() != spec.n)
        throw DimensionMismatch("laplacian_matrix: row length does not match chain size");
    const long n = spec.n;
    DenseMatrix m(static_cast<std::size_t>(n));
    for (long p = 0; p < n; ++p)
        for (long q = 0; q < n; ++q)
            m(static_cast<std::size_t>(p), static_cast<std::size_t>(q)) =
                -spec.mu * row.at(p - q);
    return m;
}

/// Dispersion relation omega^2(kappa_l) = Omega^2 2^alpha |sin(kappa_l/2)|^alpha
/// over the N Bloch wave numbers kappa_l = 2 pi l / N. Values for
/// l > N/2 mirror l <-> N-l exactly.
inline DispersionTable dispersion(const ChainSpec& spec) {
    if (!spec.is_finite()) throw DomainError("dispersion: finite chain required");
    const long n = spec.n;
    const double alpha = spec.order.alpha();
    DispersionTable table;
    table.entries.reserve(static_cast<std::size_t>(n));
    for (long l = 0; l < n; ++l) {
        const double kappa = 2.0 * std::numbers::pi * static_cast<double>(l) / static_cast<double>(n);
        double w2;
        if (l == 0) {
            w2 = 0.0;
        } else if (2 * l > n) {
            w2 = table.entries[static_cast<std::size_t>(n - l)].omega2;
        } else {
            const double s = std::fabs(std::sin(std::numbers::pi * static_cast<double>(l) / static_cast<double>(n)));
            w2 = spec.omega2 * std::pow(2.0 * s, alpha);
        }
        table.entries.push_back({l, kappa, w2});
    }
    return table;
}

/// Action of the fractional Laplacian on a displacement field:
/// (Delta u)_p = -mu sum_q f_N(|p-q|) u_q. The constant field maps to zero.
inline DisplacementField apply(const SymbolRow& row, const DisplacementField& u, double mu) {
    const long n = row.size();
    if (u.size() != n) throw DimensionMismatch("apply: field length does not match row");
    DisplacementField out;
    out.values.resize(static_cast<std::size_t>(n));
    for (long p = 0; p < n; ++p) {
        std::complex<double> acc = 0.0;
        for (long q = 0; q < n; ++q) acc += row.at(p - q) * u.values[static_cast<std::size_t>(q)];
        out.values[static_cast<std::size_t>(p)] = -mu * acc;
    }
    return out;
}

/// Elastic energy (mu/2) sum_p u*_p (f u)_p; real and non-negative,
/// zero exactly for the uniform translation.
inline double elastic_energy(const SymbolRow& row, const DisplacementField& u, double mu) {
    const long n = row.size();
    if (u.size() != n) throw DimensionMismatch("elastic_energy: field length does not match row");
    std::complex<double> acc = 0.0;
    for (long p = 0; p < n; ++p) {
        std::complex<double> fu = 0.0;
        for (long q = 0; q < n; ++q) fu += row.at(p - q) * u.values[static_cast<std::size_t>(q)];
        acc += std::conj(u.values[static_cast<std::size_t>(p)]) * fu;
    }
    return 0.5 * mu * acc.real();
}

} // namespace fraclap::chain
