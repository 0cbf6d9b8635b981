// fraclap command-line front end: builds fractional-Laplacian operators on
// periodic chains, emits dispersion/kernel/convergence tables, and runs the
// identity verification suite.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fraclap/chain.hpp"
#include "fraclap/continuum.hpp"
#include "fraclap/errors.hpp"
#include "fraclap/io.hpp"
#include "fraclap/verify.hpp"
#include "fraclap/version.hpp"

namespace {

using fraclap::io::format_g17;

// exit-code contract: 0 success, 1 verification failure,
// 2 usage/validation, 3 numerical non-convergence
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNoConvergence = 3;

/// Parse a grid spec: either "start:stop:count" (inclusive linspace) or a
/// comma-separated list of values.
std::vector<double> parse_grid(const std::string& spec) {
    std::vector<double> out;
    if (spec.find(':') != std::string::npos) {
        double a, b;
        long n;
        char c1, c2;
        std::istringstream is(spec);
        if (!(is >> a >> c1 >> b >> c2 >> n) || c1 != ':' || c2 != ':' || n < 1)
            throw fraclap::DomainError("bad grid spec '" + spec + "', expected start:stop:count");
        if (n == 1) {
            out.push_back(a);
            return out;
        }
        for (long i = 0; i < n; ++i)
            out.push_back(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
        return out;
    }
    std::istringstream is(spec);
    std::string item;
    while (std::getline(is, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    if (out.empty()) throw fraclap::DomainError("empty grid spec '" + spec + "'");
    return out;
}

void emit(const fraclap::io::Table& table, const std::string& out_path, const std::string& format) {
    if (out_path.empty() || out_path == "-") {
        if (format == "csv")
            fraclap::io::write_csv(std::cout, table);
        else
            fraclap::io::write_json(std::cout, table);
        return;
    }
    fraclap::io::write_table(out_path, table, format);
}

fraclap::io::MetaBlock base_meta(const std::string& command) {
    return {{"tool", std::string("fraclap ") + fraclap::kVersion}, {"command", command}};
}

// --------------------------------------------------------------------------

struct MatrixOpts {
    double alpha = 0.0;
    long n = 0;
    double omega2 = 1.0;
    double mu = 1.0;
    double tol = 1e-10;
    std::string method = "spectral";
    bool full_matrix = false;
    std::string format = "csv";
    std::string out;
};

int run_matrix(const MatrixOpts& o) {
    const fraclap::FracOrder order(o.alpha);
    const auto spec = fraclap::chain::ChainSpec::finite(o.n, order, o.omega2, o.mu);

    fraclap::io::Table t;
    t.meta = base_meta("matrix");
    t.meta.emplace_back("alpha", format_g17(o.alpha));
    t.meta.emplace_back("n", std::to_string(o.n));
    t.meta.emplace_back("omega2", format_g17(o.omega2));
    t.meta.emplace_back("mu", format_g17(o.mu));
    t.meta.emplace_back("method", o.method);
    t.meta.emplace_back("tol", format_g17(o.tol));

    const auto row_sum = [](const fraclap::chain::SymbolRow& r) {
        double s = 0.0;
        for (double v : r.values) s += v;
        return s;
    };

    if (o.method == "both") {
        const auto rs = fraclap::chain::build_symbol_row(spec, fraclap::chain::BuildMethod::Spectral, o.tol);
        const auto ri = fraclap::chain::build_symbol_row(spec, fraclap::chain::BuildMethod::ImageSum, o.tol);
        t.meta.emplace_back("row-sum-residual", format_g17(row_sum(rs)));
        double max_diff = 0.0;
        for (long p = 0; p < o.n; ++p)
            max_diff = std::max(max_diff, std::fabs(rs.values[static_cast<std::size_t>(p)] -
                                                    ri.values[static_cast<std::size_t>(p)]));
        t.meta.emplace_back("max-abs-diff", format_g17(max_diff));
        t.header = {"p", "spectral", "imagesum", "abs_diff"};
        for (long p = 0; p < o.n; ++p) {
            const double a = rs.values[static_cast<std::size_t>(p)];
            const double b = ri.values[static_cast<std::size_t>(p)];
            t.rows.push_back({std::to_string(p), format_g17(a), format_g17(b), format_g17(std::fabs(a - b))});
        }
        emit(t, o.out, o.format);
        return kExitOk;
    }

    const auto method = (o.method == "imagesum") ? fraclap::chain::BuildMethod::ImageSum
                                                 : fraclap::chain::BuildMethod::Spectral;
    if (o.method != "spectral" && o.method != "imagesum")
        throw fraclap::DomainError("unknown method '" + o.method + "' (spectral|imagesum|both)");
    const auto row = fraclap::chain::build_symbol_row(spec, method, o.tol);
    t.meta.emplace_back("row-sum-residual", format_g17(row_sum(row)));
    if (!o.full_matrix) {
        t.header = {"p", "value"};
        for (long p = 0; p < o.n; ++p)
            t.rows.push_back({std::to_string(p), format_g17(row.values[static_cast<std::size_t>(p)])});
    } else {
        const auto m = fraclap::chain::laplacian_matrix(spec, row);
        t.header = {"p", "q", "value"};
        for (long p = 0; p < o.n; ++p)
            for (long q = 0; q < o.n; ++q)
                t.rows.push_back({std::to_string(p), std::to_string(q),
                                  format_g17(m(static_cast<std::size_t>(p), static_cast<std::size_t>(q)))});
    }
    emit(t, o.out, o.format);
    return kExitOk;
}

// --------------------------------------------------------------------------

struct DispersionOpts {
    std::vector<double> alphas;
    std::string kappa_grid = "0:3.14159265358979324:65";
    std::string format = "csv";
    std::string out;
};

int run_dispersion(const DispersionOpts& o) {
    const std::vector<double> kappas = parse_grid(o.kappa_grid);
    fraclap::io::Table t;
    t.meta = base_meta("dispersion");
    {
        std::string alphas;
        for (std::size_t i = 0; i < o.alphas.size(); ++i)
            alphas += (i ? "," : "") + format_g17(o.alphas[i]);
        t.meta.emplace_back("alpha", alphas);
    }
    t.meta.emplace_back("kappa-grid", o.kappa_grid);
    t.meta.emplace_back("normalization", "omega/omega0 with omega0 = 2 Omega_alpha");
    t.header = {"alpha", "kappa", "omega_over_omega0"};
    for (double alpha : o.alphas) {
        (void)fraclap::FracOrder(alpha); // validate
        for (double kappa : kappas) {
            const double v = 0.5 * std::pow(2.0 * std::fabs(std::sin(kappa / 2.0)), alpha / 2.0);
            t.rows.push_back({format_g17(alpha), format_g17(kappa), format_g17(v)});
        }
    }
    emit(t, o.out, o.format);
    return kExitOk;
}

// --------------------------------------------------------------------------

struct KernelOpts {
    std::vector<double> alphas;
    double length = 1.0;
    std::string x_grid; // defaults to two periods avoiding lattice points
    double eps = 0.0;
    double tol = 1e-10;
    std::string format = "csv";
    std::string out;
};

int run_kernel(const KernelOpts& o) {
    std::vector<double> xs;
    if (o.x_grid.empty()) {
        for (long i = 0; i < 80; ++i)
            xs.push_back(o.length * (0.025 + 1.95 * static_cast<double>(i) / 79.0));
    } else {
        xs = parse_grid(o.x_grid);
    }
    fraclap::io::Table t;
    t.meta = base_meta("kernel");
    {
        std::string alphas;
        for (std::size_t i = 0; i < o.alphas.size(); ++i)
            alphas += (i ? "," : "") + format_g17(o.alphas[i]);
        t.meta.emplace_back("alpha", alphas);
    }
    t.meta.emplace_back("length", format_g17(o.length));
    t.meta.emplace_back("eps", format_g17(o.eps));
    t.meta.emplace_back("tol", format_g17(o.tol));
    t.meta.emplace_back("representation", o.eps > 0.0 ? "regularized" : "hypersingular");
    t.header = {"alpha", "x", "value"};
    for (double alpha : o.alphas) {
        const fraclap::FracOrder order(alpha);
        for (double x : xs) {
            double v;
            if (o.eps > 0.0) {
                const auto spec = fraclap::continuum::KernelSpec::periodic(order, o.length, 1.0, 1.0, o.eps);
                v = fraclap::continuum::periodic_kernel_regularized(spec, x);
            } else {
                const double r = std::fmod(x, o.length);
                const double dist = std::min(std::fabs(r), std::fabs(o.length - std::fabs(r)));
                if (dist < 1e-12 * o.length)
                    throw fraclap::DomainError(
                        "kernel: x = " + format_g17(x) +
                        " lies on a lattice singularity; pass --eps for the regularized kernel");
                const auto spec = fraclap::continuum::KernelSpec::periodic(order, o.length);
                v = fraclap::continuum::periodic_kernel_zeta(spec, x);
            }
            t.rows.push_back({format_g17(alpha), format_g17(x), format_g17(v)});
        }
    }
    emit(t, o.out, o.format);
    return kExitOk;
}

// --------------------------------------------------------------------------

struct ConvergeOpts {
    double alpha = 0.0;
    double length = 1.0;
    double x = 0.5;
    double rho0 = 1.0;
    double a_alpha = 1.0;
    std::string h_grid = "0.125,0.0625,0.03125,0.015625,0.0078125,0.00390625";
    std::string format = "csv";
    std::string out;
};

int run_converge(const ConvergeOpts& o) {
    const fraclap::FracOrder order(o.alpha);
    const std::vector<double> hs = parse_grid(o.h_grid);
    const auto report = fraclap::continuum::convergence_study(order, o.length, o.rho0, o.a_alpha, o.x, hs);
    fraclap::io::Table t;
    t.meta = base_meta("converge");
    t.meta.emplace_back("alpha", format_g17(o.alpha));
    t.meta.emplace_back("length", format_g17(o.length));
    t.meta.emplace_back("x", format_g17(o.x));
    t.meta.emplace_back("rho0", format_g17(o.rho0));
    t.meta.emplace_back("a-alpha", format_g17(o.a_alpha));
    t.meta.emplace_back("h-grid", o.h_grid);
    t.meta.emplace_back("fitted-order", format_g17(report.fitted_order));
    t.header = {"h", "n", "p", "x", "discrete", "continuum", "abs_error"};
    for (const auto& r : report.rows)
        t.rows.push_back({format_g17(r.h), std::to_string(r.n), std::to_string(r.p), format_g17(r.x),
                          format_g17(r.discrete_value), format_g17(r.continuum_value),
                          format_g17(r.abs_error)});
    emit(t, o.out, o.format);
    return kExitOk;
}

// --------------------------------------------------------------------------

struct VerifyOpts {
    std::string only;
    std::string format = "json";
    std::string out;
    bool inject_error = false;
    bool list = false;
};

int run_verify(const VerifyOpts& o) {
    if (o.list) {
        for (const auto& name : fraclap::verify::available_checks()) std::cout << name << "\n";
        return kExitOk;
    }
    std::vector<std::string> selection;
    if (!o.only.empty()) {
        std::istringstream is(o.only);
        std::string item;
        while (std::getline(is, item, ','))
            if (!item.empty()) selection.push_back(item);
    }
    std::vector<fraclap::verify::CheckResult> results = fraclap::verify::run_checks(selection);
    if (o.inject_error && !results.empty()) {
        // harness self-test hook: force one failure
        results.front().residual = results.front().threshold * 10.0 + 1.0;
        results.front().pass = false;
        results.front().detail += " [injected perturbation]";
    }

    bool all_pass = true;
    nlohmann::ordered_json j;
    j["meta"] = {{"tool", std::string("fraclap ") + fraclap::kVersion},
                 {"command", "verify"},
                 {"only", o.only}};
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        checks.push_back({{"name", r.name},
                          {"residual", r.residual},
                          {"threshold", r.threshold},
                          {"pass", r.pass},
                          {"detail", r.detail}});
    }
    j["checks"] = std::move(checks);
    j["all_pass"] = all_pass;

    if (o.format == "csv") {
        fraclap::io::Table t;
        t.meta = base_meta("verify");
        t.header = {"name", "residual", "threshold", "pass"};
        for (const auto& r : results)
            t.rows.push_back({r.name, format_g17(r.residual), format_g17(r.threshold),
                              r.pass ? "true" : "false"});
        emit(t, o.out, "csv");
    } else if (o.out.empty() || o.out == "-") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream f(o.out);
        if (!f) throw fraclap::Error("cannot open output file: " + o.out);
        f << j.dump(2) << "\n";
    }

    for (const auto& r : results)
        std::cerr << (r.pass ? "PASS " : "FAIL ") << r.name << " residual=" << r.residual
                  << " threshold=" << r.threshold << "\n";
    return all_pass ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete fractional Laplacian on periodic chains and its continuum Riesz kernels"};
    app.require_subcommand(1);
    app.footer("Environment: FRACLAP_THREADS overrides the worker count for row construction.");

    MatrixOpts mo;
    CLI::App* matrix = app.add_subcommand("matrix", "symbol row / Laplacian matrix of the N-periodic chain");
    matrix->add_option("--alpha", mo.alpha, "fractional exponent alpha > 0")->required();
    matrix->add_option("--n", mo.n, "particle count N >= 1")->required();
    matrix->add_option("--omega2", mo.omega2, "Omega_alpha^2 scale (default 1)");
    matrix->add_option("--mu", mo.mu, "particle mass (default 1)");
    matrix->add_option("--tol", mo.tol, "image-sum tolerance (default 1e-10)");
    matrix->add_option("--method", mo.method, "spectral|imagesum|both (default spectral)");
    matrix->add_flag("--full-matrix", mo.full_matrix, "emit the dense N x N Laplacian");
    matrix->add_option("--format", mo.format, "csv|json (default csv)");
    matrix->add_option("--out", mo.out, "output path (default stdout)");

    DispersionOpts do_;
    CLI::App* dispersion = app.add_subcommand("dispersion", "normalized dispersion surface over (alpha, kappa)");
    dispersion->add_option("--alpha", do_.alphas, "alpha values (repeat or comma-separate)")
        ->required()
        ->delimiter(',');
    dispersion->add_option("--kappa-grid", do_.kappa_grid, "kappa grid start:stop:count or list");
    dispersion->add_option("--format", do_.format, "csv|json (default csv)");
    dispersion->add_option("--out", do_.out, "output path (default stdout)");

    KernelOpts ko;
    CLI::App* kernel = app.add_subcommand("kernel", "L-periodic fractional Laplacian kernel over two periods");
    kernel->add_option("--alpha", ko.alphas, "alpha values (repeat or comma-separate)")
        ->required()
        ->delimiter(',');
    kernel->add_option("--length", ko.length, "period L (default 1)");
    kernel->add_option("--x-grid", ko.x_grid, "x grid start:stop:count or list (default avoids lattice points)");
    kernel->add_option("--eps", ko.eps, "regularization; lattice points allowed when > 0");
    kernel->add_option("--tol", ko.tol, "image-sum tolerance (default 1e-10)");
    kernel->add_option("--format", ko.format, "csv|json (default csv)");
    kernel->add_option("--out", ko.out, "output path (default stdout)");

    ConvergeOpts co;
    CLI::App* converge = app.add_subcommand("converge", "discrete -> continuum convergence study");
    converge->add_option("--alpha", co.alpha, "fractional exponent")->required();
    converge->add_option("--length", co.length, "period L (default 1)");
    converge->add_option("--x", co.x, "evaluation point in (0, L) (default 0.5)");
    converge->add_option("--rho0", co.rho0, "mass density (default 1)");
    converge->add_option("--a-alpha", co.a_alpha, "elastic scale A_alpha (default 1)");
    converge->add_option("--h-grid", co.h_grid, "decreasing lattice constants (list)");
    converge->add_option("--format", co.format, "csv|json (default csv)");
    converge->add_option("--out", co.out, "output path (default stdout)");

    VerifyOpts vo;
    CLI::App* verify = app.add_subcommand("verify", "run the identity/oracle verification suite");
    verify->add_option("--only", vo.only, "comma-separated subset of checks");
    verify->add_option("--format", vo.format, "json|csv (default json)");
    verify->add_option("--out", vo.out, "output path (default stdout)");
    verify->add_flag("--list", vo.list, "list available checks and exit");
    verify->add_flag("--inject-error", vo.inject_error, "force one failure (harness self-test)")
        ->group(""); // hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (matrix->parsed()) return run_matrix(mo);
        if (dispersion->parsed()) return run_dispersion(do_);
        if (kernel->parsed()) return run_kernel(ko);
        if (converge->parsed()) return run_converge(co);
        if (verify->parsed()) return run_verify(vo);
    } catch (const fraclap::ConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoConvergence;
    } catch (const fraclap::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
