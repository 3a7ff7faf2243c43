// Benchmark CLI: table reproduction, ad-hoc reconstruction from sample CSVs,
// theorem bounds, and dual-generator evaluation.

#include "grs/average.hpp"
#include "grs/csv.hpp"
#include "grs/derivative.hpp"
#include "grs/errors.hpp"
#include "grs/experiment.hpp"
#include "grs/multivariate.hpp"
#include "grs/signal.hpp"
#include "grs/univariate.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitNumerical = 3;

std::vector<double> parse_delta_list(const std::string& s)
{
    std::vector<double> out;
    std::stringstream ss(s);
    std::string field;
    while (std::getline(ss, field, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(field, &used));
            if (used != field.size()) {
                throw std::invalid_argument(field);
            }
        } catch (const std::exception&) {
            throw grs::DomainError("bad delta value: \"" + field + "\"");
        }
    }
    if (out.empty()) {
        throw grs::DomainError("empty delta list");
    }
    return out;
}

int run_bench(int table, const std::optional<std::string>& out_path,
              const std::string& format)
{
    const grs::TableResult result = grs::run_table(table);
    const grs::EmitFormat fmt =
        format == "json" ? grs::EmitFormat::Json : grs::EmitFormat::Csv;
    if (out_path) {
        grs::emit(result, fmt, *out_path);
    } else if (fmt == grs::EmitFormat::Csv) {
        grs::emit_csv(result, std::cout);
    } else {
        grs::emit_json(result, std::cout);
    }
    return 0;
}

int run_reconstruct(double delta, int n, const std::string& method,
                    const std::string& samples, int grid,
                    const std::optional<std::string>& reference)
{
    const grs::SampleWindow1D window = grs::load_samples_1d(samples);
    if (window.n() != n) {
        throw grs::DomainError("sample file has n=" + std::to_string(window.n()) +
                               ", --n says " + std::to_string(n));
    }
    if (grid < 2) {
        throw grs::DomainError("--grid must be >= 2");
    }

    const bool gauss = method == "gauss";
    const grs::RegularizationParams params =
        gauss ? grs::optimal_variance(n, delta)
              : grs::RegularizationParams::manual(1.0);

    auto recon = [&](double t) {
        return gauss ? grs::reconstruct_gauss(window, t, params)
                     : grs::reconstruct_truncated(window, t);
    };

    if (reference && *reference == "builtin") {
        const grs::TestSignal sig(delta);
        std::vector<double> ts;
        for (int j = 1; j < grid; ++j) {
            ts.push_back(static_cast<double>(j) / grid);
        }
        const double bound = gauss ? grs::bound_theorem1(n, delta) : 0.0;
        const grs::ErrorReport report = grs::error_grid(
            recon, [&](double t) { return sig(t); }, ts,
            gauss ? grs::ReconMethod::GaussRegularized : grs::ReconMethod::Truncated,
            bound);
        std::printf("t,abs_error\n");
        for (const auto& [t, e] : report.grid) {
            std::printf("%.6f,%.17g\n", t, e);
        }
        std::printf("max_error,%.17g\n", report.max_error);
        if (gauss) {
            std::printf("bound,%.17g\n", report.bound);
        }
    } else {
        std::printf("t,value\n");
        for (int j = 1; j < grid; ++j) {
            const double t = static_cast<double>(j) / grid;
            std::printf("%.6f,%.17g\n", t, recon(t));
        }
    }
    return 0;
}

int run_bound(const std::string& kind, int n, const std::string& delta_str, int s,
              const std::optional<std::string>& measure_path)
{
    const std::vector<double> deltas = parse_delta_list(delta_str);
    double value = 0.0;
    if (kind == "uni") {
        value = grs::bound_theorem1(n, deltas.at(0));
    } else if (kind == "deriv") {
        value = grs::bound_theorem2(grs::DerivativeOrder(s), n, deltas.at(0));
    } else if (kind == "multi") {
        value = grs::bound_theorem3(n, grs::Bandwidth(deltas));
    } else {
        if (!measure_path) {
            throw grs::DomainError("--kind avg requires --measure");
        }
        const grs::DualGenerator dual(grs::load_measure_json(*measure_path),
                                      deltas.at(0));
        value = grs::bound_theorem4(n, dual);
    }
    std::printf("%.17g\n", value);
    return 0;
}

int run_phi(const std::string& measure_path, double delta, double t, double tol)
{
    const grs::DualGenerator dual(grs::load_measure_json(measure_path), delta, tol);
    std::printf("%.17g\n", grs::phi_time(t, dual));
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Gaussian-regularized Shannon sampling benchmarks"};
    app.require_subcommand(1);

    // bench
    auto* bench = app.add_subcommand("bench", "reproduce a benchmark table");
    int table = 0;
    std::optional<std::string> out_path;
    std::string format = "csv";
    bench->add_option("--table", table, "table id (1..10)")->required();
    bench->add_option("--out", out_path, "output file (default stdout)");
    bench->add_option("--format", format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));

    // reconstruct
    auto* rec = app.add_subcommand("reconstruct", "reconstruct from a sample CSV");
    double delta = 0.0;
    int n = 0;
    std::string method;
    std::string samples;
    int grid = 0;
    std::optional<std::string> reference;
    rec->add_option("--delta", delta, "band limit")->required();
    rec->add_option("--n", n, "window half-size")->required();
    rec->add_option("--method", method, "gauss|truncate")
        ->required()
        ->check(CLI::IsMember({"gauss", "truncate"}));
    rec->add_option("--samples", samples, "sample CSV path")->required();
    rec->add_option("--grid", grid, "evaluate on {j/grid}")->required();
    rec->add_option("--reference", reference, "builtin: print the error report");

    // bound
    auto* bnd = app.add_subcommand("bound", "print a theorem bound");
    std::string kind;
    int bn = 0;
    std::string delta_list;
    int s = 1;
    std::optional<std::string> measure_path;
    bnd->add_option("--kind", kind, "uni|deriv|multi|avg")
        ->required()
        ->check(CLI::IsMember({"uni", "deriv", "multi", "avg"}));
    bnd->add_option("--n", bn, "window half-size")->required();
    bnd->add_option("--delta", delta_list, "band limit(s), comma-separated")->required();
    bnd->add_option("--s", s, "derivative order (deriv)");
    bnd->add_option("--measure", measure_path, "measure JSON (avg)");

    // phi
    auto* phi = app.add_subcommand("phi", "evaluate the dual generator phi(t)");
    std::string phi_measure;
    double phi_delta = 0.0;
    double phi_t = 0.0;
    double phi_tol = 1e-10;
    phi->add_option("--measure", phi_measure, "measure JSON path")->required();
    phi->add_option("--delta", phi_delta, "band limit")->required();
    phi->add_option("--t", phi_t, "evaluation point")->required();
    phi->add_option("--tol", phi_tol, "absolute quadrature tolerance");

    try {
        app.parse(argc, argv);
        if (bench->parsed()) {
            return run_bench(table, out_path, format);
        }
        if (rec->parsed()) {
            return run_reconstruct(delta, n, method, samples, grid, reference);
        }
        if (bnd->parsed()) {
            return run_bound(kind, bn, delta_list, s, measure_path);
        }
        return run_phi(phi_measure, phi_delta, phi_t, phi_tol);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const grs::QuadratureError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const grs::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const grs::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitDomain;
    }
}
