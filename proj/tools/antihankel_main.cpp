// Command-line front end for the anti-tridiagonal Hankel eigensolver.
//
//   antihankel <solve|oracle|compare|verify|bench> --n N --a A --b B --c C
//              [--tol T] [--vectors] [--format json|csv]
//              [--batch FILE] [--out FILE] [--tol-compare T]
//
// Exit status: 0 success, 1 compare mismatch, 2 diagnostic error.
// ANTIHANKEL_THREADS caps batch parallelism (0 or unset: all cores).

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "antihankel/oracle.hpp"
#include "antihankel/solver.hpp"
#include "report.hpp"

namespace {

using namespace antihankel;
using report::Format;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitError = 2;

struct RunConfig {
    std::string mode;
    HankelParams params;
    double tol = 1e-10;
    double tol_compare = 1e-7;
    bool want_vectors = false;
    Format format = Format::Json;
    std::string batch_path;
    std::string out_path;
};

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    const auto delta = std::chrono::steady_clock::now() - start;
    return std::chrono::duration<double, std::milli>(delta).count();
}

std::vector<double> values_of(const SpectralResult& result) {
    std::vector<double> values;
    values.reserve(result.pairs.size());
    for (const auto& pair : result.pairs)
        values.push_back(pair.value);
    return values;
}

// One instance of a non-bench mode. Returns the rendered report and the
// instance's exit contribution.
std::pair<std::string, int> run_instance(const RunConfig& config) {
    try {
        if (config.mode == "solve") {
            const SpectralResult result =
                solve(config.params, config.tol, config.want_vectors);
            return {report::solve_report(config.params, result,
                                         config.want_vectors, config.format),
                    kExitOk};
        }
        if (config.mode == "oracle") {
            const EigenDecomposition eig = jacobi_eigen(build_hankel(config.params));
            return {report::oracle_report(config.params, eig, config.want_vectors,
                                          config.format),
                    kExitOk};
        }
        if (config.mode == "compare") {
            const SpectralResult result = solve(config.params, config.tol);
            const EigenDecomposition eig = jacobi_eigen(build_hankel(config.params));
            const auto solver_values = values_of(result);
            const SpectraComparison cmp = compare_spectra(solver_values, eig.values);
            const int status =
                cmp.max_abs_diff <= config.tol_compare ? kExitOk : kExitMismatch;
            return {report::compare_report(config.params, solver_values, eig.values,
                                           cmp, config.tol_compare, config.format),
                    status};
        }
        if (config.mode == "verify") {
            const DecompositionReport residuals = verify_decompositions(config.params);
            const SpectralResult result = solve(config.params, config.tol);
            const auto poles =
                pole_multiset(config.params, compute_spectrum(config.params));
            const auto brackets = weyl_brackets(config.params, poles);
            const double slack = 1e-10 * config.params.scale();
            report::BracketAudit audit;
            audit.checked = static_cast<int>(result.pairs.size());
            for (size_t k = 0; k < result.pairs.size(); ++k) {
                const double v = result.pairs[k].value;
                const double excess =
                    std::max(brackets[k].lo - slack - v, v - brackets[k].hi - slack);
                if (excess > 0.0) {
                    ++audit.violations;
                    audit.max_excess = std::max(audit.max_excess, excess);
                }
            }
            return {report::verify_report(config.params, residuals, audit,
                                          config.format),
                    kExitOk};
        }
        return {report::error_object("unknown mode: " + config.mode), kExitError};
    } catch (const std::exception& err) {
        return {report::error_object(err.what()), kExitError};
    }
}

report::BenchRow bench_one(const HankelParams& params, double tol) {
    report::BenchRow row;
    row.size = params.dim();

    auto start = std::chrono::steady_clock::now();
    const AntiCirculantSpectrum spectrum = compute_spectrum(params);
    const PoleSet poles = pole_multiset(params, spectrum);
    const std::vector<Interval> brackets = weyl_brackets(params, poles);
    const SecularContext context(params, spectrum);
    row.spectrum_ms = elapsed_ms(start);

    start = std::chrono::steady_clock::now();
    std::vector<double> roots = isolate_roots(context, poles, brackets, tol);
    if (static_cast<int>(roots.size()) != params.dim())
        classify_pole_eigenvalues(params, poles);  // degenerate sweep point
    row.roots_ms = elapsed_ms(start);

    start = std::chrono::steady_clock::now();
    for (double root : roots) {
        try {
            secular_eigenvector(context, root);
        } catch (const SolverError&) {
            // counted in the timing; vectors for such roots come from the
            // inverse-iteration fallback in solve()
        }
    }
    row.vectors_ms = elapsed_ms(start);

    start = std::chrono::steady_clock::now();
    jacobi_eigen(build_hankel(params));
    row.oracle_ms = elapsed_ms(start);
    return row;
}

int run_bench(const RunConfig& config, bool size_given, std::ostream& sink) {
    std::vector<int> sizes;
    if (size_given)
        sizes.push_back(config.params.dim());
    else
        sizes = {16, 32, 64, 128, 256, 512};

    std::vector<report::BenchRow> rows;
    rows.reserve(sizes.size());
    for (int m : sizes) {
        HankelParams params = config.params;
        params.n = m - 2;
        rows.push_back(bench_one(params, config.tol));
    }
    const std::string text = report::bench_report(rows, config.format);
    sink << text;
    if (text.empty() || text.back() != '\n')
        sink << '\n';
    return kExitOk;
}

int thread_budget(size_t jobs) {
    unsigned budget = std::thread::hardware_concurrency();
    if (const char* env = std::getenv("ANTIHANKEL_THREADS")) {
        char* end = nullptr;
        const long parsed = std::strtol(env, &end, 10);
        if (end != env && parsed > 0)
            budget = static_cast<unsigned>(parsed);
        // 0 or malformed: automatic
    }
    if (budget == 0)
        budget = 1;
    return static_cast<int>(std::min<size_t>(budget, jobs));
}

int run_batch(const RunConfig& config, std::ostream& sink) {
    std::ifstream input(config.batch_path);
    if (!input) {
        sink << report::error_object("cannot open batch file: " + config.batch_path)
             << '\n';
        return kExitError;
    }

    std::vector<HankelParams> instances;
    std::vector<std::string> bad_lines;
    std::string line;
    int line_no = 0;
    while (std::getline(input, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        std::istringstream fields(line);
        HankelParams params;
        if (!(fields >> params.n))
            continue;  // blank or comment-only line
        if (!(fields >> params.a >> params.b >> params.c)) {
            bad_lines.push_back("line " + std::to_string(line_no) +
                                ": expected `n a b c`");
            continue;
        }
        instances.push_back(params);
    }
    if (!bad_lines.empty()) {
        sink << report::error_object("malformed batch input: " + bad_lines.front())
             << '\n';
        return kExitError;
    }

    std::vector<std::string> pieces(instances.size());
    std::vector<int> statuses(instances.size(), kExitOk);
    std::atomic<size_t> cursor{0};
    const int workers = thread_budget(instances.size());
    auto work = [&]() {
        for (size_t i = cursor.fetch_add(1); i < instances.size();
             i = cursor.fetch_add(1)) {
            RunConfig local = config;
            local.params = instances[i];
            auto [text, status] = run_instance(local);
            pieces[i] = std::move(text);
            statuses[i] = status;
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(work);
        for (auto& t : pool)
            t.join();
    }

    const std::string text = report::assemble_batch(pieces, config.format);
    sink << text;
    if (text.empty() || text.back() != '\n')
        sink << '\n';
    int status = kExitOk;
    for (int s : statuses)
        status = std::max(status, s);
    return status;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Eigensolver for real anti-tridiagonal Hankel matrices"};
    app.get_formatter()->column_width(30);

    RunConfig config;
    std::string mode;
    app.add_option("mode", mode, "solve | oracle | compare | verify | bench")
        ->required()
        ->check(CLI::IsMember({"solve", "oracle", "compare", "verify", "bench"}));
    auto* opt_n = app.add_option("--n", config.params.n, "matrix order minus 2 (n >= 1)");
    auto* opt_a = app.add_option("--a", config.params.a, "anti-diagonal coefficient a");
    auto* opt_b = app.add_option("--b", config.params.b, "anti-diagonal coefficient b");
    auto* opt_c = app.add_option("--c", config.params.c, "central anti-diagonal coefficient c");
    app.add_option("--tol", config.tol, "root isolation tolerance (default 1e-10)");
    app.add_option("--tol-compare", config.tol_compare,
                   "compare mode mismatch threshold (default 1e-7)");
    app.add_flag("--vectors", config.want_vectors, "emit eigenvectors too");
    std::string format_name = "json";
    app.add_option("--format", format_name, "output format (default json)")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--batch", config.batch_path,
                   "batch input file: `n a b c` per line, # comments");
    app.add_option("--out", config.out_path, "write the report to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& err) {
        std::cout << report::error_object(err.what()) << std::endl;
        return kExitError;
    }
    config.mode = mode;
    config.format = format_name == "csv" ? Format::Csv : Format::Json;

    std::ofstream out_file;
    std::ostream* sink = &std::cout;
    if (!config.out_path.empty()) {
        out_file.open(config.out_path);
        if (!out_file) {
            std::cout << report::error_object("cannot open output path: " +
                                              config.out_path)
                      << std::endl;
            return kExitError;
        }
        sink = &out_file;
    }

    if (config.tol <= 0.0) {
        *sink << report::error_object("--tol must be positive") << '\n';
        return kExitError;
    }

    const bool batch = !config.batch_path.empty();
    if (config.mode == "bench") {
        if (batch) {
            *sink << report::error_object("bench mode does not take --batch") << '\n';
            return kExitError;
        }
        // Coefficients default to a fixed, mildly asymmetric instance.
        if (opt_a->count() == 0)
            config.params.a = 1.3;
        if (opt_b->count() == 0)
            config.params.b = -0.7;
        if (opt_c->count() == 0)
            config.params.c = 0.9;
        if (opt_n->count() != 0 && config.params.n < 1) {
            *sink << report::error_object("--n must be >= 1") << '\n';
            return kExitError;
        }
        return run_bench(config, opt_n->count() != 0, *sink);
    }

    if (batch) {
        if (opt_n->count() || opt_a->count() || opt_b->count() || opt_c->count()) {
            *sink << report::error_object(
                         "--batch replaces --n/--a/--b/--c; do not mix them")
                  << '\n';
            return kExitError;
        }
        return run_batch(config, *sink);
    }

    if (!opt_n->count() || !opt_a->count() || !opt_b->count() || !opt_c->count()) {
        *sink << report::error_object(
                     "modes solve/oracle/compare/verify need --n --a --b --c "
                     "(or --batch)")
              << '\n';
        return kExitError;
    }

    auto [text, status] = run_instance(config);
    *sink << text;
    if (text.empty() || text.back() != '\n')
        *sink << '\n';
    return status;
}
