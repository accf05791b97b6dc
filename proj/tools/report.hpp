#pragma once

// Report emission for the CLI: JSON and CSV renderings of the library
// results. All floating-point values are printed with %.17g so output is
// reproducible bit-for-bit across runs; diagnostic errors are always
// rendered as a JSON error object regardless of the selected format.

#include <string>
#include <vector>

#include "antihankel/oracle.hpp"
#include "antihankel/solver.hpp"

namespace report {

enum class Format { Json, Csv };

std::string format_double(double v);  // %.17g; "null" when not finite
std::string json_escape(const std::string& text);
std::string error_object(const std::string& message);

std::string solve_report(const antihankel::HankelParams& params,
                         const antihankel::SpectralResult& result,
                         bool with_vectors, Format format);

std::string oracle_report(const antihankel::HankelParams& params,
                          const antihankel::EigenDecomposition& eig,
                          bool with_vectors, Format format);

std::string compare_report(const antihankel::HankelParams& params,
                           const std::vector<double>& solver_values,
                           const std::vector<double>& oracle_values,
                           const antihankel::SpectraComparison& comparison,
                           double tol_compare, Format format);

struct BracketAudit {
    int checked = 0;
    int violations = 0;
    double max_excess = 0.0;  // worst distance outside a widened bracket
};

std::string verify_report(const antihankel::HankelParams& params,
                          const antihankel::DecompositionReport& residuals,
                          const BracketAudit& audit, Format format);

struct BenchRow {
    int size = 0;  // matrix order n + 2
    double spectrum_ms = 0.0;
    double roots_ms = 0.0;
    double vectors_ms = 0.0;
    double oracle_ms = 0.0;
};

std::string bench_report(const std::vector<BenchRow>& rows, Format format);

// Batch assembly: JSON gets a top-level array of the per-instance objects;
// CSV concatenates the per-instance blocks, each preceded by a comment line
// "# instance <k>" (errors stay JSON objects on their own line).
std::string assemble_batch(const std::vector<std::string>& pieces, Format format);

} // namespace report
