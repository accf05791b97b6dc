#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace report {

namespace {

using antihankel::EigenKind;

std::string kind_name(EigenKind kind) {
    return kind == EigenKind::SecularZero ? "secular_zero" : "pole_value";
}

std::string int_str(long long v) {
    return std::to_string(v);
}

void append_params(std::ostringstream& out, const antihankel::HankelParams& p) {
    out << "\"n\": " << p.n << ", \"a\": " << format_double(p.a)
        << ", \"b\": " << format_double(p.b) << ", \"c\": " << format_double(p.c);
}

void append_vector(std::ostringstream& out, const std::vector<double>& v) {
    out << '[';
    for (size_t i = 0; i < v.size(); ++i) {
        if (i)
            out << ", ";
        out << format_double(v[i]);
    }
    out << ']';
}

} // namespace

std::string format_double(double v) {
    if (!std::isfinite(v))
        return "null";
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    return buffer;
}

std::string json_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size() + 8);
    for (char ch : text) {
        switch (ch) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(ch) < 0x20) {
                char buffer[8];
                std::snprintf(buffer, sizeof(buffer), "\\u%04x", ch);
                out += buffer;
            } else {
                out += ch;
            }
        }
    }
    return out;
}

std::string error_object(const std::string& message) {
    return "{\"error\": \"" + json_escape(message) + "\"}";
}

std::string solve_report(const antihankel::HankelParams& params,
                         const antihankel::SpectralResult& result,
                         bool with_vectors, Format format) {
    std::ostringstream out;
    if (format == Format::Csv) {
        out << "index,value,kind,residual\n";
        for (size_t i = 0; i < result.pairs.size(); ++i) {
            const auto& pair = result.pairs[i];
            out << i << ',' << format_double(pair.value) << ','
                << kind_name(pair.kind) << ',';
            if (pair.residual)
                out << format_double(*pair.residual);
            out << '\n';
        }
        return out.str();
    }
    out << "{";
    append_params(out, params);
    out << ", \"eigenvalues\": [";
    for (size_t i = 0; i < result.pairs.size(); ++i) {
        const auto& pair = result.pairs[i];
        if (i)
            out << ", ";
        out << "{\"value\": " << format_double(pair.value) << ", \"kind\": \""
            << kind_name(pair.kind) << "\", \"residual\": "
            << (pair.residual ? format_double(*pair.residual) : "null");
        if (with_vectors && pair.vector) {
            out << ", \"vector\": ";
            append_vector(out, *pair.vector);
        }
        out << '}';
    }
    out << "], \"diagnostics\": {\"scan_samples\": "
        << int_str(result.diagnostics.scan_samples)
        << ", \"complete\": " << (result.diagnostics.complete ? "true" : "false")
        << ", \"max_residual\": "
        << (result.diagnostics.max_residual
                ? format_double(*result.diagnostics.max_residual)
                : "null")
        << "}}";
    return out.str();
}

std::string oracle_report(const antihankel::HankelParams& params,
                          const antihankel::EigenDecomposition& eig,
                          bool with_vectors, Format format) {
    const antihankel::DenseMatrix h = antihankel::build_hankel(params);
    const int m = h.dim();
    std::vector<double> residuals(eig.values.size(), 0.0);
    std::vector<std::vector<double>> columns(eig.values.size());
    for (size_t col = 0; col < eig.values.size(); ++col) {
        std::vector<double> v(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i)
            v[static_cast<size_t>(i)] = eig.vectors(i, static_cast<int>(col));
        const auto hv = antihankel::multiply(h, v);
        double sum = 0.0;
        for (int i = 0; i < m; ++i) {
            const double d = hv[static_cast<size_t>(i)] -
                             eig.values[col] * v[static_cast<size_t>(i)];
            sum += d * d;
        }
        residuals[col] = std::sqrt(sum);
        columns[col] = std::move(v);
    }

    std::ostringstream out;
    if (format == Format::Csv) {
        out << "index,value,kind,residual\n";
        for (size_t i = 0; i < eig.values.size(); ++i)
            out << i << ',' << format_double(eig.values[i]) << ",oracle,"
                << format_double(residuals[i]) << '\n';
        return out.str();
    }
    out << "{";
    append_params(out, params);
    out << ", \"eigenvalues\": [";
    for (size_t i = 0; i < eig.values.size(); ++i) {
        if (i)
            out << ", ";
        out << "{\"value\": " << format_double(eig.values[i])
            << ", \"kind\": \"oracle\", \"residual\": " << format_double(residuals[i]);
        if (with_vectors) {
            out << ", \"vector\": ";
            append_vector(out, columns[i]);
        }
        out << '}';
    }
    out << "], \"diagnostics\": {\"sweeps\": " << eig.sweeps << "}}";
    return out.str();
}

std::string compare_report(const antihankel::HankelParams& params,
                           const std::vector<double>& solver_values,
                           const std::vector<double>& oracle_values,
                           const antihankel::SpectraComparison& comparison,
                           double tol_compare, Format format) {
    std::ostringstream out;
    if (format == Format::Csv) {
        out << "index,solver_value,oracle_value,abs_diff\n";
        for (size_t i = 0; i < solver_values.size(); ++i)
            out << i << ',' << format_double(solver_values[i]) << ','
                << format_double(oracle_values[i]) << ','
                << format_double(std::abs(solver_values[i] - oracle_values[i]))
                << '\n';
        return out.str();
    }
    out << "{";
    append_params(out, params);
    out << ", \"solver\": ";
    append_vector(out, solver_values);
    out << ", \"oracle\": ";
    append_vector(out, oracle_values);
    out << ", \"max_abs_diff\": " << format_double(comparison.max_abs_diff)
        << ", \"worst_index\": " << comparison.worst_index
        << ", \"tol_compare\": " << format_double(tol_compare) << ", \"match\": "
        << (comparison.max_abs_diff <= tol_compare ? "true" : "false") << "}";
    return out.str();
}

std::string verify_report(const antihankel::HankelParams& params,
                          const antihankel::DecompositionReport& residuals,
                          const BracketAudit& audit, Format format) {
    std::ostringstream out;
    if (format == Format::Csv) {
        out << "metric,value\n";
        out << "orthogonality_error," << format_double(residuals.orthogonality_error) << '\n';
        out << "anticirculant_error," << format_double(residuals.anticirculant_error) << '\n';
        out << "hankel_error," << format_double(residuals.hankel_error) << '\n';
        out << "embedding_error," << format_double(residuals.embedding_error) << '\n';
        out << "x_norm_error," << format_double(residuals.x_norm_error) << '\n';
        out << "y_norm_error," << format_double(residuals.y_norm_error) << '\n';
        out << "xy_dot," << format_double(residuals.xy_dot) << '\n';
        out << "brackets_checked," << audit.checked << '\n';
        out << "bracket_violations," << audit.violations << '\n';
        out << "bracket_max_excess," << format_double(audit.max_excess) << '\n';
        return out.str();
    }
    out << "{";
    append_params(out, params);
    out << ", \"residuals\": {\"orthogonality_error\": "
        << format_double(residuals.orthogonality_error)
        << ", \"anticirculant_error\": " << format_double(residuals.anticirculant_error)
        << ", \"hankel_error\": " << format_double(residuals.hankel_error)
        << ", \"embedding_error\": " << format_double(residuals.embedding_error)
        << ", \"x_norm_error\": " << format_double(residuals.x_norm_error)
        << ", \"y_norm_error\": " << format_double(residuals.y_norm_error)
        << ", \"xy_dot\": " << format_double(residuals.xy_dot)
        << "}, \"bracket_audit\": {\"checked\": " << audit.checked
        << ", \"violations\": " << audit.violations
        << ", \"max_excess\": " << format_double(audit.max_excess) << "}}";
    return out.str();
}

std::string bench_report(const std::vector<BenchRow>& rows, Format format) {
    std::ostringstream out;
    if (format == Format::Csv) {
        out << "size,spectrum_ms,roots_ms,vectors_ms,oracle_ms\n";
        for (const BenchRow& row : rows)
            out << row.size << ',' << format_double(row.spectrum_ms) << ','
                << format_double(row.roots_ms) << ',' << format_double(row.vectors_ms)
                << ',' << format_double(row.oracle_ms) << '\n';
        return out.str();
    }
    out << "{\"bench\": [";
    for (size_t i = 0; i < rows.size(); ++i) {
        const BenchRow& row = rows[i];
        if (i)
            out << ", ";
        out << "{\"size\": " << row.size
            << ", \"spectrum_ms\": " << format_double(row.spectrum_ms)
            << ", \"roots_ms\": " << format_double(row.roots_ms)
            << ", \"vectors_ms\": " << format_double(row.vectors_ms)
            << ", \"oracle_ms\": " << format_double(row.oracle_ms) << '}';
    }
    out << "]}";
    return out.str();
}

std::string assemble_batch(const std::vector<std::string>& pieces, Format format) {
    std::ostringstream out;
    if (format == Format::Json) {
        out << "[";
        for (size_t i = 0; i < pieces.size(); ++i) {
            if (i)
                out << ",\n ";
            out << pieces[i];
        }
        out << "]";
        return out.str();
    }
    for (size_t i = 0; i < pieces.size(); ++i) {
        out << "# instance " << i << '\n' << pieces[i];
        if (!pieces[i].empty() && pieces[i].back() != '\n')
            out << '\n';
    }
    return out.str();
}

} // namespace report
