#include "antihankel/matrix.hpp"

#include <cassert>
#include <cmath>
#include <numbers>

namespace antihankel {

DenseMatrix DenseMatrix::identity(int dim) {
    DenseMatrix eye(dim);
    for (int i = 0; i < dim; ++i)
        eye(i, i) = 1.0;
    return eye;
}

double DenseMatrix::max_norm() const {
    double worst = 0.0;
    for (double v : data_)
        worst = std::max(worst, std::abs(v));
    return worst;
}

double DenseMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (double v : data_)
        sum += v * v;
    return std::sqrt(sum);
}

DenseMatrix multiply(const DenseMatrix& lhs, const DenseMatrix& rhs) {
    assert(lhs.dim() == rhs.dim());
    const int m = lhs.dim();
    DenseMatrix out(m);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) {
            const double lik = lhs(i, k);
            if (lik == 0.0)
                continue;
            for (int j = 0; j < m; ++j)
                out(i, j) += lik * rhs(k, j);
        }
    return out;
}

DenseMatrix transpose(const DenseMatrix& mat) {
    const int m = mat.dim();
    DenseMatrix out(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            out(j, i) = mat(i, j);
    return out;
}

std::vector<double> multiply(const DenseMatrix& mat, std::span<const double> vec) {
    const int m = mat.dim();
    assert(static_cast<int>(vec.size()) == m);
    std::vector<double> out(static_cast<size_t>(m), 0.0);
    for (int i = 0; i < m; ++i) {
        double sum = 0.0;
        for (int j = 0; j < m; ++j)
            sum += mat(i, j) * vec[static_cast<size_t>(j)];
        out[static_cast<size_t>(i)] = sum;
    }
    return out;
}

double max_abs_diff(const DenseMatrix& lhs, const DenseMatrix& rhs) {
    assert(lhs.dim() == rhs.dim());
    const int m = lhs.dim();
    double worst = 0.0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            worst = std::max(worst, std::abs(lhs(i, j) - rhs(i, j)));
    return worst;
}

DenseMatrix build_hankel(const HankelParams& params) {
    params.validate();
    const int m = params.dim();
    DenseMatrix mat(m);
    // 0-based: i + j == m - 2 -> a, m - 1 -> c, m -> b.
    for (int i = 0; i < m; ++i) {
        const int ja = m - 2 - i;
        if (0 <= ja && ja < m)
            mat(i, ja) = params.a;
        const int jc = m - 1 - i;
        if (0 <= jc && jc < m)
            mat(i, jc) = params.c;
        const int jb = m - i;
        if (0 <= jb && jb < m)
            mat(i, jb) = params.b;
    }
    return mat;
}

DenseMatrix build_anticirculant(const HankelParams& params) {
    params.validate();
    const int m = params.dim();
    std::vector<double> row(static_cast<size_t>(m), 0.0);
    row[0] = params.b;
    row[static_cast<size_t>(m - 2)] = params.a;
    row[static_cast<size_t>(m - 1)] = params.c;
    DenseMatrix mat(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            mat(i, j) = row[static_cast<size_t>((i + j) % m)];
    return mat;
}

namespace {

// Entry (row, col) of the modal matrix, 0-based. Columns are, in order:
// the constant column, cosine half-angle columns for the positive moduli,
// the alternating-sign column for even orders, and sine half-angle columns
// for the negated moduli in reverse. The column phase (row * s) * 2*pi / m
// is reduced modulo m in integer arithmetic before any multiplication by
// pi, which keeps the trig arguments small at every order.
double modal_entry(int row, int col, int m, int bound, bool even,
                   const std::vector<double>& args) {
    const double inv_sqrt_m = 1.0 / std::sqrt(static_cast<double>(m));
    if (col == 0)
        return inv_sqrt_m;
    if (even && col == bound + 1)
        return (row % 2 == 0) ? inv_sqrt_m : -inv_sqrt_m;

    const bool cosine_block = col <= bound;
    const int s = cosine_block ? col : m - col;
    const long long tau = (static_cast<long long>(row) * s) % m;
    const double angle = args[static_cast<size_t>(s)] / 2.0 +
                         2.0 * std::numbers::pi * static_cast<double>(tau) / m;
    const double amp = std::sqrt(2.0 / static_cast<double>(m));
    return cosine_block ? amp * std::cos(angle) : amp * std::sin(angle);
}

} // namespace

DenseMatrix build_modal_matrix(const HankelParams& params,
                               const AntiCirculantSpectrum& spectrum) {
    const int m = params.dim();
    const int bound = modulus_pair_count(params);
    const bool even = params.even_order_case();
    DenseMatrix mat(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            mat(i, j) = modal_entry(i, j, m, bound, even, spectrum.args);
    return mat;
}

std::vector<double> spectral_diagonal(const HankelParams& params,
                                      const AntiCirculantSpectrum& spectrum) {
    const int m = params.dim();
    const int bound = modulus_pair_count(params);
    std::vector<double> diag;
    diag.reserve(static_cast<size_t>(m));
    diag.push_back(spectrum.values[0].real());
    for (int k = 1; k <= bound; ++k)
        diag.push_back(spectrum.moduli[static_cast<size_t>(k)]);
    if (params.even_order_case())
        diag.push_back(spectrum.values[static_cast<size_t>(m / 2)].real());
    for (int k = bound; k >= 1; --k)
        diag.push_back(-spectrum.moduli[static_cast<size_t>(k)]);
    return diag;
}

UnitVectorPair build_unit_vectors(const HankelParams& params,
                                  const AntiCirculantSpectrum& spectrum) {
    const int m = params.dim();
    const int bound = modulus_pair_count(params);
    const bool even = params.even_order_case();
    UnitVectorPair pair;
    pair.x.resize(static_cast<size_t>(m));
    pair.y.resize(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) {
        pair.x[static_cast<size_t>(j)] = modal_entry(0, j, m, bound, even, spectrum.args);
        pair.y[static_cast<size_t>(j)] = modal_entry(m - 1, j, m, bound, even, spectrum.args);
    }
    return pair;
}

DecompositionReport verify_decompositions(const HankelParams& params) {
    const int m = params.dim();
    const auto spectrum = compute_spectrum(params);
    const auto hankel = build_hankel(params);
    const auto anticirc = build_anticirculant(params);
    const auto modal = build_modal_matrix(params, spectrum);
    const auto diag = spectral_diagonal(params, spectrum);
    const auto uv = build_unit_vectors(params, spectrum);

    DecompositionReport report{};
    report.orthogonality_error =
        max_abs_diff(multiply(transpose(modal), modal), DenseMatrix::identity(m));

    // A = M D M^T
    DenseMatrix scaled = modal;  // M with column j scaled by diag[j]
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            scaled(i, j) *= diag[static_cast<size_t>(j)];
    report.anticirculant_error =
        max_abs_diff(anticirc, multiply(scaled, transpose(modal)));

    // H = M (D - b xx^T - a yy^T) M^T
    DenseMatrix core(m);
    for (int i = 0; i < m; ++i)
        core(i, i) = diag[static_cast<size_t>(i)];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            core(i, j) -= params.b * uv.x[static_cast<size_t>(i)] * uv.x[static_cast<size_t>(j)] +
                          params.a * uv.y[static_cast<size_t>(i)] * uv.y[static_cast<size_t>(j)];
    report.hankel_error =
        max_abs_diff(hankel, multiply(modal, multiply(core, transpose(modal))));

    // A = H + corner bumps
    DenseMatrix embedded = hankel;
    embedded(0, 0) += params.b;
    embedded(m - 1, m - 1) += params.a;
    report.embedding_error = max_abs_diff(anticirc, embedded);

    double xx = 0.0, yy = 0.0, xy = 0.0;
    for (int j = 0; j < m; ++j) {
        xx += uv.x[static_cast<size_t>(j)] * uv.x[static_cast<size_t>(j)];
        yy += uv.y[static_cast<size_t>(j)] * uv.y[static_cast<size_t>(j)];
        xy += uv.x[static_cast<size_t>(j)] * uv.y[static_cast<size_t>(j)];
    }
    report.x_norm_error = std::abs(std::sqrt(xx) - 1.0);
    report.y_norm_error = std::abs(std::sqrt(yy) - 1.0);
    report.xy_dot = std::abs(xy);
    return report;
}

} // namespace antihankel
