#include "antihankel/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace antihankel {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kSymmetryTol = 1e-13;

double off_diagonal_norm(const DenseMatrix& a) {
    const int m = a.dim();
    double sum = 0.0;
    for (int p = 0; p < m; ++p)
        for (int q = p + 1; q < m; ++q)
            sum += 2.0 * a(p, q) * a(p, q);
    return std::sqrt(sum);
}

void rotate(DenseMatrix& a, DenseMatrix& v, int p, int q) {
    const double apq = a(p, q);
    if (apq == 0.0)
        return;
    const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
    // Smaller root of t^2 + 2*tau*t - 1 = 0; the stable form avoids
    // cancellation for large |tau|.
    double t;
    if (std::abs(tau) > 1e150) {
        t = 0.5 / tau;
    } else {
        t = ((tau >= 0.0) ? 1.0 : -1.0) /
            (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    }
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const int m = a.dim();
    const double app = a(p, p);
    const double aqq = a(q, q);
    a(p, p) = app - t * apq;
    a(q, q) = aqq + t * apq;
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    for (int i = 0; i < m; ++i) {
        if (i == p || i == q)
            continue;
        const double aip = a(i, p);
        const double aiq = a(i, q);
        a(i, p) = c * aip - s * aiq;
        a(p, i) = a(i, p);
        a(i, q) = s * aip + c * aiq;
        a(q, i) = a(i, q);
    }
    for (int i = 0; i < m; ++i) {
        const double vip = v(i, p);
        const double viq = v(i, q);
        v(i, p) = c * vip - s * viq;
        v(i, q) = s * vip + c * viq;
    }
}

} // namespace

EigenDecomposition jacobi_eigen(const DenseMatrix& matrix, double tol) {
    const int m = matrix.dim();
    if (m < 1)
        throw std::invalid_argument("jacobi_eigen: empty matrix");
    if (tol <= 0.0)
        throw std::invalid_argument("jacobi_eigen: tolerance must be positive");
    const double max_entry = matrix.max_norm();
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (std::abs(matrix(i, j) - matrix(j, i)) > kSymmetryTol * max_entry)
                throw std::invalid_argument("jacobi_eigen: matrix is not symmetric");

    DenseMatrix a = matrix;
    // Re-symmetrise so tiny asymmetries within tolerance cannot drift.
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const double mean = 0.5 * (a(i, j) + a(j, i));
            a(i, j) = mean;
            a(j, i) = mean;
        }
    const DenseMatrix original = a;
    DenseMatrix v = DenseMatrix::identity(m);
    const double fro = matrix.frobenius_norm();

    int sweeps = 0;
    bool converged = false;
    for (; sweeps <= kMaxSweeps; ++sweeps) {
        if (off_diagonal_norm(a) <= tol * fro) {
            converged = true;
            break;
        }
        if (sweeps == kMaxSweeps)
            break;
        // Threshold strategy: early sweeps skip entries that are small
        // against the current off-diagonal mass, later sweeps rotate all.
        double abs_sum = 0.0;
        for (int p = 0; p < m; ++p)
            for (int q = p + 1; q < m; ++q)
                abs_sum += std::abs(a(p, q));
        const double thresh =
            (sweeps < 3) ? 0.2 * abs_sum / (static_cast<double>(m) * m) : 0.0;
        for (int p = 0; p < m; ++p)
            for (int q = p + 1; q < m; ++q)
                if (std::abs(a(p, q)) > thresh)
                    rotate(a, v, p, q);
    }
    if (!converged)
        throw ConvergenceError("jacobi_eigen: no convergence within 100 sweeps");

    // Rotations accumulate a few ulps of drift in the diagonal. One
    // Rayleigh-quotient pass against the input matrix recovers the best
    // eigenvalue each vector supports; the correction is computed in
    // residual form so it is not swamped by the quotient's magnitude.
    for (int k = 0; k < m; ++k) {
        const double estimate = a(k, k);
        double correction = 0.0;
        double norm2 = 0.0;
        for (int i = 0; i < m; ++i) {
            double hv = 0.0;
            for (int j = 0; j < m; ++j)
                hv += original(i, j) * v(j, k);
            correction += v(i, k) * (hv - estimate * v(i, k));
            norm2 += v(i, k) * v(i, k);
        }
        a(k, k) = estimate + correction / norm2;
    }

    std::vector<int> order(static_cast<size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a(i, i) < a(j, j); });

    EigenDecomposition out;
    out.values.resize(static_cast<size_t>(m));
    out.vectors = DenseMatrix(m);
    for (int col = 0; col < m; ++col) {
        const int src = order[static_cast<size_t>(col)];
        out.values[static_cast<size_t>(col)] = a(src, src);
        for (int i = 0; i < m; ++i)
            out.vectors(i, col) = v(i, src);
    }
    out.sweeps = sweeps;
    return out;
}

SpectraComparison compare_spectra(std::span<const double> lhs,
                                  std::span<const double> rhs) {
    if (lhs.size() != rhs.size())
        throw std::invalid_argument("compare_spectra: length mismatch");
    SpectraComparison cmp;
    for (size_t i = 0; i < lhs.size(); ++i) {
        const double diff = std::abs(lhs[i] - rhs[i]);
        if (diff > cmp.max_abs_diff) {
            cmp.max_abs_diff = diff;
            cmp.worst_index = static_cast<int>(i);
        }
    }
    return cmp;
}

} // namespace antihankel
