#pragma once

// Dense matrix support and the explicit orthogonal decompositions of the
// anti-tridiagonal Hankel matrix H and its anti-circulant completion A:
//
//   A = M * diag(spectral values) * M^T
//   H = M * (diag(spectral values) - b*x*x^T - a*y*y^T) * M^T
//
// where M is the real orthogonal modal matrix assembled from half-angle
// cosines/sines of the anti-circulant eigenvalue arguments, and x, y are
// its first and last rows. The matrices here are small and dense; no
// attempt is made at blocking or sparsity.

#include <span>
#include <vector>

#include "antihankel/spectrum.hpp"

namespace antihankel {

// Row-major square matrix of doubles.
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(int dim, double fill = 0.0)
        : dim_(dim), data_(static_cast<size_t>(dim) * static_cast<size_t>(dim), fill) {}

    static DenseMatrix identity(int dim);

    int dim() const { return dim_; }
    double& operator()(int i, int j) {
        return data_[static_cast<size_t>(i) * static_cast<size_t>(dim_) + static_cast<size_t>(j)];
    }
    double operator()(int i, int j) const {
        return data_[static_cast<size_t>(i) * static_cast<size_t>(dim_) + static_cast<size_t>(j)];
    }

    std::span<const double> data() const { return data_; }

    double max_norm() const;        // max |a_ij|
    double frobenius_norm() const;

private:
    int dim_ = 0;
    std::vector<double> data_;
};

DenseMatrix multiply(const DenseMatrix& lhs, const DenseMatrix& rhs);
DenseMatrix transpose(const DenseMatrix& mat);
std::vector<double> multiply(const DenseMatrix& mat, std::span<const double> vec);
double max_abs_diff(const DenseMatrix& lhs, const DenseMatrix& rhs);

// First and last rows of the modal matrix; both are unit vectors and they
// are orthogonal to each other. They carry the rank-two corner correction
// that turns the anti-circulant back into the Hankel matrix.
struct UnitVectorPair {
    std::vector<double> x;  // first modal row
    std::vector<double> y;  // last modal row
};

// Max-norm residuals of the explicit decompositions for one parameter set.
struct DecompositionReport {
    double orthogonality_error;   // ||M^T M - I||
    double anticirculant_error;   // ||A - M D M^T||
    double hankel_error;          // ||H - M (D - b xx^T - a yy^T) M^T||
    double embedding_error;       // ||A - (H + b e1 e1^T + a em em^T)||
    double x_norm_error;          // | ||x|| - 1 |
    double y_norm_error;          // | ||y|| - 1 |
    double xy_dot;                // |x . y|
};

// The anti-tridiagonal Hankel matrix of order n + 2 for the given
// parameters: a on i + j = n + 2 (1-based), c on i + j = n + 3,
// b on i + j = n + 4.
DenseMatrix build_hankel(const HankelParams& params);

// The anti-circulant of the same order, first row (b, 0, ..., 0, a, c).
DenseMatrix build_anticirculant(const HankelParams& params);

// The orthogonal modal matrix M diagonalising the anti-circulant. Column
// angles are reduced with integer arithmetic so large orders lose no
// accuracy to phase accumulation.
DenseMatrix build_modal_matrix(const HankelParams& params,
                               const AntiCirculantSpectrum& spectrum);

// Diagonal of M^T A M in column (spectral) order: the real eigenvalue
// a + b + c first, then the positive moduli, the middle real eigenvalue
// a + b - c for even n, then the negated moduli in reverse.
std::vector<double> spectral_diagonal(const HankelParams& params,
                                      const AntiCirculantSpectrum& spectrum);

// Rows 0 and n + 1 of the modal matrix, computed entry-for-entry by the
// same kernel as build_modal_matrix so they agree with it exactly.
UnitVectorPair build_unit_vectors(const HankelParams& params,
                                  const AntiCirculantSpectrum& spectrum);

// Builds everything above and measures all decomposition residuals.
DecompositionReport verify_decompositions(const HankelParams& params);

} // namespace antihankel
