#pragma once

// Self-contained dense symmetric eigensolver used to cross-check the
// secular solver. Cyclic-by-rows Jacobi: unconditionally convergent,
// small-backward-error, and with no code shared with the rational path,
// which is what makes it a usable oracle.

#include <span>

#include "antihankel/errors.hpp"
#include "antihankel/matrix.hpp"

namespace antihankel {

struct EigenDecomposition {
    std::vector<double> values;  // ascending
    DenseMatrix vectors;         // orthogonal; column i pairs with values[i]
    int sweeps = 0;              // sweeps spent before convergence
};

// Full eigen-decomposition of a symmetric matrix via cyclic Jacobi
// rotations, followed by a Rayleigh-quotient pass that sharpens each
// eigenvalue to the limit its vector supports. `tol` bounds the final
// off-diagonal Frobenius mass relative to the input's Frobenius norm.
// Throws std::invalid_argument when the input is not symmetric (relative
// to its max norm) and ConvergenceError after 100 sweeps without reaching
// the threshold.
EigenDecomposition jacobi_eigen(const DenseMatrix& matrix, double tol = 1e-14);

struct SpectraComparison {
    double max_abs_diff = 0.0;
    int worst_index = -1;
};

// Elementwise comparison of two ascending spectra of equal length.
SpectraComparison compare_spectra(std::span<const double> lhs,
                                  std::span<const double> rhs);

} // namespace antihankel
