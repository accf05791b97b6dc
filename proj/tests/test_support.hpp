#pragma once

// Shared helpers for the unit tests. The determinant here is deliberately
// written against the raw matrix (plain LU) so that identities checked
// with it do not reuse the library's own elimination code.

#include <cmath>
#include <random>
#include <vector>

#include "antihankel/matrix.hpp"
#include "antihankel/spectrum.hpp"

namespace testsupport {

inline antihankel::HankelParams random_params(std::mt19937& rng, int n) {
    std::uniform_real_distribution<double> coeff(-3.0, 3.0);
    antihankel::HankelParams params;
    params.n = n;
    params.a = coeff(rng);
    params.b = coeff(rng);
    params.c = coeff(rng);
    return params;
}

// det(mat) via partial-pivot LU.
inline double lu_determinant(antihankel::DenseMatrix mat) {
    const int m = mat.dim();
    double det = 1.0;
    for (int col = 0; col < m; ++col) {
        int best = col;
        for (int r = col + 1; r < m; ++r)
            if (std::abs(mat(r, col)) > std::abs(mat(best, col)))
                best = r;
        if (mat(best, col) == 0.0)
            return 0.0;
        if (best != col) {
            for (int j = 0; j < m; ++j)
                std::swap(mat(col, j), mat(best, j));
            det = -det;
        }
        det *= mat(col, col);
        for (int r = col + 1; r < m; ++r) {
            const double factor = mat(r, col) / mat(col, col);
            for (int j = col; j < m; ++j)
                mat(r, j) -= factor * mat(col, j);
        }
    }
    return det;
}

inline double residual_norm(const antihankel::DenseMatrix& mat,
                            const std::vector<double>& vec, double value) {
    const std::vector<double> mv = antihankel::multiply(mat, vec);
    double sum = 0.0;
    for (size_t i = 0; i < vec.size(); ++i) {
        const double d = mv[i] - value * vec[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

} // namespace testsupport
