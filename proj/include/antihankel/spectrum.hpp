#pragma once

// Spectral data for real anti-tridiagonal Hankel matrices.
//
// The matrices handled here have order m = n + 2 and three parameters
// (a, b, c): entry (i, j) equals a on the anti-diagonal i + j = m (1-based),
// c on i + j = m + 1, and b on i + j = m + 2; every other entry is zero.
// Embedding the matrix into the anti-circulant with first row
// (b, 0, ..., 0, a, c) gives a rank-two corner correction whose spectral
// data — the anti-circulant eigenvalues lambda_k, their moduli, and their
// principal arguments — drive everything else: the pole multiset of the
// rational secular functions, the Weyl inclusion brackets, and the
// closed-form eigenvectors.

#include <complex>
#include <stdexcept>
#include <vector>

namespace antihankel {

// Parameters of one anti-tridiagonal Hankel matrix of order n + 2.
struct HankelParams {
    int n = 1;       // order minus two; n >= 1
    double a = 0.0;  // value on the anti-diagonal i + j = n + 2
    double b = 0.0;  // value on the anti-diagonal i + j = n + 4
    double c = 0.0;  // value on the central anti-diagonal i + j = n + 3

    int dim() const { return n + 2; }
    bool even_order_case() const { return n % 2 == 0; }

    // Scale used to make every tolerance in the library relative:
    // 1 + |a| + |b| + |c|.
    double scale() const;

    // Throws std::invalid_argument if n < 1 or any coefficient is not finite.
    void validate() const;
};

// Eigen-data of the associated anti-circulant of order m = n + 2:
//   lambda_k = b + a*w^(2k mod m) + c*w^(k mod m),  w = exp(2*pi*i/m).
// Arguments are principal, in (-pi, pi], and are forced to zero whenever
// the modulus is negligible so that downstream half-angle formulas stay
// well defined.
struct AntiCirculantSpectrum {
    std::vector<std::complex<double>> values;  // lambda_0 .. lambda_{m-1}
    std::vector<double> moduli;                // |lambda_k|
    std::vector<double> args;                  // principal Arg(lambda_k)

    int dim() const { return static_cast<int>(values.size()); }
};

// Where a pole of the secular function comes from.
enum class PoleOrigin {
    Lambda0,       // the real eigenvalue a + b + c
    PlusModulus,   // +|lambda_k|, k = 1 .. bound
    MinusModulus,  // -|lambda_k|, k = 1 .. bound
    MiddleLambda,  // the real eigenvalue a + b - c (even n only)
};

struct PoleSource {
    PoleOrigin origin;
    int index;  // k for the modulus origins, 0 otherwise
};

// A maximal cluster of pole values lying within eps_group of each other.
// [lo, hi] is the extent of the cluster; value is its mean, count its
// multiplicity in the pole multiset.
struct PoleGroup {
    double value;
    int count;
    double lo;
    double hi;
};

// The n + 2 poles of the rational secular function, sorted ascending,
// with provenance and duplicate grouping.
struct PoleSet {
    std::vector<double> values;        // sorted, size n + 2
    std::vector<PoleSource> sources;   // parallel to values
    std::vector<PoleGroup> groups;     // duplicates merged within eps_group

    int dim() const { return static_cast<int>(values.size()); }
};

// A closed interval [lo, hi].
struct Interval {
    double lo;
    double hi;
    bool contains(double t) const { return lo <= t && t <= hi; }
};

// Number of modulus pairs feeding the secular sums: (n+1)/2 for odd n,
// n/2 for even n.
int modulus_pair_count(const HankelParams& params);

// Unit roots exp(2*pi*i*j/m), j = 0 .. m-1, computed on the closed upper
// half circle and reflected so that conjugate pairs are bitwise conjugate,
// w[0] = 1 exactly, and w[m/2] = -1 exactly for even m.
std::vector<std::complex<double>> unit_roots(int m);

// Anti-circulant eigenvalues, moduli, and principal arguments.
// lambda_0 = a + b + c and, for even order, lambda_{m/2} = a + b - c are
// produced exactly; the unit roots are reflected about the real axis so
// conjugate symmetry of the remaining values is bitwise.
AntiCirculantSpectrum compute_spectrum(const HankelParams& params);

// The sorted pole multiset {lambda_0, +/-|lambda_k| .. , [a + b - c]} with
// duplicate groups merged within eps_group = 1e-10 * scale.
PoleSet pole_multiset(const HankelParams& params,
                      const AntiCirculantSpectrum& spectrum);

// Weyl inclusion brackets: the k-th ascending eigenvalue of the Hankel
// matrix lies in [d_k + min(0, -a, -b), d_k + max(0, -a, -b)] where d_k is
// the k-th ascending pole value.
std::vector<Interval> weyl_brackets(const HankelParams& params,
                                    const PoleSet& poles);

// Tolerance helpers shared across the library. All are relative to
// HankelParams::scale() unless stated otherwise.
namespace tol {
inline constexpr double zero_modulus = 1e-14;   // treat |lambda_k| below this as 0
inline constexpr double pole_group = 1e-10;     // duplicate-pole merge radius
inline constexpr double pole_exclusion = 1e-12; // secular evaluation guard
inline constexpr double denominator = 1e-8;     // times (n+2), closed-form guard
} // namespace tol

} // namespace antihankel
