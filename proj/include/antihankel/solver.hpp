#pragma once

// Complete eigensolver for anti-tridiagonal Hankel matrices.
//
// Every eigenvalue is either a zero of the rational secular function or
// one of its pole values. Zeros are isolated by sign-scanning the open
// segments between neighbouring pole groups (plus the two flanks of the
// Weyl inclusion hull) and bisecting each crossing; pole values are
// classified by the rank deficiency of H - dI. When the two counts do not
// add up to n + 2 the scan density is raised; if the densest scan still
// cannot account for the whole spectrum, solve throws CompletenessError
// rather than return a silently short answer.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "antihankel/matrix.hpp"
#include "antihankel/secular.hpp"

namespace antihankel {

enum class EigenKind {
    SecularZero,  // isolated zero of the secular function
    PoleValue,    // pole value with positive rank deficiency
};

struct EigenPair {
    double value = 0.0;
    EigenKind kind = EigenKind::SecularZero;
    std::optional<std::vector<double>> vector;  // unit norm when present
    std::optional<double> residual;             // ||H v - value * v||_2
};

struct SolveDiagnostics {
    int scan_samples = 0;   // per-segment samples of the accepted pass
    bool complete = false;  // all n + 2 eigenvalues accounted for
    std::optional<double> max_residual;  // worst vector residual, if any
};

struct SpectralResult {
    std::vector<EigenPair> pairs;  // ascending by value
    SolveDiagnostics diagnostics;
};

// Raised when even the densest scan plus pole classification cannot
// account for all n + 2 eigenvalues. Carries whatever was found.
class CompletenessError : public SolverError {
public:
    CompletenessError(const std::string& what, SpectralResult partial)
        : SolverError(what), partial_(std::move(partial)) {}
    const SpectralResult& partial() const { return partial_; }

private:
    SpectralResult partial_;
};

struct PoleEigenvalue {
    double value = 0.0;
    int multiplicity = 0;  // eigenvalue multiplicity; 0 when not an eigenvalue
};

// All zeros of the secular function, ascending. Each inter-pole segment is
// sampled at `samples + 1` points; crossings are bisected to width <= tol
// and polished with one safeguarded Newton step. Zeros closer together
// than the pole-group radius are merged.
std::vector<double> isolate_roots(const SecularContext& context,
                                  const PoleSet& poles,
                                  std::span<const Interval> brackets,
                                  double tol,
                                  int samples = 64);

// Eigenvalue multiplicity of every distinct pole value, decided by the
// rank of H - dI under partial-pivot elimination with a scale-relative
// pivot threshold.
std::vector<PoleEigenvalue> classify_pole_eigenvalues(const HankelParams& params,
                                                      const PoleSet& poles);

// Closed-form eigenvector for a secular zero mu: unit 2-norm, largest
// entry positive. Throws PoleValueInputError when mu collides with a pole
// and DegenerateDenominatorError when the rank-one denominator falls under
// its guard; callers then fall back to inverse_iteration_vector.
std::vector<double> secular_eigenvector(const SecularContext& context, double mu);
std::vector<double> secular_eigenvector(const HankelParams& params, double mu);

// Shifted inverse iteration (three passes, deterministic seeding) for
// eigenvalues whose closed form is unavailable; `orthogonal_to` makes
// vectors of a repeated eigenvalue mutually orthogonal.
std::vector<double> inverse_iteration_vector(
    const DenseMatrix& hankel, double mu, double scale,
    std::span<const std::vector<double>> orthogonal_to = {}, int seed_index = 0);

// Complete spectrum of the Hankel matrix defined by `params`, with unit
// eigenvectors and residuals when `want_vectors` is set.
SpectralResult solve(const HankelParams& params, double tol = 1e-10,
                     bool want_vectors = false);

} // namespace antihankel
