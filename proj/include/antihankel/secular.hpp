#pragma once

// Rational secular functions whose zeros are the eigenvalues of the
// anti-tridiagonal Hankel matrix that are not pole values.
//
// The building block is the two-angle pole sum
//
//   S(t; alpha, beta) = 1/(t - r0)
//     + 2 * sum_{k=1}^{bound} [ cos(h_k - alpha*k) * cos(h_k - beta*k) / (t - p_k)
//                             + sin(h_k - alpha*k) * sin(h_k - beta*k) / (t + p_k) ]
//
// where r0 = a + b + c, p_k are the anti-circulant moduli and h_k the
// corresponding half arguments. For even orders the sum gains the extra
// real pole r_mid = a + b - c. The secular function combines three fixed
// angle choices of S — (phi, phi), (0, 0) and (0, phi) with
// phi = 2*pi/(n+2) — into
//
//   1 + (a/m)*S(phi,phi) + (b/m)*S(0,0)
//     + (a*b/m^2) * [ S(phi,phi)*S(0,0) - X^2 ]
//
// with m = n + 2 and X = S(0,phi) for odd n; for even n the sums include
// the extra pole and X = S(0,phi) - 2/(t - r_mid).
//
// Evaluation anywhere within tol::pole_exclusion * scale of a pole raises
// PoleProximityError. Sums are compensated (Kahan), one accumulator per
// pole sign, so clustered poles cannot silently cancel.

#include <vector>

#include "antihankel/errors.hpp"
#include "antihankel/spectrum.hpp"

namespace antihankel {

class SecularContext {
public:
    SecularContext(const HankelParams& params,
                   const AntiCirculantSpectrum& spectrum);

    const HankelParams& params() const { return params_; }
    int dim() const { return m_; }
    int bound() const { return bound_; }
    bool even_order_case() const { return even_; }
    double phase_step() const { return phase_step_; }   // 2*pi/(n+2)
    double pole_exclusion() const { return eps_pole_; }

    double lambda_first() const { return lam0_; }       // pole a + b + c
    double lambda_middle() const;                       // pole a + b - c (even only)

    // Precomputed per-modulus data, index 1..bound (index 0 unused).
    const std::vector<double>& moduli() const { return moduli_; }
    const std::vector<double>& half_args() const { return half_args_; }

    // Cosine/sine of 2*pi*j/(n+2) for j = 0 .. n+1, exact at the axes.
    const std::vector<double>& phase_cos() const { return phase_cos_; }
    const std::vector<double>& phase_sin() const { return phase_sin_; }

    // The two-angle pole sum S(t; alpha, beta); symmetric in (alpha, beta).
    double pole_sum(double t, double alpha, double beta) const;

    // Same plus the middle-pole term 1/(t - r_mid). Even orders only;
    // throws std::logic_error otherwise.
    double pole_sum_even(double t, double alpha, double beta) const;

    // The secular function and its derivative at t. The three fixed-angle
    // sums share one fused pass over the poles.
    double secular(double t) const;
    double secular_derivative(double t) const;

private:
    struct SumBundle {
        double pp = 0.0, zz = 0.0, zp = 0.0;     // S at (phi,phi), (0,0), (0,phi)
        double dpp = 0.0, dzz = 0.0, dzp = 0.0;  // derivatives of the same
    };
    SumBundle fused_sums(double t, bool want_derivative) const;
    void check_distance(double t, double pole) const;

    HankelParams params_;
    int m_;
    int bound_;
    bool even_;
    double phase_step_;
    double eps_pole_;
    double lam0_;
    double lam_mid_;  // meaningful only when even_
    std::vector<double> moduli_;
    std::vector<double> half_args_;
    std::vector<double> phase_cos_;
    std::vector<double> phase_sin_;
};

// Convenience: context straight from parameters.
SecularContext make_secular_context(const HankelParams& params);

} // namespace antihankel
