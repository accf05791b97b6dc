// Probe for the criterion-3 forward margin: find the offending instances
// and check whether a tighter Jacobi tolerance (or Rayleigh refinement)
// brings |secular(oracle mu)| under 1e-7.
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "antihankel/oracle.hpp"
#include "antihankel/solver.hpp"

using namespace antihankel;

static double min_dist(double t, const std::vector<double>& poles) {
    double d = 1e300;
    for (double p : poles)
        d = std::min(d, std::abs(t - p));
    return d;
}

int main() {
    std::mt19937 rng(20250817);
    std::uniform_real_distribution<double> coeff(-3.0, 3.0);
    double worst_def = 0.0, worst_tight = 0.0, worst_rq = 0.0;
    for (int n = 1; n <= 32; ++n) {
        for (int rep = 0; rep < 50; ++rep) {
            HankelParams p{n, coeff(rng), coeff(rng), coeff(rng)};
            const double scale = p.scale();
            const auto spectrum = compute_spectrum(p);
            const SecularContext ctx(p, spectrum);
            const auto poles = pole_multiset(p, spectrum);
            const auto H = build_hankel(p);
            const auto eig = jacobi_eigen(H);
            const auto eig_tight = jacobi_eigen(H, 1e-15);
            const int m = p.dim();
            for (int k = 0; k < m; ++k) {
                const double mu = eig.values[k];
                if (min_dist(mu, poles.values) <= 1e-6 * scale)
                    continue;
                const double g = std::abs(ctx.secular(mu));
                if (g > 5e-8)
                    std::printf("n=%2d a=%+.4f b=%+.4f c=%+.4f mu=%+.12e "
                                "dist=%.3e scale=%.2f |g|=%.3e\n",
                                n, p.a, p.b, p.c, mu,
                                min_dist(mu, poles.values), scale, g);
                worst_def = std::max(worst_def, g);
                // same eigenvalue from the tighter oracle run
                const double mu2 = eig_tight.values[k];
                if (min_dist(mu2, poles.values) > 1e-6 * scale)
                    worst_tight =
                        std::max(worst_tight, std::abs(ctx.secular(mu2)));
                // Rayleigh-quotient refinement of the default-run vector
                std::vector<double> v(static_cast<size_t>(m));
                for (int i = 0; i < m; ++i)
                    v[static_cast<size_t>(i)] = eig.vectors(i, k);
                const auto hv = multiply(H, v);
                double num = 0.0, den = 0.0;
                for (int i = 0; i < m; ++i) {
                    num += v[static_cast<size_t>(i)] * hv[static_cast<size_t>(i)];
                    den += v[static_cast<size_t>(i)] * v[static_cast<size_t>(i)];
                }
                const double mu3 = num / den;
                if (min_dist(mu3, poles.values) > 1e-6 * scale)
                    worst_rq = std::max(worst_rq, std::abs(ctx.secular(mu3)));
            }
        }
    }
    std::printf("worst default  = %.6e\n", worst_def);
    std::printf("worst tol1e-15 = %.6e\n", worst_tight);
    std::printf("worst rayleigh = %.6e\n", worst_rq);
    return 0;
}
