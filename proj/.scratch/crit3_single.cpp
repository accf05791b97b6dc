// Zoom in on the two criterion-3 offenders: compare the oracle eigenvalue,
// its Rayleigh refinement, and the secular root found by bisection, and
// measure the secular slope to see which error budget dominates.
#include <cmath>
#include <cstdio>
#include <vector>

#include "antihankel/oracle.hpp"
#include "antihankel/solver.hpp"

using namespace antihankel;

static void inspect(const HankelParams& p, double mu_hint) {
    const double scale = p.scale();
    const auto spectrum = compute_spectrum(p);
    const SecularContext ctx(p, spectrum);
    const auto poles = pole_multiset(p, spectrum);
    const auto H = build_hankel(p);
    const auto eig = jacobi_eigen(H);
    const int m = p.dim();

    int k_best = 0;
    for (int k = 1; k < m; ++k)
        if (std::abs(eig.values[k] - mu_hint) <
            std::abs(eig.values[k_best] - mu_hint))
            k_best = k;
    const double mu0 = eig.values[k_best];

    std::vector<double> v(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
        v[static_cast<size_t>(i)] = eig.vectors(i, k_best);
    const auto hv = multiply(H, v);
    double corr = 0.0, den = 0.0;
    for (int i = 0; i < m; ++i) {
        corr += v[static_cast<size_t>(i)] *
                (hv[static_cast<size_t>(i)] - mu0 * v[static_cast<size_t>(i)]);
        den += v[static_cast<size_t>(i)] * v[static_cast<size_t>(i)];
    }
    const double mu_rq = mu0 + corr / den;

    // bisect g around mu0 to machine width
    double lo = mu0 - 1e-9 * scale, hi = mu0 + 1e-9 * scale;
    double flo = ctx.secular(lo), fhi = ctx.secular(hi);
    double mu_bis = mu0;
    if (flo * fhi < 0.0) {
        for (int it = 0; it < 200 && hi - lo > 1e-18 * scale; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi)
                break;
            const double fm = ctx.secular(mid);
            if ((fm < 0.0) == (flo < 0.0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
                fhi = fm;
            }
        }
        mu_bis = 0.5 * (lo + hi);
    } else {
        std::printf("  (no sign change in +-1e-9*scale window)\n");
    }

    double dist = 1e300;
    for (double d : poles.values)
        dist = std::min(dist, std::abs(mu0 - d));

    std::printf("n=%d a=%+.4f b=%+.4f c=%+.4f  dist_pole=%.3e\n", p.n, p.a,
                p.b, p.c, dist);
    std::printf("  mu_oracle = %+.17e  |g|=%.3e\n", mu0,
                std::abs(ctx.secular(mu0)));
    std::printf("  mu_rq     = %+.17e  |g|=%.3e  (mu_rq-mu0=%.3e)\n", mu_rq,
                std::abs(ctx.secular(mu_rq)), mu_rq - mu0);
    std::printf("  mu_bisect = %+.17e  |g|=%.3e  (mu_bis-mu0=%.3e)\n", mu_bis,
                std::abs(ctx.secular(mu_bis)), mu_bis - mu0);
    std::printf("  |g'(mu)|  = %.3e   residual |Hv-mu0 v| = %.3e\n",
                std::abs(ctx.secular_derivative(mu0)), [&] {
                    double s = 0.0;
                    for (int i = 0; i < m; ++i) {
                        const double r = hv[static_cast<size_t>(i)] -
                                         mu0 * v[static_cast<size_t>(i)];
                        s += r * r;
                    }
                    return std::sqrt(s);
                }());
}

int main() {
    inspect({19, 1.7707, -0.5321, 2.7710}, 4.009909862358e+00);
    inspect({31, -2.5973, 0.0776, -0.2074}, -2.744676235745e+00);
    return 0;
}
