#include "antihankel/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace antihankel {

double HankelParams::scale() const {
    return 1.0 + std::abs(a) + std::abs(b) + std::abs(c);
}

void HankelParams::validate() const {
    if (n < 1)
        throw std::invalid_argument("matrix parameter n must be >= 1");
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c))
        throw std::invalid_argument("matrix coefficients must be finite");
}

int modulus_pair_count(const HankelParams& params) {
    return params.n % 2 != 0 ? (params.n + 1) / 2 : params.n / 2;
}

std::vector<std::complex<double>> unit_roots(int m) {
    std::vector<std::complex<double>> w(static_cast<size_t>(m));
    w[0] = {1.0, 0.0};
    const double step = 2.0 * std::numbers::pi / m;
    for (int j = 1; 2 * j < m; ++j) {
        const double ang = step * j;
        w[static_cast<size_t>(j)] = {std::cos(ang), std::sin(ang)};
        w[static_cast<size_t>(m - j)] = std::conj(w[static_cast<size_t>(j)]);
    }
    if (m % 2 == 0)
        w[static_cast<size_t>(m / 2)] = {-1.0, 0.0};
    return w;
}

AntiCirculantSpectrum compute_spectrum(const HankelParams& params) {
    params.validate();
    const int m = params.dim();
    const auto w = unit_roots(m);

    AntiCirculantSpectrum spectrum;
    spectrum.values.resize(static_cast<size_t>(m));
    spectrum.moduli.resize(static_cast<size_t>(m));
    spectrum.args.resize(static_cast<size_t>(m));

    const double zero_eps = tol::zero_modulus * params.scale();
    for (int k = 0; k < m; ++k) {
        const auto& w2k = w[static_cast<size_t>((2 * k) % m)];
        const auto& wk = w[static_cast<size_t>(k)];
        const std::complex<double> lam = params.b + params.a * w2k + params.c * wk;
        spectrum.values[static_cast<size_t>(k)] = lam;
        const double mod = std::abs(lam);
        spectrum.moduli[static_cast<size_t>(k)] = mod;

        double arg = 0.0;
        if (mod > zero_eps) {
            arg = std::atan2(lam.imag(), lam.real());
            // Keep arguments on the principal branch (-pi, pi]: atan2 yields
            // -pi for negative reals approached from below.
            if (arg == -std::numbers::pi)
                arg = std::numbers::pi;
        }
        spectrum.args[static_cast<size_t>(k)] = arg;
    }
    return spectrum;
}

PoleSet pole_multiset(const HankelParams& params,
                      const AntiCirculantSpectrum& spectrum) {
    const int m = params.dim();
    const int bound = modulus_pair_count(params);

    std::vector<double> values;
    std::vector<PoleSource> sources;
    values.reserve(static_cast<size_t>(m));
    sources.reserve(static_cast<size_t>(m));

    values.push_back(spectrum.values[0].real());
    sources.push_back({PoleOrigin::Lambda0, 0});
    for (int k = 1; k <= bound; ++k) {
        const double mod = spectrum.moduli[static_cast<size_t>(k)];
        values.push_back(mod);
        sources.push_back({PoleOrigin::PlusModulus, k});
        values.push_back(-mod);
        sources.push_back({PoleOrigin::MinusModulus, k});
    }
    if (params.even_order_case()) {
        values.push_back(spectrum.values[static_cast<size_t>(m / 2)].real());
        sources.push_back({PoleOrigin::MiddleLambda, 0});
    }

    std::vector<int> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        return values[static_cast<size_t>(i)] < values[static_cast<size_t>(j)];
    });

    PoleSet poles;
    poles.values.reserve(values.size());
    poles.sources.reserve(values.size());
    for (int idx : order) {
        poles.values.push_back(values[static_cast<size_t>(idx)]);
        poles.sources.push_back(sources[static_cast<size_t>(idx)]);
    }

    const double group_eps = tol::pole_group * params.scale();
    for (double v : poles.values) {
        if (!poles.groups.empty() && v - poles.groups.back().hi <= group_eps) {
            PoleGroup& g = poles.groups.back();
            g.value = (g.value * g.count + v) / (g.count + 1);
            g.count += 1;
            g.hi = v;
        } else {
            poles.groups.push_back({v, 1, v, v});
        }
    }
    return poles;
}

std::vector<Interval> weyl_brackets(const HankelParams& params,
                                    const PoleSet& poles) {
    const double lo_off = std::min({0.0, -params.a, -params.b});
    const double hi_off = std::max({0.0, -params.a, -params.b});
    std::vector<Interval> brackets;
    brackets.reserve(poles.values.size());
    for (double d : poles.values)
        brackets.push_back({d + lo_off, d + hi_off});
    return brackets;
}

} // namespace antihankel
