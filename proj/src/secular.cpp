#include "antihankel/secular.hpp"

#include <cmath>
#include <numbers>

namespace antihankel {

namespace {

// Compensated accumulator; keeps the positive- and negative-pole sums from
// losing digits when many comparable terms pile up.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double v) {
        const double y = v - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

} // namespace

SecularContext::SecularContext(const HankelParams& params,
                               const AntiCirculantSpectrum& spectrum)
    : params_(params),
      m_(params.dim()),
      bound_(modulus_pair_count(params)),
      even_(params.even_order_case()),
      phase_step_(2.0 * std::numbers::pi / params.dim()),
      eps_pole_(tol::pole_exclusion * params.scale()),
      lam0_(spectrum.values[0].real()),
      lam_mid_(0.0) {
    if (even_)
        lam_mid_ = spectrum.values[static_cast<size_t>(m_ / 2)].real();

    moduli_.resize(static_cast<size_t>(bound_) + 1, 0.0);
    half_args_.resize(static_cast<size_t>(bound_) + 1, 0.0);
    for (int k = 1; k <= bound_; ++k) {
        moduli_[static_cast<size_t>(k)] = spectrum.moduli[static_cast<size_t>(k)];
        half_args_[static_cast<size_t>(k)] = spectrum.args[static_cast<size_t>(k)] / 2.0;
    }

    const auto roots = unit_roots(m_);
    phase_cos_.resize(static_cast<size_t>(m_));
    phase_sin_.resize(static_cast<size_t>(m_));
    for (int j = 0; j < m_; ++j) {
        phase_cos_[static_cast<size_t>(j)] = roots[static_cast<size_t>(j)].real();
        phase_sin_[static_cast<size_t>(j)] = roots[static_cast<size_t>(j)].imag();
    }
}

SecularContext make_secular_context(const HankelParams& params) {
    return SecularContext(params, compute_spectrum(params));
}

double SecularContext::lambda_middle() const {
    if (!even_)
        throw std::logic_error("middle pole exists only for even n");
    return lam_mid_;
}

void SecularContext::check_distance(double t, double pole) const {
    if (std::abs(t - pole) < eps_pole_)
        throw PoleProximityError(t, pole);
}

double SecularContext::pole_sum(double t, double alpha, double beta) const {
    check_distance(t, lam0_);
    KahanSum plus, minus;
    for (int k = 1; k <= bound_; ++k) {
        const double p = moduli_[static_cast<size_t>(k)];
        check_distance(t, p);
        check_distance(t, -p);
        const double h = half_args_[static_cast<size_t>(k)];
        const double ca = std::cos(h - alpha * k);
        const double cb = std::cos(h - beta * k);
        const double sa = std::sin(h - alpha * k);
        const double sb = std::sin(h - beta * k);
        plus.add(ca * cb / (t - p));
        minus.add(sa * sb / (t + p));
    }
    return 1.0 / (t - lam0_) + 2.0 * (plus.sum + minus.sum);
}

double SecularContext::pole_sum_even(double t, double alpha, double beta) const {
    if (!even_)
        throw std::logic_error("even-order pole sum requested for odd n");
    check_distance(t, lam_mid_);
    return pole_sum(t, alpha, beta) + 1.0 / (t - lam_mid_);
}

SecularContext::SumBundle SecularContext::fused_sums(double t,
                                                     bool want_derivative) const {
    check_distance(t, lam0_);
    if (even_)
        check_distance(t, lam_mid_);

    // One compensated accumulator per (angle pair, pole sign); the louder
    // near-pole terms then cannot swallow the rest of the sum.
    KahanSum pp_p, pp_m, zz_p, zz_m, zp_p, zp_m;
    KahanSum dpp_p, dpp_m, dzz_p, dzz_m, dzp_p, dzp_m;

    for (int k = 1; k <= bound_; ++k) {
        const double p = moduli_[static_cast<size_t>(k)];
        check_distance(t, p);
        check_distance(t, -p);
        const double h = half_args_[static_cast<size_t>(k)];
        const double u = phase_step_ * k;
        const double ch = std::cos(h);
        const double sh = std::sin(h);
        const double cy = std::cos(h - u);
        const double sy = std::sin(h - u);
        const double ip = 1.0 / (t - p);
        const double im = 1.0 / (t + p);

        pp_p.add(cy * cy * ip);
        pp_m.add(sy * sy * im);
        zz_p.add(ch * ch * ip);
        zz_m.add(sh * sh * im);
        zp_p.add(ch * cy * ip);
        zp_m.add(sh * sy * im);
        if (want_derivative) {
            const double ip2 = ip * ip;
            const double im2 = im * im;
            dpp_p.add(cy * cy * ip2);
            dpp_m.add(sy * sy * im2);
            dzz_p.add(ch * ch * ip2);
            dzz_m.add(sh * sh * im2);
            dzp_p.add(ch * cy * ip2);
            dzp_m.add(sh * sy * im2);
        }
    }

    const double base = 1.0 / (t - lam0_);
    SumBundle out;
    out.pp = base + 2.0 * (pp_p.sum + pp_m.sum);
    out.zz = base + 2.0 * (zz_p.sum + zz_m.sum);
    out.zp = base + 2.0 * (zp_p.sum + zp_m.sum);
    if (even_) {
        const double mid = 1.0 / (t - lam_mid_);
        out.pp += mid;
        out.zz += mid;
        out.zp += mid;
    }
    if (want_derivative) {
        const double dbase = -base * base;
        out.dpp = dbase - 2.0 * (dpp_p.sum + dpp_m.sum);
        out.dzz = dbase - 2.0 * (dzz_p.sum + dzz_m.sum);
        out.dzp = dbase - 2.0 * (dzp_p.sum + dzp_m.sum);
        if (even_) {
            const double mid = 1.0 / (t - lam_mid_);
            const double dmid = -mid * mid;
            out.dpp += dmid;
            out.dzz += dmid;
            out.dzp += dmid;
        }
    }
    return out;
}

double SecularContext::secular(double t) const {
    const SumBundle s = fused_sums(t, false);
    const double inv_m = 1.0 / m_;
    double cross = s.zp;
    if (even_)
        cross -= 2.0 / (t - lam_mid_);
    return 1.0 + params_.a * inv_m * s.pp + params_.b * inv_m * s.zz +
           params_.a * params_.b * inv_m * inv_m * (s.pp * s.zz - cross * cross);
}

double SecularContext::secular_derivative(double t) const {
    const SumBundle s = fused_sums(t, true);
    const double inv_m = 1.0 / m_;
    double cross = s.zp;
    double dcross = s.dzp;
    if (even_) {
        const double mid = 1.0 / (t - lam_mid_);
        cross -= 2.0 * mid;
        dcross += 2.0 * mid * mid;
    }
    return params_.a * inv_m * s.dpp + params_.b * inv_m * s.dzz +
           params_.a * params_.b * inv_m * inv_m *
               (s.dpp * s.zz + s.pp * s.dzz - 2.0 * cross * dcross);
}

} // namespace antihankel
