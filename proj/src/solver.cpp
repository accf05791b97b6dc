#include "antihankel/solver.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace antihankel {

namespace {

constexpr double kHullPadding = 1e-9;        // times scale, beyond the Weyl hull
constexpr double kOvershootRadius = 1e-8;    // times scale, root-vs-pole healing
constexpr double kPivotThreshold = 1e-10;    // times scale * ||H||, rank decisions
constexpr double kIterationJitter = 1e-10;   // times scale, inverse-iteration shift
constexpr int kMaxBisection = 200;

double bisect(const SecularContext& context, double lo, double hi,
              double flo, double tol) {
    // Invariant: sign change between lo and hi (flo is the sign at lo).
    for (int i = 0; i < kMaxBisection && hi - lo > tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        const double fmid = context.secular(mid);
        if (fmid == 0.0)
            return mid;
        if ((fmid < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double newton_polish(const SecularContext& context, double x, double lo,
                     double hi) {
    try {
        const double fx = context.secular(x);
        if (fx == 0.0)
            return x;
        const double dfx = context.secular_derivative(x);
        if (!std::isfinite(dfx) || dfx == 0.0)
            return x;
        const double candidate = x - fx / dfx;
        if (!(candidate > lo && candidate < hi))
            return x;
        const double fc = context.secular(candidate);
        return std::abs(fc) <= std::abs(fx) ? candidate : x;
    } catch (const PoleProximityError&) {
        return x;
    }
}

void flip_to_canonical_sign(std::vector<double>& v) {
    double best = 0.0;
    size_t best_idx = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        const double mag = std::abs(v[i]);
        if (mag > best) {
            best = mag;
            best_idx = i;
        }
    }
    if (best > 0.0 && v[best_idx] < 0.0)
        for (double& e : v)
            e = -e;
}

void normalize(std::vector<double>& v) {
    double sum = 0.0;
    for (double e : v)
        sum += e * e;
    const double norm = std::sqrt(sum);
    if (norm > 0.0)
        for (double& e : v)
            e /= norm;
}

double vector_norm(std::span<const double> v) {
    double sum = 0.0;
    for (double e : v)
        sum += e * e;
    return std::sqrt(sum);
}

} // namespace

std::vector<double> isolate_roots(const SecularContext& context,
                                  const PoleSet& poles,
                                  std::span<const Interval> brackets,
                                  double tol,
                                  int samples) {
    if (tol <= 0.0)
        throw std::invalid_argument("isolate_roots: tol must be positive");
    if (samples < 2)
        throw std::invalid_argument("isolate_roots: need at least 2 samples");
    if (brackets.empty())
        return {};

    const double scale = context.params().scale();
    const double margin = 2.0 * context.pole_exclusion();
    const double padding = kHullPadding * scale;

    // Open segments between neighbouring pole groups plus the two flanks
    // of the padded Weyl hull; every secular zero lives in one of them.
    std::vector<Interval> segments;
    double cursor = brackets.front().lo - padding;
    for (const PoleGroup& group : poles.groups) {
        const double stop = group.lo - margin;
        if (stop > cursor)
            segments.push_back({cursor, stop});
        cursor = std::max(cursor, group.hi + margin);
    }
    const double hull_hi = brackets.back().hi + padding;
    if (hull_hi > cursor)
        segments.push_back({cursor, hull_hi});

    std::vector<double> roots;
    for (const Interval& seg : segments) {
        const double width = seg.hi - seg.lo;
        double prev_t = seg.lo;
        double prev_f = context.secular(prev_t);
        if (prev_f == 0.0)
            roots.push_back(prev_t);
        for (int i = 1; i <= samples; ++i) {
            const double t = seg.lo + width * i / samples;
            const double f = context.secular(t);
            if (f == 0.0) {
                roots.push_back(t);
            } else if (prev_f != 0.0 && (f < 0.0) != (prev_f < 0.0)) {
                double root = bisect(context, prev_t, t, prev_f, tol);
                root = newton_polish(context, root, prev_t, t);
                roots.push_back(root);
            }
            prev_t = t;
            prev_f = f;
        }
    }

    std::sort(roots.begin(), roots.end());
    const double merge_eps = tol::pole_group * scale;
    std::vector<double> merged;
    for (double r : roots) {
        if (!merged.empty() && r - merged.back() <= merge_eps)
            merged.back() = 0.5 * (merged.back() + r);
        else
            merged.push_back(r);
    }
    return merged;
}

std::vector<PoleEigenvalue> classify_pole_eigenvalues(const HankelParams& params,
                                                      const PoleSet& poles) {
    params.validate();
    const int m = params.dim();
    const DenseMatrix hankel = build_hankel(params);
    const double pivot_floor = kPivotThreshold * params.scale() * hankel.max_norm();

    std::vector<PoleEigenvalue> out;
    out.reserve(poles.groups.size());
    for (const PoleGroup& group : poles.groups) {
        DenseMatrix work = hankel;
        for (int i = 0; i < m; ++i)
            work(i, i) -= group.value;

        // Column-skipping echelon elimination: columns whose best pivot
        // stays under the floor contribute to the nullity.
        int rank = 0;
        for (int col = 0; col < m && rank < m; ++col) {
            int best_row = rank;
            double best = std::abs(work(rank, col));
            for (int r = rank + 1; r < m; ++r) {
                const double mag = std::abs(work(r, col));
                if (mag > best) {
                    best = mag;
                    best_row = r;
                }
            }
            if (best <= pivot_floor)
                continue;
            if (best_row != rank)
                for (int j = 0; j < m; ++j)
                    std::swap(work(rank, j), work(best_row, j));
            const double pivot = work(rank, col);
            for (int r = rank + 1; r < m; ++r) {
                const double factor = work(r, col) / pivot;
                if (factor == 0.0)
                    continue;
                work(r, col) = 0.0;
                for (int j = col + 1; j < m; ++j)
                    work(r, j) -= factor * work(rank, j);
            }
            ++rank;
        }
        out.push_back({group.value, m - rank});
    }
    return out;
}

namespace {

// Expansion kernel shared by all eigenvector components. For a fixed
// abscissa mu and inner angle v, the two-angle pole sum at component angle
// alpha_k = 2*(1-k)*pi/m reduces to
//   S(mu; alpha_k, v) = base + 2 * sum_j [ cos(alpha_k j) * C_j + sin(alpha_k j) * S_j ]
// with C, S independent of k, so the whole basis costs O(m^2) multiply-adds
// and all trig comes from the exact phase tables.
struct ComponentExpansion {
    double base = 0.0;
    std::vector<double> c;  // index 1..bound
    std::vector<double> s;
};

ComponentExpansion make_expansion(const SecularContext& ctx, double mu,
                                  bool with_phase) {
    const int bound = ctx.bound();
    ComponentExpansion e;
    e.base = 1.0 / (mu - ctx.lambda_first());
    e.c.resize(static_cast<size_t>(bound) + 1, 0.0);
    e.s.resize(static_cast<size_t>(bound) + 1, 0.0);
    const double phi = ctx.phase_step();
    for (int k = 1; k <= bound; ++k) {
        const double p = ctx.moduli()[static_cast<size_t>(k)];
        const double h = ctx.half_args()[static_cast<size_t>(k)];
        const double ip = 1.0 / (mu - p);
        const double im = 1.0 / (mu + p);
        const double ch = std::cos(h);
        const double sh = std::sin(h);
        const double hv = with_phase ? h - phi * k : h;
        const double cv = with_phase ? std::cos(hv) : ch;
        const double sv = with_phase ? std::sin(hv) : sh;
        e.c[static_cast<size_t>(k)] = ch * cv * ip + sh * sv * im;
        e.s[static_cast<size_t>(k)] = sh * cv * ip - ch * sv * im;
    }
    return e;
}

// S(mu; alpha_k, v) for the 0-based component index; k_one = index + 1.
double expansion_at(const SecularContext& ctx, const ComponentExpansion& e,
                    int index) {
    const int m = ctx.dim();
    const int bound = ctx.bound();
    const long long shift = static_cast<long long>(-index);  // (1 - k_one)
    double sum = 0.0;
    for (int j = 1; j <= bound; ++j) {
        long long t = (shift * j) % m;
        if (t < 0)
            t += m;
        sum += ctx.phase_cos()[static_cast<size_t>(t)] * e.c[static_cast<size_t>(j)] +
               ctx.phase_sin()[static_cast<size_t>(t)] * e.s[static_cast<size_t>(j)];
    }
    return e.base + 2.0 * sum;
}

} // namespace

std::vector<double> secular_eigenvector(const SecularContext& ctx, double mu) {
    const int m = ctx.dim();
    const double eps = ctx.pole_exclusion();
    if (std::abs(mu - ctx.lambda_first()) < eps)
        throw PoleValueInputError(mu);
    for (int k = 1; k <= ctx.bound(); ++k) {
        const double p = ctx.moduli()[static_cast<size_t>(k)];
        if (std::abs(mu - p) < eps || std::abs(mu + p) < eps)
            throw PoleValueInputError(mu);
    }
    const bool even = ctx.even_order_case();
    double mid = 0.0;
    if (even) {
        if (std::abs(mu - ctx.lambda_middle()) < eps)
            throw PoleValueInputError(mu);
        mid = 1.0 / (mu - ctx.lambda_middle());
    }

    const double a = ctx.params().a;
    const double b = ctx.params().b;
    const ComponentExpansion with_phase = make_expansion(ctx, mu, true);
    const ComponentExpansion plain = make_expansion(ctx, mu, false);

    // Mixing coefficient of the rank-one update; absent when a == 0.
    double coef = 0.0;
    bool mix = false;
    if (a != 0.0) {
        // S(mu; 0, 0) and S(mu; 0, v) are the index-0 components.
        double s_zz = plain.base;
        double s_zp = with_phase.base;
        for (int j = 1; j <= ctx.bound(); ++j) {
            s_zz += 2.0 * plain.c[static_cast<size_t>(j)];
            s_zp += 2.0 * with_phase.c[static_cast<size_t>(j)];
        }
        if (even) {
            s_zz += mid;
            s_zp += mid;
        }
        double numerator = s_zp;
        if (even)
            numerator -= 2.0 * mid;
        const double den = b * s_zz + m;
        if (std::abs(den) < tol::denominator * m)
            throw DegenerateDenominatorError(den);
        coef = b * numerator / den;
        mix = true;
    }

    std::vector<double> v(static_cast<size_t>(m), 0.0);
    for (int idx = 0; idx < m; ++idx) {
        const int k_one = idx + 1;
        double value;
        if (!even) {
            value = mix ? expansion_at(ctx, with_phase, idx) -
                              coef * expansion_at(ctx, plain, idx)
                        : expansion_at(ctx, plain, idx);
        } else {
            // Alternating corrections keep the middle pole from entering
            // components of the wrong parity.
            const double even_term = (k_one % 2 == 0) ? 2.0 * mid : 0.0;
            const double odd_term = (k_one % 2 != 0) ? 2.0 * mid : 0.0;
            if (mix) {
                const double lead =
                    expansion_at(ctx, with_phase, idx) + mid - odd_term;
                const double trail =
                    expansion_at(ctx, plain, idx) + mid - even_term;
                value = lead - coef * trail;
            } else {
                value = expansion_at(ctx, plain, idx) + mid - even_term;
            }
        }
        v[static_cast<size_t>(idx)] = value;
    }

    const double norm = vector_norm(v);
    if (!(norm > 0.0) || !std::isfinite(norm))
        throw DegenerateDenominatorError(norm);
    for (double& e : v)
        e /= norm;
    flip_to_canonical_sign(v);
    return v;
}

std::vector<double> secular_eigenvector(const HankelParams& params, double mu) {
    return secular_eigenvector(make_secular_context(params), mu);
}

std::vector<double> inverse_iteration_vector(
    const DenseMatrix& hankel, double mu, double scale,
    std::span<const std::vector<double>> orthogonal_to, int seed_index) {
    const int m = hankel.dim();
    const double shift = mu + kIterationJitter * scale;

    // One LU factorisation of H - shift*I with partial pivoting.
    DenseMatrix lu = hankel;
    for (int i = 0; i < m; ++i)
        lu(i, i) -= shift;
    std::vector<int> perm(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
        perm[static_cast<size_t>(i)] = i;
    for (int col = 0; col < m; ++col) {
        int best_row = col;
        double best = std::abs(lu(col, col));
        for (int r = col + 1; r < m; ++r)
            if (std::abs(lu(r, col)) > best) {
                best = std::abs(lu(r, col));
                best_row = r;
            }
        if (best_row != col) {
            for (int j = 0; j < m; ++j)
                std::swap(lu(col, j), lu(best_row, j));
            std::swap(perm[static_cast<size_t>(col)], perm[static_cast<size_t>(best_row)]);
        }
        double pivot = lu(col, col);
        if (std::abs(pivot) < 1e-150) {
            pivot = (pivot >= 0.0 ? 1.0 : -1.0) * 1e-150;
            lu(col, col) = pivot;
        }
        for (int r = col + 1; r < m; ++r) {
            const double factor = lu(r, col) / pivot;
            lu(r, col) = factor;
            for (int j = col + 1; j < m; ++j)
                lu(r, j) -= factor * lu(col, j);
        }
    }

    auto solve_shifted = [&](std::vector<double>& rhs) {
        std::vector<double> permuted(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i)
            permuted[static_cast<size_t>(i)] = rhs[static_cast<size_t>(perm[static_cast<size_t>(i)])];
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < i; ++j)
                permuted[static_cast<size_t>(i)] -= lu(i, j) * permuted[static_cast<size_t>(j)];
        for (int i = m - 1; i >= 0; --i) {
            for (int j = i + 1; j < m; ++j)
                permuted[static_cast<size_t>(i)] -= lu(i, j) * permuted[static_cast<size_t>(j)];
            permuted[static_cast<size_t>(i)] /= lu(i, i);
        }
        rhs = std::move(permuted);
    };

    auto orthogonalize = [&](std::vector<double>& vec) {
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& q : orthogonal_to) {
                double dot = 0.0;
                for (int i = 0; i < m; ++i)
                    dot += q[static_cast<size_t>(i)] * vec[static_cast<size_t>(i)];
                for (int i = 0; i < m; ++i)
                    vec[static_cast<size_t>(i)] -= dot * q[static_cast<size_t>(i)];
            }
    };

    std::mt19937 engine(0x414e5448u + 1000003u * static_cast<unsigned>(seed_index));
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> v(static_cast<size_t>(m));
    for (double& e : v)
        e = dist(engine);
    orthogonalize(v);
    normalize(v);

    for (int iter = 0; iter < 3; ++iter) {
        solve_shifted(v);
        orthogonalize(v);
        normalize(v);
    }
    flip_to_canonical_sign(v);
    return v;
}

SpectralResult solve(const HankelParams& params, double tol, bool want_vectors) {
    params.validate();
    if (tol <= 0.0)
        throw std::invalid_argument("solve: tol must be positive");
    const int m = params.dim();
    const double scale = params.scale();

    const AntiCirculantSpectrum spectrum = compute_spectrum(params);
    const PoleSet poles = pole_multiset(params, spectrum);
    const std::vector<Interval> brackets = weyl_brackets(params, poles);
    const SecularContext context(params, spectrum);

    std::vector<double> roots;
    std::optional<std::vector<PoleEigenvalue>> pole_classes;
    int accepted_samples = 0;
    bool complete = false;

    for (int samples = 64; samples <= 4096; samples *= 4) {
        roots = isolate_roots(context, poles, brackets, tol, samples);
        accepted_samples = samples;
        if (static_cast<int>(roots.size()) == m) {
            // All eigenvalues are secular zeros; no pole can also be one.
            pole_classes.reset();
            complete = true;
            break;
        }
        if (!pole_classes)
            pole_classes = classify_pole_eigenvalues(params, poles);
        int pole_total = 0;
        for (const PoleEigenvalue& pe : *pole_classes)
            pole_total += pe.multiplicity;

        int total = static_cast<int>(roots.size()) + pole_total;
        if (total > m) {
            // A scan artefact next to an eigenvalue-pole counts twice;
            // drop roots hugging a positive-multiplicity pole.
            const double radius = kOvershootRadius * scale;
            std::erase_if(roots, [&](double r) {
                for (const PoleEigenvalue& pe : *pole_classes)
                    if (pe.multiplicity > 0 && std::abs(r - pe.value) < radius)
                        return true;
                return false;
            });
            total = static_cast<int>(roots.size()) + pole_total;
        }
        if (total == m) {
            complete = true;
            break;
        }
        if (total > m)
            break;  // still overcounted: report, denser scans cannot help
    }

    SpectralResult result;
    result.diagnostics.scan_samples = accepted_samples;
    result.diagnostics.complete = complete;

    for (double r : roots)
        result.pairs.push_back({r, EigenKind::SecularZero, std::nullopt, std::nullopt});
    if (pole_classes)
        for (const PoleEigenvalue& pe : *pole_classes)
            for (int copy = 0; copy < pe.multiplicity; ++copy)
                result.pairs.push_back(
                    {pe.value, EigenKind::PoleValue, std::nullopt, std::nullopt});
    std::sort(result.pairs.begin(), result.pairs.end(),
              [](const EigenPair& lhs, const EigenPair& rhs) {
                  if (lhs.value != rhs.value)
                      return lhs.value < rhs.value;
                  return lhs.kind == EigenKind::PoleValue &&
                         rhs.kind == EigenKind::SecularZero;
              });

    if (!complete)
        throw CompletenessError(
            "solve: accounted for " + std::to_string(result.pairs.size()) +
                " of " + std::to_string(m) + " eigenvalues",
            std::move(result));

    if (want_vectors) {
        const DenseMatrix hankel = build_hankel(params);
        int seed_index = 0;
        double worst = 0.0;
        // Vectors of one repeated pole value must come out orthonormal, so
        // remember the ones already produced per value.
        std::vector<std::vector<double>> same_value_block;
        double block_value = 0.0;
        for (EigenPair& pair : result.pairs) {
            std::vector<double> vec;
            if (pair.kind == EigenKind::SecularZero) {
                try {
                    vec = secular_eigenvector(context, pair.value);
                } catch (const SolverError&) {
                    vec = inverse_iteration_vector(hankel, pair.value, scale, {},
                                                   seed_index++);
                }
            } else {
                if (same_value_block.empty() || block_value != pair.value) {
                    same_value_block.clear();
                    block_value = pair.value;
                }
                vec = inverse_iteration_vector(hankel, pair.value, scale,
                                               same_value_block, seed_index++);
                same_value_block.push_back(vec);
            }
            const std::vector<double> hv = multiply(hankel, vec);
            double res = 0.0;
            for (int i = 0; i < m; ++i) {
                const double d = hv[static_cast<size_t>(i)] -
                                 pair.value * vec[static_cast<size_t>(i)];
                res += d * d;
            }
            pair.residual = std::sqrt(res);
            worst = std::max(worst, *pair.residual);
            pair.vector = std::move(vec);
        }
        result.diagnostics.max_residual = worst;
    }
    return result;
}

} // namespace antihankel
