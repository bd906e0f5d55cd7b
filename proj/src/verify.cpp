#include "diskdecomp/verify.hpp"

#include "diskdecomp/error.hpp"
#include "diskdecomp/robustness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace diskdecomp {

namespace {

std::uint64_t mix64(std::uint64_t z)
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

} // namespace

SubstreamRng::SubstreamRng(std::uint64_t seed, std::uint64_t stream)
    : state_(mix64(seed + kGolden) ^ mix64((stream + 1) * kGolden))
{
}

std::uint64_t SubstreamRng::next()
{
    state_ += kGolden;
    return mix64(state_);
}

double SubstreamRng::uniform()
{
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SubstreamRng::normal()
{
    if (spare_) {
        const double z = *spare_;
        spare_.reset();
        return z;
    }
    double u1 = uniform();
    while (u1 <= 0.0) {
        u1 = uniform();
    }
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    spare_ = radius * std::sin(kTwoPi * u2);
    return radius * std::cos(kTwoPi * u2);
}

OracleSequence dense_seq_oracle(const Configuration& cfg, std::size_t samples, double tol)
{
    if (samples < 1000) {
        throw Error("dense oracle needs at least 1000 samples");
    }
    std::vector<Level> raw(samples);
    for (std::size_t j = 0; j < samples; ++j) {
        const double theta = kTwoPi * (static_cast<double>(j) + 0.5) / static_cast<double>(samples);
        const double px = std::cos(theta);
        const double py = std::sin(theta);
        Level count = 0;
        for (const auto& lm : cfg.landmarks) {
            if (std::hypot(px - lm.center.x, py - lm.center.y) <= lm.radius) {
                ++count;
            }
        }
        raw[j] = count;
    }

    OracleSequence out;
    std::size_t start = 0;
    while (start < samples && raw[start] == raw[(start + samples - 1) % samples]) {
        ++start;
    }
    if (start == samples) {
        out.values = {raw.front()};
    } else {
        for (std::size_t k = 0; k < samples; ++k) {
            const Level v = raw[(start + k) % samples];
            if (out.values.empty() || out.values.back() != v) {
                out.values.push_back(v);
            }
        }
    }

    // Features the sampling cannot resolve.
    const double spacing = kTwoPi / static_cast<double>(samples);
    for (const auto& lm : cfg.landmarks) {
        if (std::holds_alternative<TouchPoint>(classify(lm, tol))) {
            out.narrow_features = true;
        }
    }
    const BoundaryPoints bp = boundary_points(cfg, tol);
    for (std::size_t i = 0; i < bp.points.size(); ++i) {
        const auto& [at, multiplicity] = bp.points[i];
        const auto& next = bp.points[(i + 1) % bp.points.size()].first;
        if (multiplicity > 1 || (bp.points.size() > 1 && circular_distance(at, next) < 2 * spacing)) {
            out.narrow_features = true;
        }
    }
    return out;
}

Configuration perturbed(const Configuration& cfg, const std::vector<double>& direction,
                        double epsilon)
{
    Configuration out = cfg;
    for (std::size_t i = 0; i < out.size(); ++i) {
        Landmark& lm = out.landmarks[i];
        lm.center.x += epsilon * direction[3 * i];
        lm.center.y += epsilon * direction[3 * i + 1];
        lm.radius += epsilon * direction[3 * i + 2];
        if (lm.radius <= 0.0) {
            lm.radius = std::numeric_limits<double>::min();
        }
    }
    return out;
}

std::vector<double> random_direction(SubstreamRng& rng, std::size_t dim)
{
    std::vector<double> u(dim);
    double norm = 0.0;
    while (norm == 0.0 && dim > 0) {
        norm = 0.0;
        for (double& x : u) {
            x = rng.normal();
            norm += x * x;
        }
    }
    norm = std::sqrt(norm);
    for (double& x : u) {
        x /= norm;
    }
    return u;
}

namespace {

void check_spec(const PerturbationSpec& spec)
{
    if (!(spec.epsilon > 0.0)) {
        throw Error("perturbation epsilon must be positive");
    }
    if (spec.trials < 1) {
        throw Error("perturbation needs at least one trial");
    }
}

std::vector<Level> canonical_values(const CircularSequence& s)
{
    return canonical_rotation(s).values();
}

} // namespace

PerturbationReport perturb_trial(const Configuration& cfg, const PerturbationSpec& spec,
                                 double tol)
{
    check_spec(spec);
    PerturbationReport report;
    report.spec = spec;
    report.nominal = canonical_values(seq(cfg, tol));
    for (std::size_t t = 0; t < spec.trials; ++t) {
        SubstreamRng rng(spec.seed, t);
        auto u = random_direction(rng, 3 * cfg.size());
        auto s = canonical_values(seq(perturbed(cfg, u, spec.epsilon), tol));
        if (s == report.nominal) {
            continue;
        }
        ++report.observed[s];
        if (report.all_equal) {
            report.all_equal = false;
            report.first_counterexample = Counterexample{std::move(u), std::move(s)};
        }
    }
    return report;
}

namespace {

// Heap's algorithm, visiting every permutation of `perm` once.
template <class Visit>
void heap_permutations(std::vector<std::size_t>& perm, std::size_t k, Visit& visit)
{
    if (k <= 1) {
        visit(perm);
        return;
    }
    for (std::size_t i = 0; i + 1 < k; ++i) {
        heap_permutations(perm, k - 1, visit);
        std::swap(perm[k % 2 == 0 ? i : 0], perm[k - 1]);
    }
    heap_permutations(perm, k - 1, visit);
}

} // namespace

std::size_t exhaustive_count_oracle(const CanonicalFunction& c, const BoundaryLayout& layout)
{
    const std::size_t L = layout.arc_count();
    if (L > 7) {
        throw Error("exhaustive oracle limited to L <= 7, got L = " + std::to_string(L));
    }
    if (layout.values != c.values()) {
        // Layout values are a rotation of the canonical function.
        if (!(CircularSequence(layout.values) == CircularSequence(c.values()))) {
            throw Error("layout does not belong to the given class");
        }
    }

    const std::size_t n = layout.points.size();
    std::vector<Angle> midpoints;
    for (std::size_t j = 0; j < n; ++j) {
        const Angle a = layout.points[j];
        const Angle b = layout.points[(j + 1) % n];
        midpoints.push_back(a + 0.5 * ccw_distance(a, b));
    }
    const Level f_inf = *std::min_element(layout.values.begin(), layout.values.end());

    std::size_t count = 0;
    std::vector<std::size_t> perm(L);
    for (std::size_t i = 0; i < L; ++i) {
        perm[i] = i;
    }
    auto visit = [&](const std::vector<std::size_t>& p) {
        std::vector<Arc> arcs;
        for (std::size_t i = 0; i < L; ++i) {
            arcs.push_back(Arc{layout.ups[i], layout.downs[p[i]]});
        }
        std::vector<Level> sum(std::max<std::size_t>(n, 1), 0);
        for (std::size_t j = 0; j < n; ++j) {
            for (const Arc& a : arcs) {
                if (a.contains(midpoints[j])) {
                    ++sum[j];
                }
            }
        }
        for (Level base = 0; base <= f_inf; ++base) {
            bool match = true;
            for (std::size_t j = 0; j < sum.size(); ++j) {
                if (sum[j] + base != layout.values[j]) {
                    match = false;
                    break;
                }
            }
            if (match) {
                ++count;
                return;
            }
        }
    };
    heap_permutations(perm, L, visit);
    return count;
}

namespace {

// τ_k for k = 1..f*, zero below f_*.
std::vector<Level> tau_profile(const Configuration& cfg, double tol)
{
    const SequenceStats st = stats(canonicalize(seq(cfg, tol)));
    std::vector<Level> profile(st.f_sup, 0);
    for (const auto& [k, t] : st.tau_k) {
        profile[k - 1] = t;
    }
    return profile;
}

} // namespace

bool tau_stability_trial(const Configuration& cfg, const PerturbationSpec& spec, double tol)
{
    check_spec(spec);
    if (!maximizes_dof(cfg, tol)) {
        throw Error("tau stability requires a properly u.s.c. configuration with #boundary in {0, 2}");
    }
    const auto nominal = tau_profile(cfg, tol);
    for (std::size_t t = 0; t < spec.trials; ++t) {
        SubstreamRng rng(spec.seed, t);
        const auto u = random_direction(rng, 3 * cfg.size());
        if (tau_profile(perturbed(cfg, u, spec.epsilon), tol) != nominal) {
            return false;
        }
    }
    return true;
}

} // namespace diskdecomp
