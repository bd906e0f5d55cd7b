#pragma once

// Independent oracles and empirical checks: dense sampling of the forward
// sum, exhaustive matching counts, and seeded Monte-Carlo perturbations.

#include "diskdecomp/decomp.hpp"
#include "diskdecomp/sequence.hpp"
#include "diskdecomp/signal.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

namespace diskdecomp {

inline constexpr std::string_view kRngAlgorithm = "splitmix64-substream/box-muller";

/// Counter-based generator: substream i of seed s is independent of how
/// many values other substreams have drawn.
class SubstreamRng {
public:
    SubstreamRng(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next();
    double uniform();  // [0, 1)
    double normal();   // standard normal

private:
    std::uint64_t state_;
    std::optional<double> spare_;
};

struct PerturbationSpec {
    double epsilon = 1e-4;
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
};

struct Counterexample {
    std::vector<double> direction;  // unit vector in R^{3n}: (dx, dy, dr) per landmark
    std::vector<Level> sequence;    // canonical rotation of the perturbed sequence
};

struct PerturbationReport {
    bool all_equal = true;
    std::optional<Counterexample> first_counterexample;
    std::vector<Level> nominal;                          // canonical rotation
    std::map<std::vector<Level>, std::size_t> observed;  // differing sequences seen
    PerturbationSpec spec;
};

struct OracleSequence {
    std::vector<Level> values;    // run-length encoded circular samples
    bool narrow_features = false; // touch points or boundary points closer than the spacing
};

/// Evaluates Σ 1{|x - m_i| ≤ r_i} at `samples` uniformly spaced angles
/// (offset by half a step) and merges equal neighbours circularly.
OracleSequence dense_seq_oracle(const Configuration& cfg, std::size_t samples = 100000,
                                double tol = kDefaultTol);

/// v + ε·u with u indexed as (dx, dy, dr) per landmark. Radii that would
/// become non-positive are clamped to the smallest positive double.
Configuration perturbed(const Configuration& cfg, const std::vector<double>& direction,
                        double epsilon);

/// Uniform direction on the unit sphere of R^dim.
std::vector<double> random_direction(SubstreamRng& rng, std::size_t dim);

/// Trial i draws its direction from substream i. A clean report means no
/// counterexample was found, not that the configuration is robust.
PerturbationReport perturb_trial(const Configuration& cfg, const PerturbationSpec& spec,
                                 double tol = kDefaultTol);

/// Counts robust decompositions by building every matching's arcs and
/// comparing the pointwise sum (plus each admissible base) with the layout
/// values at open-arc midpoints. Throws Error for L > 7.
std::size_t exhaustive_count_oracle(const CanonicalFunction& c, const BoundaryLayout& layout);

/// True iff every sampled perturbation keeps all τ_k of the class. Requires
/// a properly u.s.c. configuration with every #∂h ∈ {0, 2}.
bool tau_stability_trial(const Configuration& cfg, const PerturbationSpec& spec,
                         double tol = kDefaultTol);

} // namespace diskdecomp
