#pragma once

// Generation, enumeration and counting of decompositions that maximize the
// degrees of freedom, in their combinatorial form: directed arcs from upward
// steps of ⟨f̄⟩ to downward steps, plus a number of full-circle signals.

#include "diskdecomp/geometry.hpp"
#include "diskdecomp/sequence.hpp"
#include "diskdecomp/signal.hpp"

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace diskdecomp {

inline constexpr std::uint64_t kDefaultEnumerationCap = 3628800;  // 10!

/// Partition points of a unit-jump canonical function placed on S¹.
///
/// The open arc from points[j] to points[j+1] carries values[j]; `values` is
/// a rotation of the canonical function. Each point is either an upward or a
/// downward step; `up_points`/`down_points` index into `points` and `ups`/
/// `downs` hold the same angles, sorted CCW.
struct BoundaryLayout {
    std::vector<Angle> points;
    std::vector<Level> values;
    std::vector<std::size_t> up_points;
    std::vector<std::size_t> down_points;
    std::vector<Angle> ups;
    std::vector<Angle> downs;

    std::size_t arc_count() const { return ups.size(); }
    bool is_up(std::size_t point) const;
    /// Level of a step: the value above it (after an up, before a down).
    Level level(std::size_t point) const;
    Level min_value() const;
};

/// Builds a layout from explicit partition angles. `points[j]` is the point
/// entering `c[j]`; angles must be strictly increasing. Throws Error("no
/// robust layout") when some jump is not ±1.
BoundaryLayout make_layout(const CanonicalFunction& c, std::vector<Angle> points);

/// Equally spaced partition points at 2πj/ℓ. The sequence is rotated so that
/// the point at angle 0 is the first upward step of the canonical rotation.
BoundaryLayout default_layout(const CanonicalFunction& c);

/// Layout measured from a configuration whose boundary points all carry a
/// ±1 step (in particular any robust configuration).
BoundaryLayout measured_layout(const Configuration& cfg, double tol = kDefaultTol);

/// Bijection from up indices to down indices.
struct Matching {
    std::vector<std::size_t> pairing;

    friend bool operator==(const Matching&, const Matching&) = default;
};

struct CombinatorialDecomposition {
    std::vector<Arc> arcs;  // each from an up angle CCW to a down angle
    Level base = 0;         // signals identically 1 on S¹
    Matching matching;

    std::size_t signal_count() const { return arcs.size() + base; }
};

/// Coverage of every open arc of the layout by the matched arcs, by a
/// circular ±1 sweep.
std::vector<long> arc_coverage(const BoundaryLayout& layout, const Matching& m);

/// Minimum of arc_coverage over the open arcs (0 for an empty layout).
long arcsum_min(const BoundaryLayout& layout, const Matching& m);

/// All robust decompositions, in lexicographic order of the matching
/// permutation. Throws Error("enumeration cap exceeded ...") if L! > cap.
std::vector<CombinatorialDecomposition> enumerate_robust(
    const CanonicalFunction& c, const BoundaryLayout& layout,
    std::uint64_t cap = kDefaultEnumerationCap);

/// Number of robust decompositions, or an interval when only bounds are
/// available. `lower == upper` marks an exact count.
struct RobustCount {
    std::uint64_t lower = 0;
    std::uint64_t upper = 0;
    bool exact() const { return lower == upper; }
};

RobustCount count_robust(const CanonicalFunction& c, std::uint64_t cap = kDefaultEnumerationCap);

/// Bounds on the number of signals in a DoF-maximizing decomposition:
/// max{f*, f* - f_* + τ} ≤ n ≤ f* + τ.
std::pair<Level, Level> signal_count_bounds(const SequenceStats& st);

/// Signal counts L + k for every admissible number k of full-circle signals,
/// k ∈ [max{f_* - τ, 0}, f_*].
std::vector<Level> baseline_signal_counts(const SequenceStats& st);

/// The decomposition with the fewest full-circle signals: for each level k
/// one arc per component of the complement of {f ≥ k}, plus f_* - τ full
/// circles. Requires f_* ≥ τ.
CombinatorialDecomposition minimal_base_decomposition(const CanonicalFunction& c,
                                                      const BoundaryLayout& layout);

/// Parenthesis matching of ups and downs scanned from a global minimum; uses
/// f_* full circles, the most possible.
CombinatorialDecomposition max_base_decomposition(const CanonicalFunction& c,
                                                  const BoundaryLayout& layout);

/// A decomposition with exactly n signals.
CombinatorialDecomposition generate_for_n(const CanonicalFunction& c, const BoundaryLayout& layout,
                                          Level n);

/// One landmark per arc (realize_arc) followed by `base` copies of
/// realize_full().
Configuration realize(const CombinatorialDecomposition& d);

/// Brute-force enumeration of DoF-maximizing decompositions for classes
/// with arbitrary jump sizes. A point with jump k_x is the endpoint of
/// exactly k_x arcs, all extending in the direction of increase. Equally
/// spaced partition points as in default_layout. Distinct arc multisets only.
std::vector<CombinatorialDecomposition> enumerate_dof_maximizing(
    const CanonicalFunction& c, std::uint64_t cap = kDefaultEnumerationCap);

/// n! with overflow detection (throws Error past 20!).
std::uint64_t factorial(std::size_t n);

} // namespace diskdecomp
