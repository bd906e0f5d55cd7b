#pragma once

// Decision procedures on configurations: robustness, proper upper
// semicontinuity, boundary multiplicities and N-degrees of freedom.

#include "diskdecomp/geometry.hpp"
#include "diskdecomp/sequence.hpp"
#include "diskdecomp/signal.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace diskdecomp {

struct NonRobustSignal {
    std::size_t index = 0;
    int boundary_count = 0;  // 1 or kInfiniteBoundary
};

struct SharedBoundary {
    std::size_t first = 0;
    std::size_t second = 0;
    Angle at;
};

using Violation = std::variant<NonRobustSignal, SharedBoundary>;

struct RobustnessVerdict {
    bool robust = true;
    std::vector<Violation> violations;
};

/// Robust iff every landmark misses, covers, or meets S¹ in an arc, and no
/// two arc endpoints coincide within `tol`.
RobustnessVerdict is_robust(const Configuration& cfg, double tol = kDefaultTol);

struct UscVerdict {
    bool properly_usc = true;
    std::optional<Angle> witness;  // a boundary point where the check fails
};

/// Value check: at every boundary cluster the value equals the larger of
/// the two one-sided values.
UscVerdict properly_usc_by_values(const Configuration& cfg, double tol = kDefaultTol);

/// Pairwise check: no shared boundary point is an isolated point of the
/// intersection of two supports (arcs meeting head to tail, or a touch point).
UscVerdict properly_usc_by_pairs(const Configuration& cfg, double tol = kDefaultTol);

/// Runs both checks; throws std::logic_error if they disagree.
UscVerdict is_properly_usc(const Configuration& cfg, double tol = kDefaultTol);

struct MultiplicityMap {
    std::vector<std::pair<Angle, Level>> entries;  // k_x per discontinuity

    Level total() const;
};

/// k_x = |f(x+) - f(x-)| at each discontinuity. Throws Error if the
/// configuration is not properly u.s.c.
MultiplicityMap multiplicities(const Configuration& cfg, double tol = kDefaultTol);

struct DoFReport {
    std::size_t N = 0;
    std::size_t n = 0;
    std::vector<int> rho;  // 3, 1 or 0 per landmark
    long dof = 0;          // 3(N - n) + Σ rho
};

/// Throws Error when N < n.
DoFReport dof(const Configuration& cfg, std::size_t N, double tol = kDefaultTol);

/// Properly u.s.c. with every #∂h ∈ {0, 2}.
bool maximizes_dof(const Configuration& cfg, double tol = kDefaultTol);

} // namespace diskdecomp
