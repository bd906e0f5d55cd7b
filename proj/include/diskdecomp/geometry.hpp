#pragma once

// Points, angles and arcs on the fixed unit circle S¹ (center origin,
// radius 1, counterclockwise orientation), and the classification of how a
// closed disk meets S¹.

#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

namespace diskdecomp {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kDefaultTol = 1e-9;

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

/// Angle in radians, always normalized to [0, 2π).
class Angle {
public:
    constexpr Angle() = default;
    explicit Angle(double radians) : theta_(normalize(radians)) {}

    double radians() const { return theta_; }

    Angle operator+(double delta) const { return Angle(theta_ + delta); }
    Angle operator-(double delta) const { return Angle(theta_ - delta); }

    friend bool operator==(const Angle&, const Angle&) = default;
    friend auto operator<=>(const Angle&, const Angle&) = default;

    static double normalize(double radians);

private:
    double theta_ = 0.0;
};

/// Counterclockwise travel from `from` to `to`, in [0, 2π).
double ccw_distance(Angle from, Angle to);

/// Shortest distance along S¹, in [0, π].
double circular_distance(Angle a, Angle b);

/// Closed arc traversed counterclockwise from `start` to `end`.
struct Arc {
    Angle start;
    Angle end;

    /// (end - start) mod 2π; a valid arc has width in (0, 2π).
    double width() const { return ccw_distance(start, end); }
    Angle midpoint() const { return start + 0.5 * width(); }

    /// Closed membership; points within `tol` of an endpoint count as inside.
    bool contains(Angle x, double tol = 0.0) const;

    friend bool operator==(const Arc&, const Arc&) = default;
};

/// Closed disk with center m and radius r > 0.
struct Landmark {
    Point2 center;
    double radius = 1.0;

    friend bool operator==(const Landmark&, const Landmark&) = default;
};

// How the closed disk meets S¹. One alternative per cardinality of
// ∂h := ∂(disk) ∩ S¹ and restriction of the indicator to S¹.
struct Misses {};                      // #∂h = 0, h ≡ 0 on S¹
struct Covers {};                      // #∂h = 0, h ≡ 1 on S¹
struct ArcSupport { Arc arc; };        // #∂h = 2, support is the arc
struct TouchPoint { Angle at; };       // #∂h = 1, support is a single point
struct CoversTangent { Angle at; };    // #∂h = 1, h ≡ 1 on S¹
struct Coincident {};                  // ∂h = S¹, h ≡ 1 on S¹

using BoundaryClass =
    std::variant<Misses, Covers, ArcSupport, TouchPoint, CoversTangent, Coincident>;

inline constexpr int kInfiniteBoundary = std::numeric_limits<int>::max();

/// #∂h: 0, 1, 2, or kInfiniteBoundary.
int boundary_count(const BoundaryClass& bc);

/// True when the indicator is identically 1 on S¹.
bool is_one_on_circle(const BoundaryClass& bc);

/// True for #∂h ∈ {0, 2}.
bool is_robust_signal(const BoundaryClass& bc);

std::string_view variant_name(const BoundaryClass& bc);

/// Boundary angles of the class (empty for #∂h ∈ {0, ∞}).
std::vector<Angle> boundary_angles(const BoundaryClass& bc);

/// Classifies how `lm` meets S¹.
///
/// Distances within `tol` of a tangency or of S¹ itself are treated as
/// degenerate. Inside that band the support half-angle α decides: α ≤ tol is
/// a touch point, π − α ≤ tol is a covering disk tangent from outside S¹.
/// Tangency residuals at double round-off level are tangent regardless of α.
BoundaryClass classify(const Landmark& lm, double tol = kDefaultTol);

/// Indicator restricted to S¹, evaluated through the classification.
bool covers_point(const BoundaryClass& bc, Angle x, double tol = kDefaultTol);

/// Disk centered on S¹ at the arc midpoint whose boundary passes through the
/// arc endpoints. Throws Error("degenerate arc") for widths within `tol` of
/// 0 or 2π.
Landmark realize_arc(const Arc& arc, double tol = kDefaultTol);

/// Disk of radius 2 about the origin; contains S¹ with margin 1.
Landmark realize_full();

struct AngleCluster {
    Angle at;                          // first member in CCW order
    std::vector<std::size_t> members;  // indices into the input span
};

/// Single-linkage clustering of angles on S¹: neighbors within `tol` are
/// joined, including across 0. Result is sorted by `at`.
std::vector<AngleCluster> cluster_angles(std::span<const Angle> angles, double tol);

} // namespace diskdecomp
