#include "diskdecomp/geometry.hpp"

#include "diskdecomp/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace diskdecomp {

double Angle::normalize(double radians)
{
    double t = std::fmod(radians, kTwoPi);
    if (t < 0.0) {
        t += kTwoPi;
    }
    // fmod of a tiny negative value can round up to exactly 2π
    if (t >= kTwoPi) {
        t = 0.0;
    }
    return t;
}

double ccw_distance(Angle from, Angle to)
{
    double d = to.radians() - from.radians();
    if (d < 0.0) {
        d += kTwoPi;
    }
    return d >= kTwoPi ? 0.0 : d;
}

double circular_distance(Angle a, Angle b)
{
    const double d = std::abs(a.radians() - b.radians());
    return std::min(d, kTwoPi - d);
}

bool Arc::contains(Angle x, double tol) const
{
    if (circular_distance(x, start) <= tol || circular_distance(x, end) <= tol) {
        return true;
    }
    return ccw_distance(start, x) <= width();
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

} // namespace

int boundary_count(const BoundaryClass& bc)
{
    return std::visit(Overloaded{
                          [](const Misses&) { return 0; },
                          [](const Covers&) { return 0; },
                          [](const ArcSupport&) { return 2; },
                          [](const TouchPoint&) { return 1; },
                          [](const CoversTangent&) { return 1; },
                          [](const Coincident&) { return kInfiniteBoundary; },
                      },
                      bc);
}

bool is_one_on_circle(const BoundaryClass& bc)
{
    return std::holds_alternative<Covers>(bc) || std::holds_alternative<CoversTangent>(bc) ||
           std::holds_alternative<Coincident>(bc);
}

bool is_robust_signal(const BoundaryClass& bc)
{
    const int count = boundary_count(bc);
    return count == 0 || count == 2;
}

std::string_view variant_name(const BoundaryClass& bc)
{
    return std::visit(Overloaded{
                          [](const Misses&) { return std::string_view("misses"); },
                          [](const Covers&) { return std::string_view("covers"); },
                          [](const ArcSupport&) { return std::string_view("arc"); },
                          [](const TouchPoint&) { return std::string_view("touch_point"); },
                          [](const CoversTangent&) { return std::string_view("covers_tangent"); },
                          [](const Coincident&) { return std::string_view("coincident"); },
                      },
                      bc);
}

std::vector<Angle> boundary_angles(const BoundaryClass& bc)
{
    if (const auto* a = std::get_if<ArcSupport>(&bc)) {
        return {a->arc.start, a->arc.end};
    }
    if (const auto* t = std::get_if<TouchPoint>(&bc)) {
        return {t->at};
    }
    if (const auto* t = std::get_if<CoversTangent>(&bc)) {
        return {t->at};
    }
    return {};
}

BoundaryClass classify(const Landmark& lm, double tol)
{
    using ld = long double;
    const ld x = lm.center.x;
    const ld y = lm.center.y;
    const ld r = lm.radius;
    const ld d = std::hypot(x, y);

    if (d <= tol && std::abs(r - 1) <= tol) {
        return Coincident{};
    }
    if (r - (d + 1) > tol) {
        return Covers{};
    }
    if (d - (r + 1) > tol || (1 - r) - d > tol) {
        return Misses{};
    }

    // Triangle with sides 1 (origin to S¹), d (origin to center), r (center
    // to S¹): α is the angle at the origin. The product is 16·area² and
    // vanishes exactly at tangency, which keeps α accurate near 0 and π.
    const ld heron = (1 + d + r) * (1 + d - r) * (1 - d + r) * (d + r - 1);
    const ld alpha = std::atan2(std::sqrt(std::max<ld>(heron, 0)), 1 + d * d - r * r);
    const double phi = std::atan2(lm.center.y, lm.center.x);

    // α ~ sqrt(residual) near tangency, so a center given to full double
    // precision can still sit ~1e-8 rad off. Residuals at round-off level
    // count as exact tangency.
    const ld roundoff = 16 * std::numeric_limits<double>::epsilon() * (1 + d + r);
    const bool covers_tangent = std::abs(1 + d - r) <= roundoff;
    const bool touches = std::abs(1 - d + r) <= roundoff || std::abs(d + r - 1) <= roundoff;

    if (alpha <= tol || (touches && !covers_tangent)) {
        return TouchPoint{Angle(phi)};
    }
    if (std::numbers::pi_v<ld> - alpha <= tol || covers_tangent) {
        return CoversTangent{Angle(phi + std::numbers::pi)};
    }
    const auto a = static_cast<double>(alpha);
    return ArcSupport{Arc{Angle(phi - a), Angle(phi + a)}};
}

bool covers_point(const BoundaryClass& bc, Angle x, double tol)
{
    if (is_one_on_circle(bc)) {
        return true;
    }
    if (const auto* a = std::get_if<ArcSupport>(&bc)) {
        return a->arc.contains(x, tol);
    }
    if (const auto* t = std::get_if<TouchPoint>(&bc)) {
        return circular_distance(t->at, x) <= tol;
    }
    return false;
}

Landmark realize_arc(const Arc& arc, double tol)
{
    const double w = arc.width();
    if (w <= tol || w >= kTwoPi - tol) {
        throw Error("degenerate arc");
    }
    const double mid = arc.start.radians() + 0.5 * w;
    return Landmark{{std::cos(mid), std::sin(mid)}, 2.0 * std::sin(0.25 * w)};
}

Landmark realize_full()
{
    return Landmark{{0.0, 0.0}, 2.0};
}

std::vector<AngleCluster> cluster_angles(std::span<const Angle> angles, double tol)
{
    std::vector<std::size_t> order(angles.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return angles[a] < angles[b]; });

    std::vector<AngleCluster> clusters;
    for (std::size_t k = 0; k < order.size(); ++k) {
        const std::size_t idx = order[k];
        if (k > 0 && angles[idx].radians() - angles[order[k - 1]].radians() <= tol) {
            clusters.back().members.push_back(idx);
        } else {
            clusters.push_back({angles[idx], {idx}});
        }
    }

    if (clusters.size() > 1) {
        const double wrap_gap =
            angles[order.front()].radians() + kTwoPi - angles[order.back()].radians();
        if (wrap_gap <= tol) {
            AngleCluster& last = clusters.back();
            last.members.insert(last.members.end(), clusters.front().members.begin(),
                                clusters.front().members.end());
            clusters.front() = std::move(last);
            clusters.pop_back();
            std::sort(clusters.begin(), clusters.end(),
                      [](const AngleCluster& a, const AngleCluster& b) { return a.at < b.at; });
        }
    }
    return clusters;
}

} // namespace diskdecomp
