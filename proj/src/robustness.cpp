#include "diskdecomp/robustness.hpp"

#include "diskdecomp/error.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace diskdecomp {

namespace {

struct Endpoint {
    Angle at;
    std::size_t source = 0;
    bool is_start = false;
};

std::vector<Endpoint> arc_endpoints(const std::vector<BoundaryClass>& classes)
{
    std::vector<Endpoint> out;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (const auto* a = std::get_if<ArcSupport>(&classes[i])) {
            out.push_back({a->arc.start, i, true});
            out.push_back({a->arc.end, i, false});
        }
    }
    return out;
}

std::vector<AngleCluster> cluster_endpoints(const std::vector<Endpoint>& endpoints, double tol)
{
    std::vector<Angle> angles;
    angles.reserve(endpoints.size());
    for (const auto& e : endpoints) {
        angles.push_back(e.at);
    }
    return cluster_angles(angles, tol);
}

std::vector<BoundaryClass> classify_all(const Configuration& cfg, double tol)
{
    std::vector<BoundaryClass> classes;
    classes.reserve(cfg.size());
    for (const auto& lm : cfg.landmarks) {
        classes.push_back(classify(lm, tol));
    }
    return classes;
}

} // namespace

RobustnessVerdict is_robust(const Configuration& cfg, double tol)
{
    RobustnessVerdict verdict;
    const auto classes = classify_all(cfg, tol);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (!is_robust_signal(classes[i])) {
            verdict.violations.push_back(NonRobustSignal{i, boundary_count(classes[i])});
        }
    }

    const auto endpoints = arc_endpoints(classes);
    for (const auto& cluster : cluster_endpoints(endpoints, tol)) {
        std::set<std::size_t> sources;
        for (const std::size_t m : cluster.members) {
            sources.insert(endpoints[m].source);
        }
        for (auto i = sources.begin(); i != sources.end(); ++i) {
            for (auto j = std::next(i); j != sources.end(); ++j) {
                verdict.violations.push_back(SharedBoundary{*i, *j, cluster.at});
            }
        }
    }
    verdict.robust = verdict.violations.empty();
    return verdict;
}

UscVerdict properly_usc_by_values(const Configuration& cfg, double tol)
{
    const Arrangement ar = arrange(cfg, tol);
    const std::size_t n = ar.events.clusters.size();
    for (std::size_t c = 0; c < n; ++c) {
        const Level left = ar.gap_values[(c + n - 1) % n];
        const Level right = ar.gap_values[c];
        if (ar.point_values[c] != std::max(left, right)) {
            return {false, ar.events.clusters[c].at};
        }
    }
    return {};
}

UscVerdict properly_usc_by_pairs(const Configuration& cfg, double tol)
{
    const auto classes = classify_all(cfg, tol);
    for (const auto& bc : classes) {
        // A lone touch point is an isolated point of its own support.
        if (const auto* t = std::get_if<TouchPoint>(&bc)) {
            return {false, t->at};
        }
    }
    const auto endpoints = arc_endpoints(classes);
    for (const auto& cluster : cluster_endpoints(endpoints, tol)) {
        std::set<std::size_t> starting;
        std::set<std::size_t> ending;
        for (const std::size_t m : cluster.members) {
            (endpoints[m].is_start ? starting : ending).insert(endpoints[m].source);
        }
        // Supports extending in opposite directions from a shared point.
        for (const std::size_t i : starting) {
            for (const std::size_t j : ending) {
                if (i != j) {
                    return {false, cluster.at};
                }
                // Both ends of one short arc merged: it acts as a touch point.
                if (std::get<ArcSupport>(classes[i]).arc.width() <= kTwoPi / 2) {
                    return {false, cluster.at};
                }
            }
        }
    }
    return {};
}

UscVerdict is_properly_usc(const Configuration& cfg, double tol)
{
    const UscVerdict by_values = properly_usc_by_values(cfg, tol);
    const UscVerdict by_pairs = properly_usc_by_pairs(cfg, tol);
    if (by_values.properly_usc != by_pairs.properly_usc) {
        throw std::logic_error("properly u.s.c. checks disagree");
    }
    return by_values;
}

Level MultiplicityMap::total() const
{
    Level sum = 0;
    for (const auto& [at, k] : entries) {
        sum += k;
    }
    return sum;
}

MultiplicityMap multiplicities(const Configuration& cfg, double tol)
{
    if (!is_properly_usc(cfg, tol).properly_usc) {
        throw Error("multiplicities require a properly u.s.c. configuration");
    }
    const Arrangement ar = arrange(cfg, tol);
    const std::size_t n = ar.events.clusters.size();
    MultiplicityMap out;
    for (std::size_t c = 0; c < n; ++c) {
        const long left = ar.gap_values[(c + n - 1) % n];
        const long right = ar.gap_values[c];
        const auto k = static_cast<Level>(std::abs(right - left));
        if (k != ar.starts[c] + ar.ends[c]) {
            throw std::logic_error("jump size differs from the number of arcs through the point");
        }
        if (k > 0) {
            out.entries.emplace_back(ar.events.clusters[c].at, k);
        }
    }
    return out;
}

DoFReport dof(const Configuration& cfg, std::size_t N, double tol)
{
    if (N < cfg.size()) {
        throw Error("N (" + std::to_string(N) + ") is smaller than the number of landmarks (" +
                    std::to_string(cfg.size()) + ")");
    }
    DoFReport report;
    report.N = N;
    report.n = cfg.size();
    long sum = 0;
    for (const auto& lm : cfg.landmarks) {
        const int count = boundary_count(classify(lm, tol));
        const int rho = count == 0 ? 3 : (count == kInfiniteBoundary ? 0 : 1);
        report.rho.push_back(rho);
        sum += rho;
    }
    report.dof = 3 * static_cast<long>(N - report.n) + sum;
    return report;
}

bool maximizes_dof(const Configuration& cfg, double tol)
{
    for (const auto& lm : cfg.landmarks) {
        if (!is_robust_signal(classify(lm, tol))) {
            return false;
        }
    }
    return is_properly_usc(cfg, tol).properly_usc;
}

} // namespace diskdecomp
