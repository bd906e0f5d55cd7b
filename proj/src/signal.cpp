#include "diskdecomp/signal.hpp"

#include <algorithm>

namespace diskdecomp {

EventList events(const Configuration& cfg, double tol)
{
    EventList out;
    for (std::size_t i = 0; i < cfg.size(); ++i) {
        const BoundaryClass bc = classify(cfg.landmarks[i], tol);
        if (const auto* a = std::get_if<ArcSupport>(&bc)) {
            out.events.push_back({a->arc.start, EventKind::Up, i});
            out.events.push_back({a->arc.end, EventKind::Down, i});
        } else if (const auto* t = std::get_if<TouchPoint>(&bc)) {
            out.events.push_back({t->at, EventKind::Spike, i});
        }
    }
    std::stable_sort(out.events.begin(), out.events.end(),
                     [](const BoundaryEvent& a, const BoundaryEvent& b) { return a.at < b.at; });

    std::vector<Angle> angles;
    angles.reserve(out.events.size());
    for (const auto& e : out.events) {
        angles.push_back(e.at);
    }
    out.clusters = cluster_angles(angles, tol);
    return out;
}

namespace {

// Adds 1 to `count` consecutive cyclic slots starting at `from`.
void add_cyclic(std::vector<long>& diff, std::size_t from, std::size_t count)
{
    const std::size_t n = diff.size() - 1;
    if (count == 0) {
        return;
    }
    if (count >= n) {
        diff[0] += 1;
        diff[n] -= 1;
        return;
    }
    const std::size_t to = from + count;
    if (to <= n) {
        diff[from] += 1;
        diff[to] -= 1;
    } else {
        diff[from] += 1;
        diff[n] -= 1;
        diff[0] += 1;
        diff[to - n] -= 1;
    }
}

std::vector<Level> prefix_levels(const std::vector<long>& diff, Level offset)
{
    std::vector<Level> out(diff.size() - 1);
    long running = 0;
    for (std::size_t j = 0; j < out.size(); ++j) {
        running += diff[j];
        out[j] = offset + static_cast<Level>(running);
    }
    return out;
}

} // namespace

Arrangement arrange(const Configuration& cfg, double tol)
{
    Arrangement ar;
    ar.classes.reserve(cfg.size());
    for (const auto& lm : cfg.landmarks) {
        ar.classes.push_back(classify(lm, tol));
        if (is_one_on_circle(ar.classes.back())) {
            ++ar.constant;
        }
    }
    ar.events = events(cfg, tol);

    const std::size_t n_clusters = ar.events.clusters.size();
    if (n_clusters == 0) {
        ar.gap_values = {ar.constant};
        return ar;
    }

    // Cluster index of every event, then of each arc's endpoints.
    std::vector<std::size_t> cluster_of(ar.events.events.size());
    for (std::size_t c = 0; c < n_clusters; ++c) {
        for (const std::size_t e : ar.events.clusters[c].members) {
            cluster_of[e] = c;
        }
    }
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> start_cluster(cfg.size(), kNone);
    std::vector<std::size_t> end_cluster(cfg.size(), kNone);

    ar.starts.assign(n_clusters, 0);
    ar.ends.assign(n_clusters, 0);
    ar.spikes.assign(n_clusters, 0);
    for (std::size_t e = 0; e < ar.events.events.size(); ++e) {
        const BoundaryEvent& ev = ar.events.events[e];
        const std::size_t c = cluster_of[e];
        switch (ev.kind) {
        case EventKind::Up:
            start_cluster[ev.source] = c;
            ++ar.starts[c];
            break;
        case EventKind::Down:
            end_cluster[ev.source] = c;
            ++ar.ends[c];
            break;
        case EventKind::Spike:
            ++ar.spikes[c];
            break;
        }
    }

    // Interval stabbing: an arc from cluster s to cluster e covers the gaps
    // s..e-1 and the points s..e (cyclically).
    std::vector<long> gap_diff(n_clusters + 1, 0);
    std::vector<long> point_diff(n_clusters + 1, 0);
    for (std::size_t i = 0; i < cfg.size(); ++i) {
        if (start_cluster[i] == kNone) {
            continue;
        }
        const std::size_t s = start_cluster[i];
        const std::size_t e = end_cluster[i];
        std::size_t span = (e + n_clusters - s) % n_clusters;
        if (span == 0) {
            // Both endpoints fell into one cluster; keep the side the arc
            // actually occupies.
            const double w = std::get<ArcSupport>(ar.classes[i]).arc.width();
            span = w > kTwoPi / 2 ? n_clusters : 0;
        }
        add_cyclic(gap_diff, s, span);
        add_cyclic(point_diff, s, std::min(span + 1, n_clusters));
    }
    ar.gap_values = prefix_levels(gap_diff, ar.constant);
    ar.point_values = prefix_levels(point_diff, ar.constant);
    for (std::size_t c = 0; c < n_clusters; ++c) {
        ar.point_values[c] += ar.spikes[c];
    }
    return ar;
}

CircularSequence seq(const Configuration& cfg, double tol)
{
    return CircularSequence(arrange(cfg, tol).gap_values);
}

Level value_at(const Configuration& cfg, Angle x, double tol)
{
    Level count = 0;
    for (const auto& lm : cfg.landmarks) {
        if (covers_point(classify(lm, tol), x, tol)) {
            ++count;
        }
    }
    return count;
}

BoundaryPoints boundary_points(const Configuration& cfg, double tol)
{
    BoundaryPoints out;
    std::vector<Angle> angles;
    for (const auto& lm : cfg.landmarks) {
        const BoundaryClass bc = classify(lm, tol);
        if (std::holds_alternative<Coincident>(bc)) {
            out.whole_circle = true;
        }
        for (const Angle a : boundary_angles(bc)) {
            angles.push_back(a);
        }
    }
    if (out.whole_circle) {
        return out;
    }
    for (const auto& cluster : cluster_angles(angles, tol)) {
        out.points.emplace_back(cluster.at, cluster.members.size());
    }
    return out;
}

} // namespace diskdecomp
