#pragma once

// Forward evaluation of a landmark configuration on S¹: boundary events,
// pointwise counts and the sequence representation.

#include "diskdecomp/geometry.hpp"
#include "diskdecomp/sequence.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace diskdecomp {

struct Configuration {
    std::vector<Landmark> landmarks;

    std::size_t size() const { return landmarks.size(); }
    friend bool operator==(const Configuration&, const Configuration&) = default;
};

enum class EventKind { Up, Down, Spike };

struct BoundaryEvent {
    Angle at;
    EventKind kind = EventKind::Up;
    std::size_t source = 0;  // landmark index
};

struct EventList {
    std::vector<BoundaryEvent> events;   // sorted CCW by angle
    std::vector<AngleCluster> clusters;  // members index into `events`
};

/// One Up/Down pair per arc landmark, one Spike per touch point. Landmarks
/// that are constant on S¹ produce no events.
EventList events(const Configuration& cfg, double tol = kDefaultTol);

/// Everything the sweep knows about a configuration. Values are derived from
/// the classification combinatorics, never by re-evaluating disks.
struct Arrangement {
    std::vector<BoundaryClass> classes;  // per landmark
    EventList events;
    Level constant = 0;                  // landmarks identically 1 on S¹
    std::vector<Level> gap_values;       // open arc after cluster j, CCW
    std::vector<Level> point_values;     // value at cluster j
    std::vector<Level> starts;           // arcs starting at cluster j
    std::vector<Level> ends;             // arcs ending at cluster j
    std::vector<Level> spikes;           // touch points at cluster j
};

Arrangement arrange(const Configuration& cfg, double tol = kDefaultTol);

/// Sequence representation. Every event cluster (spikes included) is a
/// partition point; without events the result is the single constant value.
CircularSequence seq(const Configuration& cfg, double tol = kDefaultTol);

/// Number of closed disks containing (cos x, sin x).
Level value_at(const Configuration& cfg, Angle x, double tol = kDefaultTol);

struct BoundaryPoints {
    bool whole_circle = false;  // some landmark has ∂h = S¹
    std::vector<std::pair<Angle, std::size_t>> points;  // angle, multiplicity
};

/// Clustered boundary points of all landmarks with #∂h ∈ {1, 2}.
BoundaryPoints boundary_points(const Configuration& cfg, double tol = kDefaultTol);

} // namespace diskdecomp
