#pragma once

// Circular sequences of landmark counts: rotation classes, the canonical
// properly upper semicontinuous representative, and its excursion-set
// statistics.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace diskdecomp {

using Level = std::uint32_t;

/// Values on the open arcs between partition points, listed CCW. Two
/// sequences compare equal when one is a rotation of the other.
class CircularSequence {
public:
    /// Throws Error on an empty list.
    explicit CircularSequence(std::vector<Level> values);

    const std::vector<Level>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }

    friend bool operator==(const CircularSequence& a, const CircularSequence& b);

private:
    std::vector<Level> values_;
};

/// Start index of the lexicographically least rotation (Booth's algorithm).
std::size_t least_rotation_index(std::span<const Level> values);

/// Lexicographically least rotation; the canonical name of the class.
CircularSequence canonical_rotation(const CircularSequence& s);

/// Circularly merged values of the unique properly u.s.c. function in the
/// class: no two circular neighbours are equal (unless there is only one
/// value). The value at each partition point is the larger neighbour.
class CanonicalFunction {
public:
    /// Throws Error if the list is empty or has equal circular neighbours.
    explicit CanonicalFunction(std::vector<Level> values);

    const std::vector<Level>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    Level operator[](std::size_t i) const { return values_[i]; }

    /// Signed step entering entry i, i.e. values[i] - values[i-1] circularly.
    long jump_into(std::size_t i) const;

    friend bool operator==(const CanonicalFunction&, const CanonicalFunction&) = default;

private:
    std::vector<Level> values_;
};

CanonicalFunction canonicalize(const CircularSequence& s);

struct SequenceStats {
    Level f_sup = 0;
    Level f_inf = 0;
    std::map<Level, Level> tau_k;  // levels in (f_inf, f_sup]
    Level tau = 0;
    Level L = 0;                   // f_sup - f_inf + tau
    bool unit_jumps = true;        // vacuously true for a constant function
};

/// Statistics computed from the jump list: the number of components of
/// {f ≥ k} equals the number of upward crossings of level k.
SequenceStats stats(const CanonicalFunction& c);

/// Components of the superlevel set {f ≥ k} as a subset of S¹, counted by
/// scanning maximal circular runs.
Level excursion_components(const CanonicalFunction& c, Level k);

/// Necessary condition for a robust decomposition: every jump is ±1.
bool admits_robust(const CanonicalFunction& c);

} // namespace diskdecomp
