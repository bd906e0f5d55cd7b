#pragma once

// Helpers shared by the unit tests and the acceptance suite: simple
// configuration builders, random generators and brute-force oracles that do
// not go through the code under test.

#include "diskdecomp/decomp.hpp"
#include "diskdecomp/geometry.hpp"
#include "diskdecomp/sequence.hpp"
#include "diskdecomp/signal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

namespace diskdecomp::testing {

inline constexpr double kPi = std::numbers::pi;

/// Disk centered on S¹ at the arc midpoint, computed independently of
/// realize_arc.
inline Landmark arc_landmark(double start, double end)
{
    double w = std::fmod(end - start, kTwoPi);
    if (w < 0) {
        w += kTwoPi;
    }
    const double mid = start + 0.5 * w;
    return Landmark{{std::cos(mid), std::sin(mid)}, 2.0 * std::sin(0.25 * w)};
}

inline Configuration config(std::vector<Landmark> landmarks)
{
    return Configuration{std::move(landmarks)};
}

inline Landmark rotated(const Landmark& lm, double rho)
{
    const double c = std::cos(rho);
    const double s = std::sin(rho);
    return Landmark{{c * lm.center.x - s * lm.center.y, s * lm.center.x + c * lm.center.y},
                    lm.radius};
}

inline Configuration rotated(const Configuration& cfg, double rho)
{
    Configuration out;
    for (const auto& lm : cfg.landmarks) {
        out.landmarks.push_back(rotated(lm, rho));
    }
    return out;
}

/// Least rotation by comparing all rotations.
inline std::vector<Level> brute_least_rotation(const std::vector<Level>& v)
{
    std::vector<Level> best = v;
    for (std::size_t s = 1; s < v.size(); ++s) {
        std::vector<Level> r(v.begin() + static_cast<long>(s), v.end());
        r.insert(r.end(), v.begin(), v.begin() + static_cast<long>(s));
        best = std::min(best, r);
    }
    return best;
}

/// Components of {i : v[i] >= k} on the cycle 0-1-...-(n-1)-0, by union-find.
inline std::size_t brute_components(const std::vector<Level>& v, Level k)
{
    const std::size_t n = v.size();
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) {
        parent[i] = i;
    }
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            x = parent[x] = parent[parent[x]];
        }
        return x;
    };
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        if (v[i] >= k && v[j] >= k) {
            parent[find(i)] = find(j);
        }
    }
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (v[i] >= k && find(i) == i) {
            ++count;
        }
    }
    return count;
}

/// Random closed ±1 walk with `half` up steps, shifted so its minimum is `floor`.
inline std::vector<Level> random_unit_jump_values(std::mt19937_64& rng, std::size_t half,
                                                  Level floor)
{
    std::vector<int> steps(2 * half, 1);
    std::fill(steps.begin() + static_cast<long>(half), steps.end(), -1);
    std::shuffle(steps.begin(), steps.end(), rng);
    std::vector<long> walk(steps.size());
    long h = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        h += steps[i];
        walk[i] = h;
    }
    const long lo = *std::min_element(walk.begin(), walk.end());
    std::vector<Level> out;
    for (long w : walk) {
        out.push_back(static_cast<Level>(w - lo + floor));
    }
    return out;
}

/// Arcs with widths in [min_width, 2π - min_width] whose endpoints are
/// pairwise at least `separation` apart, plus `full` covering disks.
inline Configuration random_robust_configuration(std::mt19937_64& rng, std::size_t arcs,
                                                 std::size_t full, double min_width = 0.2,
                                                 double separation = 0.05)
{
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    std::uniform_real_distribution<double> width(min_width, kTwoPi - min_width);
    for (;;) {
        std::vector<double> ends;
        Configuration cfg;
        for (std::size_t i = 0; i < arcs; ++i) {
            const double s = angle(rng);
            const double w = width(rng);
            ends.push_back(s);
            ends.push_back(std::fmod(s + w, kTwoPi));
            cfg.landmarks.push_back(arc_landmark(s, s + w));
        }
        bool ok = true;
        for (std::size_t i = 0; i < ends.size() && ok; ++i) {
            for (std::size_t j = i + 1; j < ends.size() && ok; ++j) {
                const double d = std::abs(ends[i] - ends[j]);
                ok = std::min(d, kTwoPi - d) >= separation;
            }
        }
        if (!ok) {
            continue;
        }
        for (std::size_t i = 0; i < full; ++i) {
            cfg.landmarks.push_back(Landmark{{0.0, 0.0}, 2.0 + 0.1 * static_cast<double>(i)});
        }
        std::shuffle(cfg.landmarks.begin(), cfg.landmarks.end(), rng);
        return cfg;
    }
}

/// Every unit-jump canonical sequence (up to rotation) with length ≤ max_len
/// and values in [0, max_value]. Canonical means the least rotation.
inline std::vector<std::vector<Level>> all_unit_jump_classes(std::size_t max_len, Level max_value)
{
    std::vector<std::vector<Level>> out;
    for (Level c = 0; c <= max_value; ++c) {
        out.push_back({c});
    }
    std::vector<Level> cur;
    auto extend = [&](auto& self, std::size_t len) -> void {
        if (cur.size() == len) {
            const long d = static_cast<long>(cur.back()) - static_cast<long>(cur.front());
            if (std::abs(d) == 1 && brute_least_rotation(cur) == cur) {
                out.push_back(cur);
            }
            return;
        }
        const Level last = cur.back();
        if (last + 1 <= max_value) {
            cur.push_back(last + 1);
            self(self, len);
            cur.pop_back();
        }
        if (last >= 1) {
            cur.push_back(last - 1);
            self(self, len);
            cur.pop_back();
        }
    };
    for (std::size_t len = 2; len <= max_len; len += 2) {
        for (Level c = 0; c <= max_value; ++c) {
            cur = {c};
            extend(extend, len);
        }
    }
    return out;
}

} // namespace diskdecomp::testing
