#include "diskdecomp/decomp.hpp"

#include "diskdecomp/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace diskdecomp {

std::uint64_t factorial(std::size_t n)
{
    if (n > 20) {
        throw Error(std::to_string(n) + "! exceeds the 64-bit count range");
    }
    std::uint64_t f = 1;
    for (std::size_t k = 2; k <= n; ++k) {
        f *= k;
    }
    return f;
}

bool BoundaryLayout::is_up(std::size_t point) const
{
    const std::size_t prev = (point + values.size() - 1) % values.size();
    return values[point] > values[prev];
}

Level BoundaryLayout::level(std::size_t point) const
{
    const std::size_t prev = (point + values.size() - 1) % values.size();
    return std::max(values[point], values[prev]);
}

Level BoundaryLayout::min_value() const
{
    return *std::min_element(values.begin(), values.end());
}

namespace {

BoundaryLayout layout_from_values(std::vector<Level> values, std::vector<Angle> points)
{
    BoundaryLayout layout;
    layout.values = std::move(values);
    if (layout.values.size() == 1) {
        if (!points.empty()) {
            throw Error("a constant function has no partition points");
        }
        return layout;
    }
    if (points.size() != layout.values.size()) {
        throw Error("layout needs one partition point per value");
    }
    for (std::size_t j = 1; j < points.size(); ++j) {
        if (!(points[j - 1] < points[j])) {
            throw Error("layout points must be strictly increasing");
        }
    }
    layout.points = std::move(points);

    for (std::size_t j = 0; j < layout.points.size(); ++j) {
        const std::size_t prev = (j + layout.values.size() - 1) % layout.values.size();
        const long jump = static_cast<long>(layout.values[j]) - static_cast<long>(layout.values[prev]);
        if (jump == 1) {
            layout.up_points.push_back(j);
            layout.ups.push_back(layout.points[j]);
        } else if (jump == -1) {
            layout.down_points.push_back(j);
            layout.downs.push_back(layout.points[j]);
        } else {
            throw Error("no robust layout: jump of " + std::to_string(jump));
        }
    }
    return layout;
}

// Rotation of the canonical values whose first entry is entered by an
// upward step (identity for constants).
std::vector<Level> rotate_to_first_up(const CanonicalFunction& c)
{
    std::vector<Level> v = c.values();
    if (v.size() == 1) {
        return v;
    }
    std::size_t first_up = 0;
    while (first_up < v.size() && c.jump_into(first_up) <= 0) {
        ++first_up;
    }
    std::rotate(v.begin(), v.begin() + static_cast<long>(first_up), v.end());
    return v;
}

std::vector<Angle> equally_spaced(std::size_t count)
{
    std::vector<Angle> points;
    if (count < 2) {
        return points;
    }
    points.reserve(count);
    for (std::size_t j = 0; j < count; ++j) {
        points.emplace_back(kTwoPi * static_cast<double>(j) / static_cast<double>(count));
    }
    return points;
}

void require_unit_jumps(const CanonicalFunction& c)
{
    if (!admits_robust(c)) {
        throw Error("no robust layout: the class has a jump larger than 1");
    }
}

CombinatorialDecomposition assemble(const BoundaryLayout& layout, Matching m, long mu)
{
    CombinatorialDecomposition d;
    d.arcs.reserve(m.pairing.size());
    for (std::size_t i = 0; i < m.pairing.size(); ++i) {
        d.arcs.push_back(Arc{layout.ups[i], layout.downs[m.pairing[i]]});
    }
    d.base = static_cast<Level>(static_cast<long>(layout.min_value()) - mu);
    d.matching = std::move(m);
    return d;
}

// Arc sum plus base must reproduce the layout values on every open arc.
void check_reproduces(const BoundaryLayout& layout, const CombinatorialDecomposition& d)
{
    const auto cover = arc_coverage(layout, d.matching);
    for (std::size_t j = 0; j < cover.size(); ++j) {
        if (cover[j] + static_cast<long>(d.base) != static_cast<long>(layout.values[j])) {
            throw std::logic_error("decomposition does not reproduce the function");
        }
    }
}

} // namespace

BoundaryLayout make_layout(const CanonicalFunction& c, std::vector<Angle> points)
{
    return layout_from_values(c.values(), std::move(points));
}

BoundaryLayout default_layout(const CanonicalFunction& c)
{
    require_unit_jumps(c);
    std::vector<Level> values = rotate_to_first_up(c);
    const std::size_t n = values.size();
    return layout_from_values(std::move(values), equally_spaced(n));
}

BoundaryLayout measured_layout(const Configuration& cfg, double tol)
{
    const Arrangement ar = arrange(cfg, tol);
    std::vector<Angle> points;
    for (const auto& cluster : ar.events.clusters) {
        points.push_back(cluster.at);
    }
    return layout_from_values(ar.gap_values, std::move(points));
}

std::vector<long> arc_coverage(const BoundaryLayout& layout, const Matching& m)
{
    const std::size_t n = layout.points.size();
    if (n == 0) {
        return {0};
    }
    // Gap 0 lies between points 0 and 1; an arc from point a to point b
    // covers gaps a..b-1 cyclically.
    long running = 0;
    for (std::size_t i = 0; i < m.pairing.size(); ++i) {
        const std::size_t a = layout.up_points[i];
        const std::size_t b = layout.down_points[m.pairing[i]];
        if ((n - a) % n < (b + n - a) % n) {
            ++running;
        }
    }
    std::vector<long> cover(n);
    cover[0] = running;
    for (std::size_t j = 1; j < n; ++j) {
        running += layout.is_up(j) ? 1 : -1;
        cover[j] = running;
    }
    return cover;
}

long arcsum_min(const BoundaryLayout& layout, const Matching& m)
{
    const auto cover = arc_coverage(layout, m);
    return *std::min_element(cover.begin(), cover.end());
}

std::vector<CombinatorialDecomposition> enumerate_robust(const CanonicalFunction& c,
                                                         const BoundaryLayout& layout,
                                                         std::uint64_t cap)
{
    require_unit_jumps(c);
    const std::size_t L = layout.arc_count();
    if (L > 20 || factorial(L) > cap) {
        throw Error("enumeration cap exceeded: " + std::to_string(L) + "! matchings, cap " +
                    std::to_string(cap));
    }
    const long f_inf = layout.min_value();

    std::vector<CombinatorialDecomposition> out;
    Matching m{std::vector<std::size_t>(L)};
    std::iota(m.pairing.begin(), m.pairing.end(), std::size_t{0});
    do {
        const long mu = arcsum_min(layout, m);
        if (mu <= f_inf) {
            CombinatorialDecomposition d = assemble(layout, m, mu);
            check_reproduces(layout, d);
            out.push_back(std::move(d));
        }
    } while (std::next_permutation(m.pairing.begin(), m.pairing.end()));
    return out;
}

RobustCount count_robust(const CanonicalFunction& c, std::uint64_t cap)
{
    if (!admits_robust(c)) {
        return {0, 0};
    }
    const SequenceStats st = stats(c);
    const std::uint64_t all = factorial(st.L);
    if (st.f_inf >= st.tau) {
        return {all, all};
    }
    if (all <= cap) {
        const auto n = static_cast<std::uint64_t>(enumerate_robust(c, default_layout(c), cap).size());
        return {n, n};
    }
    return {1, all};
}

std::pair<Level, Level> signal_count_bounds(const SequenceStats& st)
{
    return {std::max(st.f_sup, st.L), st.f_sup + st.tau};
}

std::vector<Level> baseline_signal_counts(const SequenceStats& st)
{
    std::vector<Level> counts;
    const Level lowest = st.f_inf > st.tau ? st.f_inf - st.tau : 0;
    for (Level k = lowest; k <= st.f_inf; ++k) {
        counts.push_back(st.L + k);
    }
    return counts;
}

namespace {

// Superlevel components {f ≥ k} of a layout as (up point, down point) pairs,
// in CCW order of their up points.
std::vector<std::pair<std::size_t, std::size_t>> level_components(const BoundaryLayout& layout,
                                                                  Level k)
{
    const std::size_t n = layout.points.size();
    std::vector<std::pair<std::size_t, std::size_t>> comps;
    for (std::size_t p = 0; p < n; ++p) {
        if (!layout.is_up(p) || layout.level(p) != k) {
            continue;
        }
        std::size_t q = (p + 1) % n;
        while (layout.is_up(q) || layout.level(q) != k) {
            q = (q + 1) % n;
        }
        comps.emplace_back(p, q);
    }
    return comps;
}

// Matching index of each layout point within ups/downs.
struct PointIndex {
    std::vector<std::size_t> up_of;
    std::vector<std::size_t> down_of;

    explicit PointIndex(const BoundaryLayout& layout)
        : up_of(layout.points.size()), down_of(layout.points.size())
    {
        for (std::size_t i = 0; i < layout.up_points.size(); ++i) {
            up_of[layout.up_points[i]] = i;
        }
        for (std::size_t i = 0; i < layout.down_points.size(); ++i) {
            down_of[layout.down_points[i]] = i;
        }
    }
};

// Per level k, the up of component i is matched to the down of component
// i + shift[k]. A shift s adds exactly s to the arc sum everywhere.
CombinatorialDecomposition shifted_levels(const CanonicalFunction& c, const BoundaryLayout& layout,
                                          const std::map<Level, Level>& shift)
{
    const SequenceStats st = stats(c);
    const PointIndex index(layout);
    Matching m{std::vector<std::size_t>(layout.arc_count())};
    for (Level k = st.f_inf + 1; k <= st.f_sup; ++k) {
        const auto comps = level_components(layout, k);
        const std::size_t count = comps.size();
        const std::size_t s = shift.at(k);
        for (std::size_t i = 0; i < count; ++i) {
            m.pairing[index.up_of[comps[i].first]] = index.down_of[comps[(i + s) % count].second];
        }
    }
    CombinatorialDecomposition d = assemble(layout, m, arcsum_min(layout, m));
    check_reproduces(layout, d);
    return d;
}

} // namespace

CombinatorialDecomposition minimal_base_decomposition(const CanonicalFunction& c,
                                                      const BoundaryLayout& layout)
{
    require_unit_jumps(c);
    const SequenceStats st = stats(c);
    if (st.f_inf < st.tau) {
        throw Error("minimal-base construction inapplicable: f_inf (" + std::to_string(st.f_inf) +
                    ") < tau (" + std::to_string(st.tau) + ")");
    }

    // Each gap component C of {f < k} runs from a down of level k to the next
    // up of level k; the arc S¹ \ C goes from that up around to that down.
    const std::size_t n = layout.points.size();
    const PointIndex index(layout);
    Matching m{std::vector<std::size_t>(layout.arc_count())};
    for (Level k = st.f_inf + 1; k <= st.f_sup; ++k) {
        for (std::size_t p = 0; p < n; ++p) {
            if (layout.is_up(p) || layout.level(p) != k) {
                continue;
            }
            std::size_t q = (p + 1) % n;
            while (!layout.is_up(q) || layout.level(q) != k) {
                q = (q + 1) % n;
            }
            m.pairing[index.up_of[q]] = index.down_of[p];
        }
    }
    CombinatorialDecomposition d = assemble(layout, m, arcsum_min(layout, m));
    if (d.base != st.f_inf - st.tau) {
        throw std::logic_error("minimal-base construction produced the wrong baseline");
    }
    check_reproduces(layout, d);
    return d;
}

CombinatorialDecomposition max_base_decomposition(const CanonicalFunction& c,
                                                  const BoundaryLayout& layout)
{
    require_unit_jumps(c);
    const std::size_t n = layout.points.size();
    Matching m{std::vector<std::size_t>(layout.arc_count())};
    if (n > 0) {
        const Level f_inf = layout.min_value();
        std::size_t gap = 0;
        while (layout.values[gap] != f_inf) {
            ++gap;
        }
        const PointIndex index(layout);
        std::vector<std::size_t> open;
        for (std::size_t step = 1; step <= n; ++step) {
            const std::size_t p = (gap + step) % n;
            if (layout.is_up(p)) {
                open.push_back(p);
            } else {
                m.pairing[index.up_of[open.back()]] = index.down_of[p];
                open.pop_back();
            }
        }
    }
    CombinatorialDecomposition d = assemble(layout, m, arcsum_min(layout, m));
    check_reproduces(layout, d);
    return d;
}

CombinatorialDecomposition generate_for_n(const CanonicalFunction& c, const BoundaryLayout& layout,
                                          Level n)
{
    require_unit_jumps(c);
    const SequenceStats st = stats(c);
    const auto [lo, hi] = signal_count_bounds(st);
    if (n < lo || n > hi) {
        throw Error("signal count out of bounds: n = " + std::to_string(n) + " not in [" +
                    std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    // base = n - L full circles; the arcs must then sit at arc sum minimum
    // f_* - base, distributed over the levels.
    Level remaining = st.f_inf - (n - st.L);
    std::map<Level, Level> shift;
    for (const auto& [k, tau_k] : st.tau_k) {
        shift[k] = std::min(tau_k, remaining);
        remaining -= shift[k];
    }
    CombinatorialDecomposition d = shifted_levels(c, layout, shift);
    if (d.signal_count() != n) {
        throw std::logic_error("generate_for_n produced the wrong signal count");
    }
    return d;
}

Configuration realize(const CombinatorialDecomposition& d)
{
    Configuration cfg;
    cfg.landmarks.reserve(d.signal_count());
    for (const Arc& a : d.arcs) {
        cfg.landmarks.push_back(realize_arc(a));
    }
    for (Level k = 0; k < d.base; ++k) {
        cfg.landmarks.push_back(realize_full());
    }
    return cfg;
}

std::vector<CombinatorialDecomposition> enumerate_dof_maximizing(const CanonicalFunction& c,
                                                                 std::uint64_t cap)
{
    const std::vector<Level> values = rotate_to_first_up(c);
    const std::size_t n = values.size();
    const std::vector<Angle> points = equally_spaced(n);
    const Level f_inf = *std::min_element(values.begin(), values.end());

    // One slot per unit of jump.
    std::vector<std::size_t> up_slots;
    std::vector<std::size_t> down_slots;
    std::vector<long> jump(n, 0);
    for (std::size_t j = 0; j < n && n > 1; ++j) {
        jump[j] = static_cast<long>(values[j]) - static_cast<long>(values[(j + n - 1) % n]);
        for (long k = 0; k < std::abs(jump[j]); ++k) {
            (jump[j] > 0 ? up_slots : down_slots).push_back(j);
        }
    }
    const std::size_t L = up_slots.size();
    if (L > 20 || factorial(L) > cap) {
        throw Error("enumeration cap exceeded: " + std::to_string(L) + "! slot matchings, cap " +
                    std::to_string(cap));
    }

    std::vector<CombinatorialDecomposition> out;
    std::set<std::vector<std::pair<std::size_t, std::size_t>>> seen;
    Matching m{std::vector<std::size_t>(L)};
    std::iota(m.pairing.begin(), m.pairing.end(), std::size_t{0});
    do {
        std::vector<std::pair<std::size_t, std::size_t>> arcs;
        for (std::size_t i = 0; i < L; ++i) {
            arcs.emplace_back(up_slots[i], down_slots[m.pairing[i]]);
        }
        std::sort(arcs.begin(), arcs.end());
        if (!seen.insert(arcs).second) {
            continue;
        }
        long running = 0;
        for (const auto& [a, b] : arcs) {
            if ((n - a) % n < (b + n - a) % n) {
                ++running;
            }
        }
        long mu = running;
        for (std::size_t j = 1; j < n; ++j) {
            running += jump[j];
            mu = std::min(mu, running);
        }
        if (mu > static_cast<long>(f_inf)) {
            continue;
        }
        CombinatorialDecomposition d;
        for (const auto& [a, b] : arcs) {
            d.arcs.push_back(Arc{points[a], points[b]});
        }
        d.base = static_cast<Level>(static_cast<long>(f_inf) - mu);
        d.matching = m;
        out.push_back(std::move(d));
    } while (std::next_permutation(m.pairing.begin(), m.pairing.end()));
    return out;
}

} // namespace diskdecomp
