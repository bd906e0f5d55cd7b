#include "diskdecomp/decomp.hpp"
#include "diskdecomp/error.hpp"
#include "diskdecomp/robustness.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace diskdecomp;
using namespace diskdecomp::testing;

namespace {

const Configuration kDisjoint = config({arc_landmark(0, 1), arc_landmark(2, 3)});
const Configuration kIdentical = config({arc_landmark(0, kPi / 2), arc_landmark(0, kPi / 2)});
const Configuration kShared = config({arc_landmark(0, kPi / 2), arc_landmark(kPi / 2, kPi)});
const Landmark kTangent{{2, 0}, 1};

// Disk tangent to S¹ from outside at angle t.
Landmark tangent_at(double t)
{
    return Landmark{{2 * std::cos(t), 2 * std::sin(t)}, 1};
}

} // namespace

TEST_CASE("is_robust: examples")
{
    const auto shared = is_robust(kShared);
    CHECK_FALSE(shared.robust);
    REQUIRE(shared.violations.size() == 1);
    CHECK(std::holds_alternative<SharedBoundary>(shared.violations[0]));

    const auto tangent = is_robust(config({kTangent}));
    CHECK_FALSE(tangent.robust);
    REQUIRE(tangent.violations.size() == 1);
    REQUIRE(std::holds_alternative<NonRobustSignal>(tangent.violations[0]));
    CHECK(std::get<NonRobustSignal>(tangent.violations[0]).boundary_count == 1);

    CHECK(is_robust(kDisjoint).robust);
    CHECK(is_robust(Configuration{}).robust);
    const auto coincident = is_robust(config({Landmark{{0, 0}, 1}}));
    CHECK_FALSE(coincident.robust);
    CHECK(std::get<NonRobustSignal>(coincident.violations[0]).boundary_count == kInfiniteBoundary);
}

TEST_CASE("is_properly_usc: examples")
{
    const auto shared = is_properly_usc(kShared);
    CHECK_FALSE(shared.properly_usc);
    REQUIRE(shared.witness);
    CHECK(circular_distance(*shared.witness, Angle(kPi / 2)) < 1e-9);
    CHECK(is_properly_usc(kIdentical).properly_usc);
    CHECK_FALSE(is_properly_usc(config({kTangent})).properly_usc);
    CHECK(is_properly_usc(kDisjoint).properly_usc);
    // Nested arcs sharing a start extend in the same direction.
    CHECK(is_properly_usc(config({arc_landmark(0, 1), arc_landmark(0, 2)})).properly_usc);
}

TEST_CASE("multiplicities: examples")
{
    const auto m = multiplicities(kIdentical);
    REQUIRE(m.entries.size() == 2);
    CHECK(m.entries[0].second == 2);
    CHECK(m.entries[1].second == 2);
    CHECK(m.total() == 4);

    const auto d = multiplicities(kDisjoint);
    CHECK(d.entries.size() == 4);
    CHECK(d.total() == 4);

    CHECK_THROWS_AS(multiplicities(kShared), Error);
}

TEST_CASE("dof: examples")
{
    const auto r = dof(config({arc_landmark(0, 1), realize_full()}), 2);
    CHECK(r.dof == 4);
    CHECK(r.rho == std::vector<int>{1, 3});
    CHECK(dof(config({Landmark{{0, 0}, 1}}), 1).dof == 0);
    CHECK(dof(config({kTangent}), 1).dof == 1);
    CHECK_THROWS_AS(dof(kDisjoint, 1), Error);
}

TEST_CASE("maximizes_dof: examples")
{
    CHECK(maximizes_dof(kDisjoint));
    CHECK(maximizes_dof(kIdentical));
    CHECK_FALSE(maximizes_dof(config({kTangent, arc_landmark(2, 3)})));
    CHECK_FALSE(maximizes_dof(kShared));

    // The identical pair attains the best dof among DoF-maximizing
    // decompositions of its class.
    const auto alternatives = enumerate_dof_maximizing(canonicalize(seq(kIdentical)));
    for (const auto& d : alternatives) {
        CHECK(dof(realize(d), 4).dof == dof(kIdentical, 4).dof);
    }
}

namespace {

Configuration random_configuration(std::mt19937_64& rng, int max_n)
{
    std::uniform_int_distribution<int> count(0, max_n);
    std::uniform_real_distribution<double> u(-2, 2);
    std::uniform_real_distribution<double> rad(0.05, 3);
    std::uniform_int_distribution<int> kind(0, 9);
    std::uniform_real_distribution<double> angle(0, kTwoPi);
    Configuration cfg;
    const int n = count(rng);
    // Mix generic disks with planted degeneracies.
    for (int i = 0; i < n; ++i) {
        const int k = kind(rng);
        if (k == 0) {
            cfg.landmarks.push_back(tangent_at(angle(rng)));
        } else if (k == 1 && !cfg.landmarks.empty()) {
            cfg.landmarks.push_back(cfg.landmarks.back());
        } else if (k == 2) {
            const double s = angle(rng);
            cfg.landmarks.push_back(arc_landmark(s, s + 1));
            cfg.landmarks.push_back(arc_landmark(s + 1, s + 2.5));
        } else {
            cfg.landmarks.push_back({{u(rng), u(rng)}, rad(rng)});
        }
    }
    return cfg;
}

} // namespace

TEST_CASE("property: the two u.s.c. checks agree")
{
    std::mt19937_64 rng(51);
    for (int i = 0; i < 1000; ++i) {
        const auto cfg = random_configuration(rng, 5);
        const auto a = properly_usc_by_values(cfg);
        const auto b = properly_usc_by_pairs(cfg);
        CHECK(a.properly_usc == b.properly_usc);
    }
}

TEST_CASE("property: robust implies properly u.s.c., unit jumps and maximal dof")
{
    std::mt19937_64 rng(52);
    std::uniform_int_distribution<std::size_t> arcs(0, 6);
    std::uniform_int_distribution<std::size_t> full(0, 2);
    for (int i = 0; i < 300; ++i) {
        const auto cfg = random_robust_configuration(rng, arcs(rng), full(rng));
        REQUIRE(is_robust(cfg).robust);
        CHECK(is_properly_usc(cfg).properly_usc);
        CHECK(maximizes_dof(cfg));
        const auto s = seq(cfg).values();
        for (std::size_t j = 0; j < s.size(); ++j) {
            const long d = static_cast<long>(s[j]) - static_cast<long>(s[(j + 1) % s.size()]);
            CHECK(std::abs(d) <= 1);
        }
        const auto st = stats(canonicalize(seq(cfg)));
        CHECK(multiplicities(cfg).total() == 2 * st.L);
    }
    // And on configurations with planted defects.
    for (int i = 0; i < 1000; ++i) {
        const auto cfg = random_configuration(rng, 5);
        if (is_robust(cfg).robust) {
            CHECK(is_properly_usc(cfg).properly_usc);
            CHECK(maximizes_dof(cfg));
        }
    }
}

TEST_CASE("property: dof is 3N - 2L across a class and drops with a defect")
{
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<std::size_t> half(1, 4);
    std::uniform_int_distribution<Level> floor(0, 3);
    for (int i = 0; i < 100; ++i) {
        const auto c = canonicalize(CircularSequence(random_unit_jump_values(rng, half(rng), floor(rng))));
        const auto st = stats(c);
        const auto layout = default_layout(c);
        const auto all = enumerate_robust(c, layout);
        const std::size_t N = st.f_inf + st.L + 2;
        const long best = 3 * static_cast<long>(N) - 2 * static_cast<long>(st.L);
        for (const auto& d : all) {
            const auto cfg = realize(d);
            REQUIRE(dof(cfg, N).dof == best);

            // Tangent defect: remove it (the merge repair) to get back to cfg.
            Configuration with_tangent = cfg;
            const Angle mid = layout.points[0] + 0.5 * ccw_distance(layout.points[0], layout.points[1]);
            with_tangent.landmarks.push_back(tangent_at(mid.radians()));
            CHECK(canonicalize(seq(with_tangent)) == c);
            CHECK_FALSE(maximizes_dof(with_tangent));
            CHECK(dof(with_tangent, N).dof < best);

            // Split defect: cut the first arc at its midpoint into two arcs
            // meeting head to tail; merging them is the repair.
            Configuration split;
            const Arc a = d.arcs[0];
            split.landmarks.push_back(realize_arc(Arc{a.start, a.midpoint()}));
            split.landmarks.push_back(realize_arc(Arc{a.midpoint(), a.end}));
            for (std::size_t k = 1; k < cfg.size(); ++k) {
                split.landmarks.push_back(cfg.landmarks[k]);
            }
            CHECK(canonicalize(seq(split)) == c);
            CHECK_FALSE(is_properly_usc(split).properly_usc);
            CHECK(dof(split, N).dof < best);
        }
    }
}
