#include "diskdecomp/error.hpp"
#include "diskdecomp/sequence.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace diskdecomp;
using namespace diskdecomp::testing;

using V = std::vector<Level>;

TEST_CASE("canonical_rotation: examples")
{
    CHECK(canonical_rotation(CircularSequence({1, 0, 1, 0})).values() == V{0, 1, 0, 1});
    CHECK(canonical_rotation(CircularSequence({2})).values() == V{2});
    const V ex{3, 4, 3, 4, 3, 4, 5, 4, 5, 4};
    CHECK(canonical_rotation(CircularSequence(ex)).values() == brute_least_rotation(ex));
    CHECK(canonical_rotation(CircularSequence(ex)).values() == ex);
    CHECK_THROWS_AS(CircularSequence({}), Error);
}

TEST_CASE("CircularSequence equality is rotation equality")
{
    CHECK(CircularSequence({0, 1, 2, 1}) == CircularSequence({2, 1, 0, 1}));
    CHECK_FALSE(CircularSequence({0, 1, 2}) == CircularSequence({0, 2, 1}));
    CHECK_FALSE(CircularSequence({0, 1}) == CircularSequence({0, 1, 0, 1}));
}

TEST_CASE("property: Booth's least rotation matches brute force")
{
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> len(1, 14);
    std::uniform_int_distribution<Level> val(0, 2);
    for (int i = 0; i < 5000; ++i) {
        V v(static_cast<std::size_t>(len(rng)));
        for (auto& x : v) {
            x = val(rng);
        }
        CHECK(canonical_rotation(CircularSequence(v)).values() == brute_least_rotation(v));
    }
}

TEST_CASE("canonicalize: examples")
{
    CHECK(canonicalize(CircularSequence({1, 1})).values() == V{1});
    CHECK(canonicalize(CircularSequence({0, 1, 1, 0})).values() == V{0, 1});
    CHECK(canonicalize(CircularSequence({0, 1, 0, 1})).values() == V{0, 1, 0, 1});
    CHECK(canonicalize(CircularSequence({1, 1, 0, 1})).values() == V{0, 1});
    CHECK_THROWS_AS(CanonicalFunction({0, 1, 1}), Error);
    CHECK_THROWS_AS(CanonicalFunction({1, 2, 1}), Error);
}

TEST_CASE("stats: examples")
{
    const auto c7 = stats(canonicalize(CircularSequence({7})));
    CHECK(c7.f_sup == 7);
    CHECK(c7.f_inf == 7);
    CHECK(c7.tau == 0);
    CHECK(c7.L == 0);
    CHECK(c7.unit_jumps);

    const auto b = stats(canonicalize(CircularSequence({0, 1, 0, 1})));
    CHECK(b.f_sup == 1);
    CHECK(b.f_inf == 0);
    CHECK(b.tau_k.at(1) == 1);
    CHECK(b.tau == 1);
    CHECK(b.L == 2);
    CHECK(b.unit_jumps);

    const auto ex = stats(canonicalize(CircularSequence({3, 4, 3, 4, 3, 4, 5, 4, 5, 4})));
    CHECK(ex.f_sup == 5);
    CHECK(ex.f_inf == 3);
    CHECK(ex.tau_k == std::map<Level, Level>{{4, 2}, {5, 1}});
    CHECK(ex.tau == 3);
    CHECK(ex.L == 5);

    const auto jump = stats(canonicalize(CircularSequence({0, 2})));
    CHECK_FALSE(jump.unit_jumps);
    CHECK(jump.tau == 0);
}

TEST_CASE("excursion_components and admits_robust: examples")
{
    const CanonicalFunction c({0, 1, 0, 1});
    CHECK(excursion_components(c, 1) == 2);
    CHECK(excursion_components(c, 0) == 1);
    CHECK(excursion_components(c, 2) == 0);
    CHECK_FALSE(admits_robust(CanonicalFunction({0, 2})));
    CHECK(admits_robust(c));
    CHECK(admits_robust(CanonicalFunction({5})));
}

TEST_CASE("property: stats agree with a union-find component oracle")
{
    std::mt19937_64 rng(22);
    std::uniform_int_distribution<int> len(1, 16);
    std::uniform_int_distribution<Level> val(0, 5);
    for (int i = 0; i < 3000; ++i) {
        V v(static_cast<std::size_t>(len(rng)));
        for (auto& x : v) {
            x = val(rng);
        }
        const CircularSequence s(v);
        const CanonicalFunction c = canonicalize(s);
        const SequenceStats st = stats(c);

        CHECK(canonicalize(CircularSequence(c.values())) == c);  // idempotent
        std::rotate(v.begin(), v.begin() + static_cast<long>(v.size() / 2), v.end());
        const SequenceStats rotated_st = stats(canonicalize(CircularSequence(v)));
        CHECK(rotated_st.tau_k == st.tau_k);
        CHECK(rotated_st.L == st.L);

        Level tau = 0;
        for (Level k = st.f_inf + 1; k <= st.f_sup; ++k) {
            const auto oracle = brute_components(c.values(), k);
            CHECK(excursion_components(c, k) == oracle);
            CHECK(st.tau_k.at(k) + 1 == oracle);
            tau += static_cast<Level>(oracle - 1);
        }
        CHECK(st.tau == tau);
        CHECK(st.L == st.f_sup - st.f_inf + st.tau);
        if (st.unit_jumps && c.size() > 1) {
            CHECK(c.size() % 2 == 0);
        }
    }
}

TEST_CASE("property: unit-jump classes have 2L partition points")
{
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<std::size_t> half(1, 8);
    std::uniform_int_distribution<Level> floor(0, 3);
    for (int i = 0; i < 500; ++i) {
        const auto v = random_unit_jump_values(rng, half(rng), floor(rng));
        const auto c = canonicalize(CircularSequence(v));
        const auto st = stats(c);
        CHECK(st.unit_jumps);
        CHECK(c.size() == 2 * st.L);
    }
}
