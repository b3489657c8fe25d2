#include <random>

#include "doctest.h"
#include "gwb/cycle.hpp"
#include "helpers.hpp"

using namespace gwb;

namespace {

Cycle random_cycle(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> idx(-4, 4), val(-2, 2);
    Cycle c;
    for (int k = 0; k < 4; ++k) c.set_coeff(idx(rng), val(rng));
    return c;
}

}  // namespace

TEST_CASE("shift moves support against the index") {
    CHECK(shift(Cycle::Z(0), 1) == C({{-1, 1}}));
    CHECK(shift(Cycle::Z(0), -2) == C({{2, 1}}));
    CHECK(shift(C({{0, 1}, {3, -2}}), 1) == C({{-1, 1}, {2, -2}}));
}

TEST_CASE("iterate telescopes") {
    Cycle G = C({{0, 1}, {1, -1}, {2, 1}});
    CHECK(iterate(G, 0).is_zero());
    CHECK(iterate(G, 1) == G);
    CHECK(iterate(G, 3) == C({{0, 1}, {2, 1}, {4, 1}}));
    CHECK(iterate(G, -1) == C({{-1, -1}, {0, 1}, {1, -1}}));
}

TEST_CASE("iterate satisfies the cocycle identity for arbitrary cycles") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long long> mn(-9, 9);
    for (int k = 0; k < 200; ++k) {
        Cycle G = random_cycle(rng);
        long long m = mn(rng), n = mn(rng);
        CHECK(iterate(G, m) + shift(iterate(G, n), -m) == iterate(G, m + n));
    }
}

TEST_CASE("pleasant alternation") {
    CHECK(is_pleasantly_alternating(Cycle::Z(0)));
    CHECK(is_pleasantly_alternating(C({{0, 1}, {1, -1}, {2, 1}})));
    CHECK(is_pleasantly_alternating(C({{0, 1}, {2, -1}, {5, 1}})));
    CHECK_FALSE(is_pleasantly_alternating(Cycle()));
    CHECK_FALSE(is_pleasantly_alternating(C({{0, -1}})));
    CHECK_FALSE(is_pleasantly_alternating(C({{0, 1}, {1, 1}})));
    CHECK_FALSE(is_pleasantly_alternating(C({{0, 1}, {1, -1}})));
    CHECK_FALSE(is_pleasantly_alternating(C({{0, 2}, {1, -2}, {2, 2}})));
}

TEST_CASE("min and cap and positive part") {
    Cycle a = C({{0, 2}, {1, -1}}), b = C({{0, 1}, {2, 3}});
    CHECK(cyc_min(a, b) == C({{0, 1}, {1, -1}}));
    CHECK(cyc_max(a, b) == C({{0, 2}, {2, 3}}));
    CHECK(pos_part(a) == C({{0, 2}}));
    CHECK(cyc_abs(a) == C({{0, 2}, {1, 1}}));
    CHECK(cyc_cap(C({{0, 3}, {1, 1}}), 1) == C({{0, 1}, {1, 1}}));
    CHECK(is_effective(b));
    CHECK_FALSE(is_effective(a));
}

TEST_CASE("classification recognizes multiples of alternating cycles") {
    ClassifyResult r = classify_sequence(C({{0, 2}}));
    CHECK(r.kind == ClassifyResult::Kind::ALTERNATING_MULTIPLE);
    CHECK(r.multiple == 2);
    CHECK(r.base == Cycle::Z(0));

    Cycle G = C({{0, 3}, {1, -3}, {2, 3}});
    r = classify_sequence(G);
    CHECK(r.kind == ClassifyResult::Kind::ALTERNATING_MULTIPLE);
    CHECK(r.multiple == 3);
    CHECK(G == 3 * r.base);

    r = classify_sequence(Cycle());
    CHECK(r.kind == ClassifyResult::Kind::ALTERNATING_MULTIPLE);
    CHECK(r.multiple == 0);
    CHECK(r.base == Cycle::Z(0));
}

TEST_CASE("classification pins an index otherwise") {
    ClassifyResult r = classify_sequence(C({{0, 1}, {1, 1}, {2, -1}, {3, 1}}));
    CHECK(r.kind == ClassifyResult::Kind::PINNED);
    CHECK(r.pinned_index == 0);
    Cycle G = C({{0, 1}, {1, 1}, {2, -1}, {3, 1}});
    for (long long n = G.span(); n <= G.span() + 16; ++n) {
        Cycle m = cyc_min(iterate(G, n), shift(iterate(G, n), n));
        CHECK(m.coeff(r.pinned_index) >= 1);
    }
}

TEST_CASE("classification rejects non effective sequences") {
    CHECK_THROWS_AS(classify_sequence(C({{0, -1}})), MathError);
}
