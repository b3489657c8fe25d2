#include <random>
#include <set>

#include "doctest.h"
#include "gwb/morita.hpp"
#include "helpers.hpp"

using namespace gwb;

namespace {
const SigmaLine<Rat> kAdd = additive_line();
}

TEST_CASE("profiles map to pleasant cycles and back") {
    CHECK(cycle_from_S({}) == Cycle::Z(0));
    CHECK(cycle_from_S({0}) == Cycle::Z(1));
    CHECK(cycle_from_S({1}) == C({{0, 1}, {1, -1}, {2, 1}}));
    CHECK(s_from_cycle(C({{0, 1}, {2, -1}, {3, 1}})) == std::set<long long>{2});
    CHECK_THROWS_AS(cycle_from_S({-1}), MathError);
    CHECK_THROWS_AS(s_from_cycle(C({{0, 2}})), MathError);
    CHECK_THROWS_AS(s_from_cycle(C({{-1, 1}})), MathError);
}

TEST_CASE("profile round trip on random subsets") {
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<int> pick(0, 1);
    for (int k = 0; k < 100; ++k) {
        std::set<long long> S;
        for (long long j = 0; j < 7; ++j)
            if (pick(rng)) S.insert(j);
        Cycle G = cycle_from_S(S);
        CHECK(is_pleasantly_alternating(G));
        CHECK(s_from_cycle(G) == S);
    }
}

TEST_CASE("module pieces over a one point profile") {
    FracTable<Rat> L = build_L(kAdd, P("u"), P("u"), {0}, -3, 3);
    CHECK(L.at(0) == PolyFraction<Rat>(P("u")));
    CHECK(L.at(1) == PolyFraction<Rat>(1));
    CHECK(L.at(2) == PolyFraction<Rat>(1));
    CHECK(L.at(-1) == PolyFraction<Rat>(P("u*(u-1)")));
}

TEST_CASE("transporter generators between principal ideals") {
    CHECK(hom_generator(P("u*(u+2)"), P("u*(u+1)*(u+2)")) == PolyFraction<Rat>(P("u+1")));
    CHECK(hom_generator(P("u"), P("1")) == PolyFraction<Rat>(P("1"), P("u")));
    CHECK_THROWS_AS(hom_generator(P("0"), P("u")), MathError);
}

TEST_CASE("intersection of principal fractional ideals") {
    std::vector<PolyFraction<Rat>> xs{PolyFraction<Rat>(P("u")),
                                      PolyFraction<Rat>(P("u^2"), P("u-1"))};
    PolyFraction<Rat> got = frac_canonical(kAdd, frac_intersect(xs));
    CHECK(got == PolyFraction<Rat>(P("u^2")));
    std::vector<PolyFraction<Rat>> ys{PolyFraction<Rat>(1), PolyFraction<Rat>(1)};
    CHECK(frac_canonical(kAdd, frac_intersect(ys)) == PolyFraction<Rat>(1));
}

TEST_CASE("endomorphisms of the free module recover the ring itself") {
    FracTable<Rat> A = build_L(kAdd, P("u"), P("u"), {}, -12, 12);
    FracTable<Rat> E = end_of_module(kAdd, A, 4);
    for (long long m = 0; m <= 4; ++m) CHECK(E.at(m) == PolyFraction<Rat>(1));
    CHECK(E.at(-1) == PolyFraction<Rat>(P("u-1")));
    CHECK(E.at(-2) == PolyFraction<Rat>(P("(u-1)*(u-2)")));
    CHECK(E.at(-4) == PolyFraction<Rat>(P("(u-1)*(u-2)*(u-3)*(u-4)")));
}

TEST_CASE("endomorphism pieces around a one point profile") {
    FracTable<Rat> L = build_L(kAdd, P("u"), P("u"), {0}, -12, 12);
    FracTable<Rat> E = end_of_module(kAdd, L, 3);
    CHECK(E.at(0) == PolyFraction<Rat>(1));
    CHECK(E.at(-1) == PolyFraction<Rat>(P("u")));
    CHECK(E.at(1) == PolyFraction<Rat>(1));
}

TEST_CASE("endomorphism ring matches the graded ring of the profile cycle") {
    for (long long j : {0LL, 1LL, 2LL}) {
        GradedRingSpec<Rat> s = make_spec(kAdd, P("u"), cycle_from_S({j}), P("u"), P("1"));
        Report r = check_morita(s, 6);
        CHECK(r.verdict == Verdict::PASS);
        CHECK(r.witness.at("S") == json::array({j}));
    }
}

TEST_CASE("morita check covers multi point profiles and powers") {
    GradedRingSpec<Rat> s = make_spec(kAdd, P("u"), cycle_from_S({0, 2}), P("u^2"), P("1"));
    Report r = check_morita(s, 5);
    CHECK(r.verdict == Verdict::PASS);
    CHECK(r.witness.at("S") == json::array({0, 2}));
}

TEST_CASE("morita check requires a one sided spec") {
    GradedRingSpec<Rat> s = make_spec(kAdd, P("u"), Cycle::Z(0), P("u"), P("u"));
    CHECK_THROWS_AS(check_morita(s, 4), MathError);
}
