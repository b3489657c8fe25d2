#include <variant>

#include "doctest.h"
#include "gwb/serde.hpp"
#include "helpers.hpp"

using namespace gwb;

TEST_CASE("ring descriptors round trip") {
    json a = json::parse(R"({"kind":"A","dim":1})");
    RingVariant ra = load_ring(a);
    REQUIRE(std::holds_alternative<SigmaLine<Rat>>(ra));
    CHECK_FALSE(std::get<SigmaLine<Rat>>(ra).multiplicative);
    CHECK(ring_to_json(ra) == a);

    json b = json::parse(R"({"kind":"B","p":"2","dim":1})");
    RingVariant rb = load_ring(b);
    REQUIRE(std::holds_alternative<SigmaLine<Rat>>(rb));
    CHECK(std::get<SigmaLine<Rat>>(rb).p == Rat(2));
    CHECK(ring_to_json(rb) == b);

    json bs = json::parse(R"({"kind":"B","p":"symbolic","dim":1})");
    RingVariant rbs = load_ring(bs);
    REQUIRE(std::holds_alternative<SigmaLine<RatFunc>>(rbs));
    CHECK(ring_to_json(rbs) == bs);
}

TEST_CASE("torus descriptors round trip") {
    json a = json::parse(R"({"kind":"A","dim":3,"params":["2","3"]})");
    RingVariant ra = load_ring(a);
    REQUIRE(std::holds_alternative<Torus<Rat>>(ra));
    const auto& ta = std::get<Torus<Rat>>(ra);
    CHECK(ta.has_additive);
    CHECK(ta.dim() == 3);
    CHECK(ta.params == std::vector<Rat>{Rat(2), Rat(3)});
    CHECK(ring_to_json(ra) == a);

    json bs = json::parse(R"({"kind":"B","dim":2,"p":"symbolic","params":["p","p + 1"]})");
    RingVariant rbs = load_ring(bs);
    REQUIRE(std::holds_alternative<Torus<RatFunc>>(rbs));
    CHECK(ring_to_json(rbs) == bs);
}

TEST_CASE("malformed descriptors are rejected") {
    CHECK_THROWS_AS(load_ring(json::parse(R"({"dim":1})")), ParseError);
    CHECK_THROWS_AS(load_ring(json::parse(R"({"kind":"C","dim":1})")), ParseError);
    CHECK_THROWS_AS(load_ring(json::parse(R"({"kind":"A","dim":0})")), ParseError);
    CHECK_THROWS_AS(load_ring(json::parse(R"({"kind":"B","dim":1})")), ParseError);
    CHECK_THROWS_AS(load_ring(json::parse(R"({"kind":"B","dim":2,"params":["2"]})")), ParseError);
    CHECK_THROWS_AS(load_ring(json::parse(R"({"kind":"B","dim":2,"params":["2","4"]})")),
                    MathError);
}

TEST_CASE("specs round trip through json") {
    json j = json::parse(R"({"orbit":"u","G":[[0,1]],"h":"u","j":"1"})");
    GradedRingSpec<Rat> s = load_spec(additive_line(), j, kDefaultSymbolicWindow, true);
    CHECK(s.q == P("u"));
    CHECK(s.G == C({{0, 1}}));
    CHECK(s.h == P("u"));
    CHECK(s.j == P("1"));
    CHECK(spec_to_json(s) == j);

    json n = json::parse(R"({"orbit":"u","G":[[0,1],[1,-1],[2,1]],"h":"u^2","j":"u"})");
    GradedRingSpec<Rat> s2 = load_spec(additive_line(), n, kDefaultSymbolicWindow, true);
    GradedRingSpec<Rat> s3 =
        load_spec(additive_line(), spec_to_json(s2), kDefaultSymbolicWindow, true);
    CHECK(spec_to_json(s2) == spec_to_json(s3));
    CHECK_THROWS_AS(load_spec(additive_line(), json::parse(R"({"orbit":"u"})"),
                              kDefaultSymbolicWindow, true),
                    ParseError);
}

TEST_CASE("lonely verdicts serialize their witness shape") {
    LonelyVerdict ok;
    ok.lonely = true;
    ok.cert = Cert::CERTIFIED;
    ok.bound = 5;
    CHECK(verdict_to_json(ok) ==
          json::parse(R"({"lonely":true,"witness":{},"certificate":"CERTIFIED","bound":5})"));

    LonelyVerdict shifted;
    shifted.witness_shift = 3;
    shifted.bound = 4;
    json js = verdict_to_json(shifted);
    CHECK(js.at("lonely") == false);
    CHECK(js.at("witness") == json::parse(R"({"shift":3})"));

    LonelyVerdict pointed;
    pointed.witness_shift = 1;
    pointed.witness_point = std::vector<Rat>{Rat(-2), Rat(1)};
    pointed.cert = Cert::CERTIFIED;
    json jp = verdict_to_json(pointed);
    CHECK(jp.at("witness") == json::parse(R"({"point":["-2","1"],"shift":1})"));
    CHECK(jp.at("certificate") == "CERTIFIED");
}

TEST_CASE("piece tables serialize with string degree keys") {
    PieceTable<Rat> t;
    t[-1] = P("u");
    t[0] = P("1");
    t[2] = P("u^2-3*u+2");
    CHECK(pieces_to_json(t) ==
          json::parse(R"({"-1":"u","0":"1","2":"u^2 - 3*u + 2"})"));

    FracTable<Rat> f;
    f[0] = PolyFraction<Rat>(P("1"));
    f[1] = PolyFraction<Rat>(P("u"), P("u-1"));
    CHECK(pieces_to_json(f) == json::parse(R"x({"0":"1","1":"(u)/(u - 1)"})x"));
}
