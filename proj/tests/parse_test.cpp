#include <string>

#include "doctest.h"
#include "gwb/parse.hpp"
#include "gwb/print.hpp"
#include "helpers.hpp"

using namespace gwb;

TEST_CASE("expressions expand to canonical polynomials") {
    CHECK(P("(u-1)*(u-2)") == P("u^2-3*u+2"));
    CHECK(P("-u^2 + 2*u - -3") == P("2*u - u^2 + 3"));
    CHECK(P("u^3") == Poly<Rat>::monomial(Rat(1), 3));
    CHECK(P("(u+1)^3") == P("u^3+3*u^2+3*u+1"));
    CHECK(P("7") == Poly<Rat>(7));
    CHECK(P("1/2*u") == Poly<Rat>::monomial(Rat(1, 2), 1));
    CHECK(P("u/2 + u/2") == P("u"));
}

TEST_CASE("division requires an exact constant or monomial divisor") {
    CHECK(P("(u^2-1)/(u-1)") == P("u+1"));
    CHECK(to_rat(parse_expression("3/4")) == Rat(3, 4));
    CHECK_THROWS_AS(P("(u+1)/(u-1)"), ParseError);
    CHECK_THROWS_AS(P("1/0"), ParseError);
}

TEST_CASE("laurent exponents round trip") {
    LaurentPoly<Rat> f = L("u^-2 + 3 + u");
    CHECK(f.coeff(-2) == Rat(1));
    CHECK(f.coeff(0) == Rat(3));
    CHECK_THROWS_AS(to_poly<Rat>(parse_expression("u^-1")), ParseError);
    CHECK(L("z^-1*(z+1)") == L("1 + u^-1"));
}

TEST_CASE("the series variable is exclusive") {
    CHECK_THROWS_AS(P("u + z"), ParseError);
    CHECK(P("z^2-z") == P("u^2-u"));
}

TEST_CASE("errors carry positions") {
    try {
        parse_expression("u + $");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.detail().at("position").get<long long>() == 4);
    }
    CHECK_THROWS_AS(parse_expression("(u+1"), ParseError);
    CHECK_THROWS_AS(parse_expression(""), ParseError);
    CHECK_THROWS_AS(parse_expression("u ** u"), ParseError);
}

TEST_CASE("rational function coefficients in p") {
    Poly<RatFunc> f = Pp("u^2 - p*u + p^-1");
    CHECK(f.coeff(1) == RatFunc(Poly<Rat>(0) - Poly<Rat>::var()));
    CHECK(f.coeff(0) == RatFunc(Poly<Rat>(1), Poly<Rat>::var()));
    RatFunc c = to_ratfunc(parse_expression("(p^2-1)/(p-1)"));
    CHECK(c == RatFunc(Poly<Rat>::var() + Poly<Rat>(1)));
}

TEST_CASE("multivariate parsing respects the ring layout") {
    Torus<Rat> t = make_torus<Rat>(true, {Rat(2), Rat(3)});
    MultiPoly<Rat> f = to_multipoly<Rat>(parse_expression("x1^2 + x2*x3^-1"), t);
    CHECK(f.dim() == 3);
    CHECK_FALSE(f.is_zero());
    CHECK_THROWS_AS(to_multipoly<Rat>(parse_expression("x1^-1"), t), ParseError);
    CHECK_THROWS_AS(to_multipoly<Rat>(parse_expression("x9"), t), ParseError);
    CHECK_THROWS_AS(to_multipoly<Rat>(parse_expression("1/(x2+1)"), t), ParseError);
    Torus<Rat> tb = make_torus<Rat>(false, {Rat(2)});
    CHECK_THROWS_AS(to_multipoly<Rat>(parse_expression("x1"), tb), ParseError);
}

TEST_CASE("printing and parsing are inverse on canonical forms") {
    for (const char* s : {"u^3 - 2*u + 5", "u^2 - 1/3*u", "1", "u"}) {
        Poly<Rat> f = P(s);
        CHECK(P(poly_str(f)) == f);
        CHECK(poly_str(P(poly_str(f))) == poly_str(f));
    }
    Poly<RatFunc> g = Pp("u^2 - (p^2+1)/(p-1)*u");
    CHECK(Pp(poly_str(g)) == g);
}

TEST_CASE("cycles serialize as index coefficient pairs") {
    Cycle G = C({{0, 1}, {1, -1}, {2, 1}});
    json j = cycle_to_json(G);
    CHECK(j == json::parse("[[0,1],[1,-1],[2,1]]"));
    CHECK(cycle_from_json(j) == G);
    CHECK(cycle_from_json(json::parse("[]")).is_zero());
    CHECK(cycle_str(G) == "Z0 - Z1 + Z2");
}
