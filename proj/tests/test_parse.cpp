#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "common.hpp"

using namespace octonode;
using tst::pp;

TEST_CASE("grammar examples") {
    auto Q4 = tst::qq_ring({"z0", "z1", "z2", "z3"});
    auto p = pp(Q4, "z0^2 - z1*z2");
    CHECK(p.nterms() == 2);
    CHECK(total_degree(p) == 2);

    auto C = tst::qq_ring({"x", "y", "z"});
    auto cubic = pp(C, "y^2*z - x^3 + x*z^2");
    CHECK(cubic.nterms() == 3);
    CHECK(total_degree(cubic) == 3);
    CHECK(is_homogeneous(cubic));

    CHECK(pp(Q4, "0").is_zero());
    CHECK(pp(Q4, "  z0 +0* z1  ") == pp(Q4, "z0"));
    CHECK(pp(Q4, "2*z0 - z0 - z0").is_zero());
    CHECK(pp(Q4, "-z0 + 1") == pp(Q4, "1 - z0"));  // lenient leading minus
    CHECK(pp(Q4, "3/2*z0*z0") == pp(Q4, "3/2*z0^2"));
}

TEST_CASE("parse errors carry positions") {
    auto R = tst::qq_ring({"x", "y"});
    CHECK_THROWS_AS(pp(R, "x + w"), ParseError);
    CHECK_THROWS_AS(pp(R, "x ++ y"), ParseError);
    CHECK_THROWS_AS(pp(R, ""), ParseError);
    CHECK_THROWS_AS(pp(R, "x^"), ParseError);
    CHECK_THROWS_AS(pp(R, "3*"), ParseError);
    try {
        pp(R, "x + w", 12);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line() == 12);
        CHECK(e.column() == 5);
    }
    auto F = tst::fp_ring({"x"}, 7);
    CHECK_THROWS_AS(pp(F, "1/7*x"), PreconditionError);  // denominator not representable
}

TEST_CASE("format then parse is the identity") {
    auto R = tst::fp_ring({"x", "y", "z"});
    for (int s = 0; s < 200; ++s) {
        auto p = tst::random_poly(R, 6, 8, s);
        CHECK(parse_polynomial(format_polynomial(p), R) == p);
    }
    auto Q = tst::qq_ring({"x", "y"});
    for (int s = 0; s < 200; ++s) {
        auto p = tst::random_poly(Q, 5, 6, 10000 + s);
        CHECK(parse_polynomial(format_polynomial(p), Q) == p);
    }
    CHECK(format_polynomial(poly_zero(Q)) == "0");
    CHECK(format_polynomial(pp(Q, "-x - 1/2")) == "-x - 1/2");
}
