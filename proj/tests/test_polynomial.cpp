#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "common.hpp"

using namespace octonode;
using tst::pp;

TEST_CASE("arithmetic examples") {
    auto R = tst::qq_ring({"z0", "z1"});
    CHECK(mul(pp(R, "z0 + z1"), pp(R, "z0 - z1")) == pp(R, "z0^2 - z1^2"));
    auto p = pp(R, "3*z0^2 - 1/2*z1");
    CHECK(add(p, poly_zero(R)) == p);
    auto F7 = tst::fp_ring({"z0"}, 7);
    CHECK(add(pp(F7, "5*z0"), pp(F7, "4*z0")) == pp(F7, "2*z0"));
}

TEST_CASE("ring axioms on random inputs") {
    auto R = tst::fp_ring({"x", "y", "z"});
    for (int i = 0; i < 1000; ++i) {
        auto a = tst::random_poly(R, 4, 5, 3 * i);
        auto b = tst::random_poly(R, 4, 5, 3 * i + 1);
        auto c = tst::random_poly(R, 4, 5, 3 * i + 2);
        CHECK(add(a, b) == add(b, a));
        CHECK(mul(a, b) == mul(b, a));
        CHECK(add(add(a, b), c) == add(a, add(b, c)));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
        CHECK(sub(a, a).is_zero());
    }
    auto Q = tst::qq_ring({"x", "y"});
    for (int i = 0; i < 100; ++i) {
        auto a = tst::random_poly(Q, 3, 4, 7 * i);
        auto b = tst::random_poly(Q, 3, 4, 7 * i + 1);
        auto c = tst::random_poly(Q, 3, 4, 7 * i + 2);
        CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    }
}

TEST_CASE("mismatched ring contexts are rejected") {
    auto R1 = tst::fp_ring({"x", "y"});
    auto R2 = tst::fp_ring({"x", "z"});
    CHECK_THROWS_AS(add(pp(R1, "x"), pp(R2, "x")), PreconditionError);
}

TEST_CASE("partial derivative examples") {
    auto R = tst::qq_ring({"z0", "z1"});
    CHECK(partial_derivative(pp(R, "z0^2*z1"), 0) == pp(R, "2*z0*z1"));
    CHECK(partial_derivative(pp(R, "5"), 0).is_zero());
}

TEST_CASE("Euler relation for homogeneous polynomials") {
    auto R = tst::fp_ring({"z0", "z1", "z2", "z3"});
    const auto& f = R->field;
    for (unsigned d : {3u, 8u}) {
        for (int s = 0; s < 50; ++s) {
            auto p = random_homogeneous(R, d, 1000 * d + s);
            Poly<FpField> sum(R);
            for (unsigned v = 0; v < 4; ++v)
                sum = add(sum, mul(poly_var(R, v), partial_derivative(p, v)));
            CHECK(sum == scalar_mul(f.from_int(d), p));
        }
    }
}

TEST_CASE("evaluate: examples and naive-sum oracle") {
    auto Q = tst::qq_ring({"z0", "z1"});
    auto p = pp(Q, "z0^2 - z1");
    std::vector<mpq_class> pt{mpq_class(2), mpq_class(4)};
    CHECK(Q->field.is_zero(evaluate(p, std::span<const mpq_class>(pt))));

    auto C3 = tst::qq_ring({"x", "y", "z"});
    auto cubic = pp(C3, "y^2*z - x^3 + x*z^2");
    std::vector<mpq_class> flex{mpq_class(0), mpq_class(1), mpq_class(0)};
    CHECK(C3->field.is_zero(evaluate(cubic, std::span<const mpq_class>(flex))));

    // term-by-term oracle over F_p without the pow ladder
    auto R = tst::fp_ring({"x", "y", "z"});
    const auto& f = R->field;
    SplitMix64 rng(99);
    for (int s = 0; s < 100; ++s) {
        auto p8 = random_homogeneous(R, 8, 555 + s);
        std::vector<std::uint32_t> pt3{f.random(rng), f.random(rng), f.random(rng)};
        std::uint32_t naive = 0;
        for (std::size_t i = 0; i < p8.nterms(); ++i) {
            std::uint32_t t = p8.coeff(i);
            for (unsigned v = 0; v < 3; ++v)
                for (unsigned e = 0; e < mono_exponent(p8.mono(i), v); ++e) t = f.mul(t, pt3[v]);
            naive = f.add(naive, t);
        }
        CHECK(evaluate(p8, std::span<const std::uint32_t>(pt3)) == naive);
    }
}

TEST_CASE("random_homogeneous contract") {
    auto R = tst::fp_ring({"z0", "z1", "z2", "z3"});
    auto p = random_homogeneous(R, 4, 42);
    CHECK(p == random_homogeneous(R, 4, 42));  // deterministic in seed
    CHECK(p != random_homogeneous(R, 4, 43));
    CHECK(is_homogeneous(p));
    CHECK(total_degree(p) == 4);
    // 35 coefficient slots for quartics in 4 variables
    std::size_t slots = 0;
    enumerate_degree(4, 4, [&](Mono) { ++slots; });
    CHECK(slots == 35);
    auto c = random_homogeneous(R, 0, 7);
    CHECK(total_degree(c) <= 0);

    auto Q = tst::qq_ring({"x"});
    CHECK_THROWS_AS(random_homogeneous(Q, 2, 1), PreconditionError);
}

TEST_CASE("substitution and linear change of coordinates") {
    auto R = tst::qq_ring({"x", "y"});
    auto p = pp(R, "x^2 + y");
    // x := y, y := y  collapses to y^2 + y
    std::vector<Poly<QQField>> images{pp(R, "y"), pp(R, "y")};
    CHECK(substitute(p, images) == pp(R, "y^2 + y"));

    // invertible change x->x+y, y->y keeps degree and is undone by inverse
    std::vector<std::vector<mpq_class>> M{{1, 1}, {0, 1}};
    std::vector<std::vector<mpq_class>> Minv{{1, -1}, {0, 1}};
    auto q = apply_linear(p, M);
    CHECK(apply_linear(q, Minv) == p);
}

TEST_CASE("ring surgery: lift, dehomogenize, project") {
    auto R = tst::qq_ring({"x", "y"});
    auto Rt = tst::qq_ring({"t", "x", "y"});
    auto p = pp(R, "x^2 - y");
    auto lifted = lift_front(p, Rt, 1);
    CHECK(lifted == pp(Rt, "x^2 - y"));
    CHECK(uses_only_last_vars(lifted, 1));
    CHECK(project_front(pp(Rt, "x^2 - y + t*x"), 1, R) == pp(R, "x^2 - y"));

    auto Rsub = tst::qq_ring({"x"});
    CHECK(dehomogenize(pp(R, "x^2 - x*y"), 1, Rsub) == pp(Rsub, "x^2 - x"));
}
