#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>

#include "common.hpp"

using namespace octonode;

namespace {

// naive reference comparators on exponent vectors
int naive_grevlex(const std::array<unsigned, 8>& a, const std::array<unsigned, 8>& b, unsigned nv) {
    unsigned da = 0, db = 0;
    for (unsigned i = 0; i < nv; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (int i = static_cast<int>(nv) - 1; i >= 0; --i) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

int naive_lex(const std::array<unsigned, 8>& a, const std::array<unsigned, 8>& b, unsigned nv) {
    for (unsigned i = 0; i < nv; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
}

std::array<unsigned, 8> exps_of(Mono m, unsigned nv) {
    std::array<unsigned, 8> e{};
    for (unsigned i = 0; i < nv; ++i) e[i] = mono_exponent(m, i);
    return e;
}

}  // namespace

TEST_CASE("packed monomial basics") {
    std::array<unsigned, 3> e{2, 0, 1};
    Mono m = mono_make(std::span<const unsigned>(e.data(), 3));
    CHECK(mono_exponent(m, 0) == 2);
    CHECK(mono_exponent(m, 1) == 0);
    CHECK(mono_exponent(m, 2) == 1);
    CHECK(mono_degree(m) == 3);
    Mono x = mono_var(0), z = mono_var(2);
    CHECK(mono_divides(x, m));
    CHECK(!mono_divides(mono_var(1), m));
    CHECK(mono_mul(x, z).v == mono_make(std::array<unsigned, 3>{1, 0, 1}).v);
    CHECK(mono_div(m, x).v == mono_make(std::array<unsigned, 3>{1, 0, 1}).v);
    CHECK(mono_lcm(mono_var(0, 2), mono_var(1, 3)).v ==
          mono_make(std::array<unsigned, 3>{2, 3, 0}).v);
}

TEST_CASE("packed comparators agree with naive exponent-vector comparators") {
    SplitMix64 rng(11);
    for (unsigned nv = 1; nv <= 8; ++nv) {
        for (int trial = 0; trial < 400; ++trial) {
            Mono a = tst::random_mono(nv, 9, rng);
            Mono b = tst::random_mono(nv, 9, rng);
            auto ea = exps_of(a, nv), eb = exps_of(b, nv);
            CHECK(mono_cmp_grevlex(a, b) == naive_grevlex(ea, eb, nv));
            CHECK(mono_cmp_lex(a, b) == naive_lex(ea, eb, nv));
        }
    }
}

TEST_CASE("order laws: totality, multiplicativity, divisibility refinement") {
    auto ring = tst::fp_ring({"z0", "z1", "z2", "z3"});
    OrderCmp<FpField> grev{ring.get(), OrderSpec::grevlex()};
    OrderCmp<FpField> lex{ring.get(), OrderSpec::lex()};
    OrderCmp<FpField> elim{ring.get(), OrderSpec::elim(2)};
    SplitMix64 rng(23);
    for (const auto* ord : {&grev, &lex, &elim}) {
        for (int trial = 0; trial < 500; ++trial) {
            Mono a = tst::random_mono(4, 7, rng);
            Mono b = tst::random_mono(4, 7, rng);
            Mono k = tst::random_mono(4, 5, rng);
            int c = ord->cmp(a, b);
            CHECK(c == -ord->cmp(b, a));          // antisymmetry
            CHECK((c == 0) == (a == b));          // totality
            if (c != 0) {                          // multiplicativity
                CHECK(ord->cmp(mono_mul(a, k), mono_mul(b, k)) == c);
            }
            if (mono_divides(a, b) && !(a == b)) {  // refines divisibility
                CHECK(ord->cmp(a, b) < 0);
            }
            CHECK(ord->cmp(mono_one(), a) <= 0);  // 1 is minimal
        }
    }
}

TEST_CASE("elimination order: any monomial touching the first block wins") {
    auto ring = tst::fp_ring({"t", "x", "y", "z"});
    OrderCmp<FpField> elim{ring.get(), OrderSpec::elim(1)};
    SplitMix64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        Mono a = tst::random_mono(4, 6, rng);
        if (mono_exponent(a, 0) == 0) a = mono_mul(a, mono_var(0));
        Mono b = tst::random_mono(3, 9, rng);  // pure in x,y,z
        Mono b_shift{b.v >> 8};
        CHECK(elim.cmp(a, b_shift) > 0);
    }
}

TEST_CASE("order is a well-order on bounded-degree sets (min element is 1)") {
    auto ring = tst::fp_ring({"x", "y", "z"});
    for (auto spec : {OrderSpec::grevlex(), OrderSpec::lex(), OrderSpec::elim(1)}) {
        OrderCmp<FpField> ord{ring.get(), spec};
        std::vector<Mono> all;
        for (unsigned d = 0; d <= 5; ++d)
            enumerate_degree(3, d, [&](Mono m) { all.push_back(m); });
        Mono min = all[0];
        for (auto m : all)
            if (ord.cmp(m, min) < 0) min = m;
        CHECK(min == mono_one());
    }
}
