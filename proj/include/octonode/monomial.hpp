#ifndef OCTONODE_MONOMIAL_HPP
#define OCTONODE_MONOMIAL_HPP

#include <bit>
#include <cstdint>
#include <span>

#include "octonode/errors.hpp"

namespace octonode {

// Monomials are exponent vectors packed one byte per variable into a single
// word: variable 0 sits in the most significant byte. This caps rings at 8
// variables and single exponents at 255 — enough for P^3 pipelines, fiber
// charts, product rings and the auxiliary saturation variable, and it makes
// multiplication an integer add and lex comparison an integer compare.
inline constexpr unsigned kMaxVars = 8;
inline constexpr unsigned kMaxExponent = 255;

struct Mono {
    std::uint64_t v = 0;

    bool operator==(const Mono&) const = default;
};

inline unsigned mono_exponent(Mono m, unsigned var) {
    return static_cast<unsigned>((m.v >> (8 * (7 - var))) & 0xff);
}

inline Mono mono_make(std::span<const unsigned> exps) {
    Mono m;
    unsigned total = 0;
    for (unsigned i = 0; i < exps.size(); ++i) {
        if (exps[i] > kMaxExponent)
            throw ResourceError("monomial exponent exceeds 255");
        total += exps[i];
        m.v |= static_cast<std::uint64_t>(exps[i]) << (8 * (7 - i));
    }
    if (total > kMaxExponent)
        throw ResourceError("monomial degree exceeds 255");
    return m;
}

inline Mono mono_one() { return Mono{0}; }
inline bool mono_is_one(Mono m) { return m.v == 0; }

inline Mono mono_var(unsigned var, unsigned exp = 1) {
    Mono m;
    m.v = static_cast<std::uint64_t>(exp) << (8 * (7 - var));
    return m;
}

inline unsigned mono_degree(Mono m) {
    unsigned d = 0;
    for (unsigned i = 0; i < 8; ++i) d += static_cast<unsigned>((m.v >> (8 * i)) & 0xff);
    return d;
}

// Product. Valid whenever the result degree stays within the byte cap; the
// engine's degree budget enforces that globally, cheap check kept anyway.
inline Mono mono_mul(Mono a, Mono b) {
    Mono r{a.v + b.v};
    if (mono_degree(r) != mono_degree(a) + mono_degree(b))
        throw ResourceError("monomial exponent overflow in product");
    return r;
}

inline bool mono_divides(Mono a, Mono b) {  // a | b
    for (unsigned i = 0; i < 8; ++i) {
        if (((a.v >> (8 * i)) & 0xff) > ((b.v >> (8 * i)) & 0xff)) return false;
    }
    return true;
}

inline Mono mono_div(Mono a, Mono b) {  // a / b, requires b | a
    return Mono{a.v - b.v};
}

inline Mono mono_lcm(Mono a, Mono b) {
    Mono r;
    for (unsigned i = 0; i < 8; ++i) {
        std::uint64_t ea = (a.v >> (8 * i)) & 0xff, eb = (b.v >> (8 * i)) & 0xff;
        r.v |= (ea > eb ? ea : eb) << (8 * i);
    }
    return r;
}

inline Mono mono_gcd(Mono a, Mono b) {
    Mono r;
    for (unsigned i = 0; i < 8; ++i) {
        std::uint64_t ea = (a.v >> (8 * i)) & 0xff, eb = (b.v >> (8 * i)) & 0xff;
        r.v |= (ea < eb ? ea : eb) << (8 * i);
    }
    return r;
}

// Reverse-lex tie-break shared by the graded orders: on equal degree, the
// monomial whose lowest differing byte (= highest-index variable) is smaller
// is the larger one.
inline int mono_revlex_tie(Mono a, Mono b) {
    std::uint64_t x = a.v ^ b.v;
    if (x == 0) return 0;
    unsigned byte = static_cast<unsigned>(std::countr_zero(x)) / 8;
    std::uint64_t ea = (a.v >> (8 * byte)) & 0xff, eb = (b.v >> (8 * byte)) & 0xff;
    return ea < eb ? 1 : -1;
}

// Plain graded reverse lex on the standard (weight-1) grading.
// Returns >0 if a > b, 0 if equal, <0 if a < b.
inline int mono_cmp_grevlex(Mono a, Mono b) {
    unsigned da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da > db ? 1 : -1;
    return mono_revlex_tie(a, b);
}

inline int mono_cmp_lex(Mono a, Mono b) {
    if (a.v == b.v) return 0;
    return a.v > b.v ? 1 : -1;
}

// Canonical storage comparator for polynomial terms (descending grevlex).
struct MonoStoreLess {
    bool operator()(Mono a, Mono b) const { return mono_cmp_grevlex(a, b) > 0; }
};

}  // namespace octonode

#endif
