#ifndef OCTONODE_FIELD_HPP
#define OCTONODE_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "octonode/errors.hpp"
#include "octonode/rng.hpp"

namespace octonode {

// Coefficient field selector. Characteristics 2 and 3 are rejected at
// construction: the discriminant g^2 - 4fh implicitly divides by 2 and the
// A1 classification is characteristic-sensitive at small primes.
struct FieldSpec {
    enum class Kind { prime, rationals };

    Kind kind = Kind::rationals;
    std::uint32_t p = 0;  // only meaningful for Kind::prime

    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    static FieldSpec rationals() { return FieldSpec{Kind::rationals, 0}; }

    static FieldSpec prime(std::uint32_t p) {
        if (!is_prime(p))
            throw PreconditionError("field characteristic must be prime, got " +
                                    std::to_string(p));
        if (p < 5)
            throw PreconditionError(
                "characteristics 2 and 3 are not supported (p must be >= 5)");
        return FieldSpec{Kind::prime, p};
    }

    bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    std::string to_string() const {
        return kind == Kind::prime ? "fp:" + std::to_string(p) : "q";
    }
};

// Arithmetic in F_p for a word-sized prime. Elements are raw residues in
// [0, p); the modulus lives in the field object (reached through the ring
// context), not in every scalar.
class FpField {
public:
    using Elem = std::uint32_t;

    FpField() : p_(0) {}
    explicit FpField(const FieldSpec& spec) : p_(spec.p) {
        if (spec.kind != FieldSpec::Kind::prime)
            throw PreconditionError("FpField requires a prime field spec");
    }

    FieldSpec spec() const { return FieldSpec{FieldSpec::Kind::prime, p_}; }
    std::uint32_t characteristic() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }

    Elem add(Elem a, Elem b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
    }

    Elem inv(Elem a) const {
        if (a == 0) throw PreconditionError("division by zero in F_p");
        // extended Euclid on (a, p); p prime so gcd is 1
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = p_, new_r = a;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        if (t < 0) t += p_;
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem from_int(std::int64_t n) const {
        std::int64_t r = n % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<Elem>(r);
    }

    // a/b as read by the parser; b not invertible mod p is a representability error.
    Elem from_fraction(std::int64_t num, std::uint64_t den) const {
        Elem d = from_int(static_cast<std::int64_t>(den % p_));
        if (d == 0)
            throw PreconditionError("coefficient denominator " + std::to_string(den) +
                                    " is not invertible modulo " + std::to_string(p_));
        return mul(from_int(num), inv(d));
    }

    Elem random(SplitMix64& rng) const { return static_cast<Elem>(rng.below(p_)); }

    std::string to_string(Elem a) const { return std::to_string(a); }
    bool equal(Elem a, Elem b) const { return a == b; }
};

// Exact rationals (GMP). Reduced canonical fractions are maintained by
// mpq_class arithmetic; used for small hand-checkable inputs only.
class QQField {
public:
    using Elem = mpq_class;

    QQField() = default;
    explicit QQField(const FieldSpec& spec) {
        if (spec.kind != FieldSpec::Kind::rationals)
            throw PreconditionError("QQField requires the rationals field spec");
    }

    FieldSpec spec() const { return FieldSpec::rationals(); }
    std::uint32_t characteristic() const { return 0; }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        if (sgn(a) == 0) throw PreconditionError("division by zero in Q");
        return Elem(1) / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return a / inv_guard(b); }

    Elem from_int(std::int64_t n) const {
        Elem e;
        e = static_cast<long>(n);
        return e;
    }
    Elem from_fraction(std::int64_t num, std::uint64_t den) const {
        if (den == 0) throw PreconditionError("zero denominator");
        Elem e(static_cast<long>(num), static_cast<unsigned long>(den));
        e.canonicalize();
        return e;
    }

    Elem random(SplitMix64& rng) const {
        // small numerators keep hand-scale Q computations readable
        return from_int(static_cast<std::int64_t>(rng.below(2001)) - 1000);
    }

    std::string to_string(const Elem& a) const { return a.get_str(); }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }

private:
    const Elem& inv_guard(const Elem& b) const {
        if (sgn(b) == 0) throw PreconditionError("division by zero in Q");
        return b;
    }
};

}  // namespace octonode

#endif
