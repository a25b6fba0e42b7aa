#ifndef OCTONODE_POLYNOMIAL_HPP
#define OCTONODE_POLYNOMIAL_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "octonode/monomial.hpp"
#include "octonode/ring.hpp"
#include "octonode/rng.hpp"

namespace octonode {

// Exact multivariate polynomial: a map from monomials to nonzero scalars,
// stored as parallel arrays sorted descending by a fixed storage order
// (plain grevlex). The zero polynomial has no terms. Storage order is
// independent of any Groebner order in play, so equality and printing are
// canonical. Immutable in practice: all operations return new values.
template <class F>
class Poly {
public:
    using Elem = typename F::Elem;

    Poly() = default;
    explicit Poly(Ring<F> ring) : ring_(std::move(ring)) {}

    static Poly from_terms(Ring<F> ring, std::vector<std::pair<Mono, Elem>> terms) {
        const auto& field = ring->field;
        std::sort(terms.begin(), terms.end(),
                  [](const auto& a, const auto& b) { return MonoStoreLess{}(a.first, b.first); });
        Poly p(std::move(ring));
        for (auto& [m, c] : terms) {
            if (!p.monos_.empty() && p.monos_.back() == m) {
                p.coeffs_.back() = field.add(p.coeffs_.back(), c);
                if (field.is_zero(p.coeffs_.back())) {
                    p.monos_.pop_back();
                    p.coeffs_.pop_back();
                }
            } else if (!field.is_zero(c)) {
                p.monos_.push_back(m);
                p.coeffs_.push_back(c);
            }
        }
        return p;
    }

    const Ring<F>& ring() const { return ring_; }
    bool is_zero() const { return monos_.empty(); }
    std::size_t nterms() const { return monos_.size(); }
    std::span<const Mono> monos() const { return monos_; }
    std::span<const Elem> coeffs() const { return coeffs_; }
    Mono mono(std::size_t i) const { return monos_[i]; }
    const Elem& coeff(std::size_t i) const { return coeffs_[i]; }

    bool operator==(const Poly& o) const {
        if (monos_ != o.monos_ || monos_.size() != o.monos_.size()) return false;
        const auto& field = ring_->field;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!field.equal(coeffs_[i], o.coeffs_[i])) return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // raw append in storage order; internal builder for merges
    void push_term_unchecked(Mono m, Elem c) {
        monos_.push_back(m);
        coeffs_.push_back(std::move(c));
    }

private:
    Ring<F> ring_;
    std::vector<Mono> monos_;
    std::vector<Elem> coeffs_;
};

template <class F>
Poly<F> poly_zero(const Ring<F>& ring) {
    return Poly<F>(ring);
}

template <class F>
Poly<F> poly_const(const Ring<F>& ring, typename F::Elem c) {
    Poly<F> p(ring);
    if (!ring->field.is_zero(c)) p.push_term_unchecked(mono_one(), std::move(c));
    return p;
}

template <class F>
Poly<F> poly_one(const Ring<F>& ring) {
    return poly_const(ring, ring->field.one());
}

template <class F>
Poly<F> poly_var(const Ring<F>& ring, unsigned var, unsigned exp = 1) {
    Poly<F> p(ring);
    if (exp == 0) return poly_one(ring);
    p.push_term_unchecked(mono_var(var, exp), ring->field.one());
    return p;
}

template <class F>
Poly<F> add(const Poly<F>& a, const Poly<F>& b) {
    require_same_ring(a.ring(), b.ring());
    const auto& field = a.ring()->field;
    Poly<F> r(a.ring());
    std::size_t i = 0, j = 0;
    while (i < a.nterms() && j < b.nterms()) {
        int c = mono_cmp_grevlex(a.mono(i), b.mono(j));
        if (c > 0) {
            r.push_term_unchecked(a.mono(i), a.coeff(i));
            ++i;
        } else if (c < 0) {
            r.push_term_unchecked(b.mono(j), b.coeff(j));
            ++j;
        } else {
            auto s = field.add(a.coeff(i), b.coeff(j));
            if (!field.is_zero(s)) r.push_term_unchecked(a.mono(i), std::move(s));
            ++i;
            ++j;
        }
    }
    for (; i < a.nterms(); ++i) r.push_term_unchecked(a.mono(i), a.coeff(i));
    for (; j < b.nterms(); ++j) r.push_term_unchecked(b.mono(j), b.coeff(j));
    return r;
}

template <class F>
Poly<F> neg(const Poly<F>& a) {
    const auto& field = a.ring()->field;
    Poly<F> r(a.ring());
    for (std::size_t i = 0; i < a.nterms(); ++i)
        r.push_term_unchecked(a.mono(i), field.neg(a.coeff(i)));
    return r;
}

template <class F>
Poly<F> sub(const Poly<F>& a, const Poly<F>& b) {
    return add(a, neg(b));
}

template <class F>
Poly<F> scalar_mul(const typename F::Elem& c, const Poly<F>& a) {
    const auto& field = a.ring()->field;
    Poly<F> r(a.ring());
    if (field.is_zero(c)) return r;
    for (std::size_t i = 0; i < a.nterms(); ++i)
        r.push_term_unchecked(a.mono(i), field.mul(c, a.coeff(i)));
    return r;
}

template <class F>
Poly<F> mono_mul_poly(Mono m, const Poly<F>& a) {
    Poly<F> r(a.ring());
    for (std::size_t i = 0; i < a.nterms(); ++i)
        r.push_term_unchecked(mono_mul(m, a.mono(i)), a.coeff(i));
    return r;
}

template <class F>
Poly<F> mul(const Poly<F>& a, const Poly<F>& b) {
    require_same_ring(a.ring(), b.ring());
    const auto& field = a.ring()->field;
    std::vector<std::pair<Mono, typename F::Elem>> acc;
    acc.reserve(a.nterms() * b.nterms());
    for (std::size_t i = 0; i < a.nterms(); ++i)
        for (std::size_t j = 0; j < b.nterms(); ++j)
            acc.emplace_back(mono_mul(a.mono(i), b.mono(j)),
                             field.mul(a.coeff(i), b.coeff(j)));
    return Poly<F>::from_terms(a.ring(), std::move(acc));
}

template <class F>
int total_degree(const Poly<F>& p) {  // -1 for the zero polynomial
    int d = -1;
    for (auto m : p.monos()) d = std::max(d, static_cast<int>(mono_degree(m)));
    return d;
}

template <class F>
bool is_homogeneous(const Poly<F>& p) {  // w.r.t. the ring's weights
    if (p.is_zero()) return true;
    std::uint32_t d = mono_wdeg(*p.ring(), p.mono(0));
    for (auto m : p.monos())
        if (mono_wdeg(*p.ring(), m) != d) return false;
    return true;
}

// Formal partial derivative. Over F_p a term whose exponent is divisible by p
// drops out, as it must.
template <class F>
Poly<F> partial_derivative(const Poly<F>& p, unsigned var) {
    if (var >= p.ring()->nvars()) throw PreconditionError("derivative: bad variable index");
    const auto& field = p.ring()->field;
    std::vector<std::pair<Mono, typename F::Elem>> acc;
    for (std::size_t i = 0; i < p.nterms(); ++i) {
        unsigned e = mono_exponent(p.mono(i), var);
        if (e == 0) continue;
        auto c = field.mul(p.coeff(i), field.from_int(static_cast<std::int64_t>(e)));
        if (field.is_zero(c)) continue;
        Mono m = p.mono(i);
        m.v -= static_cast<std::uint64_t>(1) << (8 * (7 - var));
        acc.emplace_back(m, std::move(c));
    }
    return Poly<F>::from_terms(p.ring(), std::move(acc));
}

template <class F>
typename F::Elem elem_pow(const F& field, typename F::Elem base, unsigned e) {
    auto r = field.one();
    while (e) {
        if (e & 1) r = field.mul(r, base);
        base = field.mul(base, base);
        e >>= 1;
    }
    return r;
}

template <class F>
typename F::Elem evaluate(const Poly<F>& p, std::span<const typename F::Elem> point) {
    if (point.size() != p.ring()->nvars())
        throw PreconditionError("evaluate: point length must equal number of variables");
    const auto& field = p.ring()->field;
    auto total = field.zero();
    for (std::size_t i = 0; i < p.nterms(); ++i) {
        auto term = p.coeff(i);
        for (unsigned v = 0; v < point.size(); ++v) {
            unsigned e = mono_exponent(p.mono(i), v);
            if (e) term = field.mul(term, elem_pow(field, point[v], e));
        }
        total = field.add(total, term);
    }
    return total;
}

// Enumerate all monomials of exact standard degree d in nv variables,
// in a fixed recursive order.
inline void enumerate_degree(unsigned nv, unsigned d, const std::function<void(Mono)>& fn) {
    std::array<unsigned, kMaxVars> exps{};
    auto rec = [&](auto&& self, unsigned var, unsigned rem) -> void {
        if (var + 1 == nv) {
            exps[var] = rem;
            fn(mono_make(std::span<const unsigned>(exps.data(), nv)));
            return;
        }
        for (unsigned e = 0; e <= rem; ++e) {
            exps[var] = e;
            self(self, var + 1, rem - e);
        }
    };
    rec(rec, 0, d);
}

// Enumerate all monomials of exact weighted degree d.
inline void enumerate_wdeg(std::span<const std::uint32_t> weights, std::uint32_t d,
                           const std::function<void(Mono)>& fn) {
    unsigned nv = static_cast<unsigned>(weights.size());
    std::array<unsigned, kMaxVars> exps{};
    auto rec = [&](auto&& self, unsigned var, std::uint32_t rem) -> void {
        if (var + 1 == nv) {
            if (rem % weights[var] == 0 && rem / weights[var] <= kMaxExponent) {
                exps[var] = rem / weights[var];
                fn(mono_make(std::span<const unsigned>(exps.data(), nv)));
            }
            return;
        }
        for (unsigned e = 0; static_cast<std::uint64_t>(e) * weights[var] <= rem && e <= kMaxExponent; ++e) {
            exps[var] = e;
            self(self, var + 1, rem - e * weights[var]);
        }
    };
    rec(rec, 0, d);
}

// Dense random homogeneous form: every monomial of the given degree receives
// an independently drawn coefficient (zero allowed). Deterministic in seed.
template <class F>
Poly<F> random_homogeneous(const Ring<F>& ring, unsigned degree, std::uint64_t seed) {
    if (ring->field.characteristic() == 0)
        throw PreconditionError("random_homogeneous requires a prime field context");
    if (!ring->standard_graded())
        throw PreconditionError("random_homogeneous requires a standard graded ring");
    SplitMix64 rng(derive_seed(seed, 0x72616e64));
    std::vector<std::pair<Mono, typename F::Elem>> acc;
    enumerate_degree(ring->nvars(), degree, [&](Mono m) {
        acc.emplace_back(m, ring->field.random(rng));
    });
    return Poly<F>::from_terms(ring, std::move(acc));
}

// ---- ring surgery -------------------------------------------------------

// Map a polynomial into a ring with `count` fresh variables inserted at the
// front (existing variable i becomes i+count).
template <class F>
Poly<F> lift_front(const Poly<F>& p, const Ring<F>& target, unsigned count) {
    Poly<F> r(target);
    for (std::size_t i = 0; i < p.nterms(); ++i)
        r.push_term_unchecked(Mono{p.mono(i).v >> (8 * count)}, p.coeff(i));
    return r;  // storage order is preserved by a uniform shift
}

// Map into a ring with fresh variables appended at the back (indices keep).
template <class F>
Poly<F> lift_back(const Poly<F>& p, const Ring<F>& target) {
    Poly<F> r(target);
    for (std::size_t i = 0; i < p.nterms(); ++i) r.push_term_unchecked(p.mono(i), p.coeff(i));
    return r;
}

inline Mono mono_erase_var(Mono m, unsigned var) {
    std::uint64_t low_bits = 8ull * (7 - var);
    std::uint64_t high = var == 0 ? 0 : (m.v & ~((1ull << (low_bits + 8)) - 1));
    std::uint64_t low = m.v & ((1ull << low_bits) - 1);
    return Mono{high | (low << 8)};
}

// Substitute var := 1 and drop it from the ring.
template <class F>
Poly<F> dehomogenize(const Poly<F>& p, unsigned var, const Ring<F>& target) {
    std::vector<std::pair<Mono, typename F::Elem>> acc;
    acc.reserve(p.nterms());
    for (std::size_t i = 0; i < p.nterms(); ++i)
        acc.emplace_back(mono_erase_var(p.mono(i), var), p.coeff(i));
    return Poly<F>::from_terms(target, std::move(acc));
}

// Keep only terms free of the first `count` variables and drop those
// variables (the elimination projection).
template <class F>
Poly<F> project_front(const Poly<F>& p, unsigned count, const Ring<F>& target) {
    std::vector<std::pair<Mono, typename F::Elem>> acc;
    for (std::size_t i = 0; i < p.nterms(); ++i) {
        Mono m = p.mono(i);
        bool free = true;
        for (unsigned v = 0; v < count && free; ++v) free = mono_exponent(m, v) == 0;
        if (free) acc.emplace_back(Mono{m.v << (8 * count)}, p.coeff(i));
    }
    return Poly<F>::from_terms(target, std::move(acc));
}

template <class F>
bool uses_only_last_vars(const Poly<F>& p, unsigned count) {
    for (auto m : p.monos())
        for (unsigned v = 0; v < count; ++v)
            if (mono_exponent(m, v) != 0) return false;
    return true;
}

template <class F>
Poly<F> permute_vars(const Poly<F>& p, std::span<const unsigned> perm, const Ring<F>& target) {
    unsigned nv = p.ring()->nvars();
    std::vector<std::pair<Mono, typename F::Elem>> acc;
    acc.reserve(p.nterms());
    for (std::size_t i = 0; i < p.nterms(); ++i) {
        std::array<unsigned, kMaxVars> exps{};
        for (unsigned v = 0; v < nv; ++v) exps[perm[v]] = mono_exponent(p.mono(i), v);
        acc.emplace_back(mono_make(std::span<const unsigned>(exps.data(), nv)), p.coeff(i));
    }
    return Poly<F>::from_terms(target, std::move(acc));
}

// General substitution: variable i := images[i], result in the images' ring.
template <class F>
Poly<F> substitute(const Poly<F>& p, const std::vector<Poly<F>>& images) {
    if (images.size() != p.ring()->nvars())
        throw PreconditionError("substitute: one image per variable required");
    const Ring<F>& target = images.empty() ? p.ring() : images[0].ring();
    for (const auto& im : images) require_same_ring(im.ring(), target);
    std::vector<std::vector<Poly<F>>> powers(images.size());
    for (std::size_t v = 0; v < images.size(); ++v) powers[v].push_back(poly_one(target));
    auto power = [&](unsigned v, unsigned e) -> const Poly<F>& {
        auto& pw = powers[v];
        while (pw.size() <= e) pw.push_back(mul(pw.back(), images[v]));
        return pw[e];
    };
    Poly<F> total(target);
    for (std::size_t i = 0; i < p.nterms(); ++i) {
        Poly<F> term = poly_const(target, p.coeff(i));
        for (unsigned v = 0; v < images.size(); ++v) {
            unsigned e = mono_exponent(p.mono(i), v);
            if (e) term = mul(term, power(v, e));
        }
        total = add(total, term);
    }
    return total;
}

// Invertible linear change of coordinates z_i := sum_j M[i][j] z_j.
template <class F>
Poly<F> apply_linear(const Poly<F>& p, const std::vector<std::vector<typename F::Elem>>& M) {
    unsigned nv = p.ring()->nvars();
    std::vector<Poly<F>> images;
    images.reserve(nv);
    for (unsigned i = 0; i < nv; ++i) {
        std::vector<std::pair<Mono, typename F::Elem>> row;
        for (unsigned j = 0; j < nv; ++j)
            if (!p.ring()->field.is_zero(M[i][j])) row.emplace_back(mono_var(j), M[i][j]);
        images.push_back(Poly<F>::from_terms(p.ring(), std::move(row)));
    }
    return substitute(p, images);
}

}  // namespace octonode

#endif
