#ifndef OCTONODE_GROEBNER_HPP
#define OCTONODE_GROEBNER_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "octonode/ideal.hpp"
#include "octonode/polynomial.hpp"

namespace octonode {

// Resource budget for one Groebner computation. Exceeding it throws
// ResourceError; there is no silent truncation.
struct GBBudget {
    std::uint64_t max_pairs = 2'000'000;   // S-pairs processed
    std::uint32_t max_degree = 150;        // standard degree of any lcm/monomial met
    std::uint64_t max_table = 1ull << 24;  // total monomial-table entries
};

namespace detail {

// Open-addressing map from packed monomials to slice positions. Build once,
// lookup-only afterwards. The all-ones key cannot occur (degree cap is 255).
class MonoIndex {
public:
    void build(const std::vector<Mono>& sorted) {
        std::size_t cap = 16;
        while (cap < sorted.size() * 2) cap <<= 1;
        mask_ = cap - 1;
        keys_.assign(cap, kEmpty);
        vals_.assign(cap, 0);
        for (std::uint32_t i = 0; i < sorted.size(); ++i) {
            std::size_t h = slot(sorted[i].v);
            while (keys_[h] != kEmpty) h = (h + 1) & mask_;
            keys_[h] = sorted[i].v;
            vals_[h] = i;
        }
    }

    std::uint32_t at(Mono m) const {
        std::size_t h = slot(m.v);
        while (true) {
            if (keys_[h] == m.v) return vals_[h];
            if (keys_[h] == kEmpty) throw PreconditionError("monomial missing from slice table");
            h = (h + 1) & mask_;
        }
    }

private:
    static constexpr std::uint64_t kEmpty = ~0ull;
    std::size_t slot(std::uint64_t x) const {
        x *= 0x9e3779b97f4a7c15ull;
        x ^= x >> 32;
        return x & mask_;
    }
    std::vector<std::uint64_t> keys_;
    std::vector<std::uint32_t> vals_;
    std::size_t mask_ = 0;
};

}  // namespace detail

// The working engine behind reduced_groebner_basis and normal_form.
//
// Reduction strategy: polynomials are spread over "buckets" (weighted degree
// for graded orders, block-degree pairs for elimination orders); each bucket
// has a finite slice of monomials sorted by the active order, and reduction
// walks a dense coefficient array down that slice. Orders without a finite
// bucket decomposition (lex) fall back to a sparse merge reducer.
template <class F>
class GBEngine {
public:
    using Elem = typename F::Elem;

    struct EPoly {  // terms sorted descending by the active order
        std::vector<Mono> m;
        std::vector<Elem> c;
        std::size_t size() const { return m.size(); }
        bool empty() const { return m.empty(); }
    };

    GBEngine(Ring<F> ring, OrderSpec ord, GBBudget budget)
        : ring_(std::move(ring)), ord_(ord), budget_(budget) {
        cmp_.ring = ring_.get();
        cmp_.ord = ord;
    }

    const OrderCmp<F>& cmp() const { return cmp_; }

    EPoly to_engine(const Poly<F>& p) const {
        EPoly e;
        std::vector<std::uint32_t> idx(p.nterms());
        for (std::uint32_t i = 0; i < p.nterms(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
            return cmp_.greater(p.mono(a), p.mono(b));
        });
        e.m.reserve(p.nterms());
        e.c.reserve(p.nterms());
        for (auto i : idx) {
            e.m.push_back(p.mono(i));
            e.c.push_back(p.coeff(i));
        }
        return e;
    }

    Poly<F> to_poly(const EPoly& e) const {
        std::vector<std::pair<Mono, Elem>> terms;
        terms.reserve(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) terms.emplace_back(e.m[i], e.c[i]);
        return Poly<F>::from_terms(ring_, std::move(terms));
    }

    // ---- basis management ------------------------------------------------

    std::size_t basis_size() const { return basis_.size(); }
    const EPoly& basis_poly(std::size_t i) const { return basis_[i].p; }
    Mono basis_lead(std::size_t i) const { return basis_[i].lt; }

    void set_reducers(const std::vector<Poly<F>>& polys) {
        basis_.clear();
        for (const auto& p : polys)
            if (!p.is_zero()) append_monic(to_engine(p));
    }

    // Full normal form against the current basis.
    EPoly reduce(std::vector<std::pair<Mono, Elem>> terms) {
        if (cmp_.bucket_major()) return reduce_dense(std::move(terms));
        return reduce_sparse(std::move(terms));
    }

    EPoly reduce(const EPoly& e) {
        std::vector<std::pair<Mono, Elem>> terms;
        terms.reserve(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) terms.emplace_back(e.m[i], e.c[i]);
        return reduce(std::move(terms));
    }

    // ---- Buchberger --------------------------------------------------------

    // Runs Buchberger with the product and chain criteria, normal selection
    // strategy (pairs by increasing lcm degree, ties by order on the lcm),
    // then autoreduces. Deterministic for fixed input.
    GroebnerBasis<F> run(const std::vector<Poly<F>>& gens_in) {
        basis_.clear();
        pairs_.clear();
        done_.clear();
        unit_ = false;

        // canonical input processing: monic, sorted, interreduced on entry
        std::vector<EPoly> gens;
        for (const auto& g : gens_in)
            if (!g.is_zero()) gens.push_back(to_engine(g));
        std::sort(gens.begin(), gens.end(), [&](const EPoly& a, const EPoly& b) {
            if (a.m[0] != b.m[0]) return cmp_.greater(b.m[0], a.m[0]);
            return lexical_less(a, b);
        });
        for (auto& g : gens) {
            if (unit_) break;
            EPoly r = reduce(g);
            if (!r.empty()) add_element(std::move(r));
        }

        std::uint64_t processed = 0;
        while (!pairs_.empty() && !unit_) {
            PairKey pk = *pairs_.begin();
            pairs_.erase(pairs_.begin());
            mark_done(pk.i, pk.j);
            if (++processed > budget_.max_pairs)
                throw ResourceError("S-pair budget exceeded (" +
                                    std::to_string(budget_.max_pairs) + ")");
            if (product_criterion(pk) || chain_criterion(pk)) continue;
            EPoly s = s_poly(pk);
            EPoly r = reduce(s);
            if (!r.empty()) add_element(std::move(r));
        }

        return autoreduce();
    }

    bool lexical_less(const EPoly& a, const EPoly& b) const {
        std::size_t n = std::min(a.size(), b.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (a.m[i] != b.m[i]) return cmp_.less(a.m[i], b.m[i]);
        }
        return a.size() < b.size();
    }

private:
    struct BElem {
        EPoly p;
        Mono lt;
        std::uint32_t lt_deg;
    };

    struct PairKey {
        std::uint64_t bucket;
        Mono lcm;
        std::uint32_t i, j;
    };
    struct PairLess {
        const OrderCmp<F>* cmp;
        bool operator()(const PairKey& a, const PairKey& b) const {
            if (a.bucket != b.bucket) return a.bucket < b.bucket;
            int c = cmp->cmp(a.lcm, b.lcm);
            if (c != 0) return c < 0;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        }
    };

    struct Bucket {
        std::vector<Mono> monos;  // sorted descending by the active order
        detail::MonoIndex index;
    };

    struct BucketWS {
        std::vector<Elem> val;
        std::vector<std::uint8_t> queued;
        std::vector<std::uint32_t> heap;
        std::vector<std::uint32_t> touched;
    };

    Ring<F> ring_;
    OrderSpec ord_;
    GBBudget budget_;
    OrderCmp<F> cmp_;
    std::vector<BElem> basis_;
    std::set<PairKey, PairLess> pairs_{PairLess{&cmp_}};
    std::unordered_set<std::uint64_t> done_;
    std::map<std::uint64_t, Bucket> buckets_;
    std::map<std::uint64_t, BucketWS> ws_;
    std::uint64_t table_entries_ = 0;
    bool unit_ = false;

    // ---- pair bookkeeping --------------------------------------------------

    static std::uint64_t pair_id(std::uint32_t i, std::uint32_t j) {
        return (static_cast<std::uint64_t>(i) << 32) | j;
    }
    void mark_done(std::uint32_t i, std::uint32_t j) { done_.insert(pair_id(i, j)); }
    bool is_done(std::uint32_t i, std::uint32_t j) const {
        if (i > j) std::swap(i, j);
        return done_.count(pair_id(i, j)) != 0;
    }

    bool product_criterion(const PairKey& pk) const {
        Mono prod{basis_[pk.i].lt.v + basis_[pk.j].lt.v};
        return prod == pk.lcm;  // coprime leading monomials
    }

    // Buchberger's chain criterion: skip (i,j) when some lt_k divides the lcm
    // and both (i,k) and (j,k) were already handled.
    bool chain_criterion(const PairKey& pk) const {
        for (std::uint32_t k = 0; k < basis_.size(); ++k) {
            if (k == pk.i || k == pk.j) continue;
            if (!mono_divides(basis_[k].lt, pk.lcm)) continue;
            if (is_done(pk.i, k) && is_done(pk.j, k)) return true;
        }
        return false;
    }

    EPoly s_poly(const PairKey& pk) {
        const BElem& a = basis_[pk.i];
        const BElem& b = basis_[pk.j];
        Mono qa = mono_div(pk.lcm, a.lt);
        Mono qb = mono_div(pk.lcm, b.lt);
        const auto& field = ring_->field;
        EPoly s;
        s.m.reserve(a.p.size() + b.p.size());
        s.c.reserve(a.p.size() + b.p.size());
        for (std::size_t t = 0; t < a.p.size(); ++t) {
            s.m.push_back(mono_mul(qa, a.p.m[t]));
            s.c.push_back(a.p.c[t]);
        }
        for (std::size_t t = 0; t < b.p.size(); ++t) {
            s.m.push_back(mono_mul(qb, b.p.m[t]));
            s.c.push_back(field.neg(b.p.c[t]));
        }
        return s;  // unsorted with cancelling leads; the reducer accumulates
    }

    void append_monic(EPoly e) {
        const auto& field = ring_->field;
        Elem lc = e.c[0];
        if (!field.equal(lc, field.one())) {
            Elem ilc = field.inv(lc);
            for (auto& c : e.c) c = field.mul(ilc, c);
        }
        BElem be;
        be.lt = e.m[0];
        be.lt_deg = mono_degree(e.m[0]);
        be.p = std::move(e);
        basis_.push_back(std::move(be));
    }

    void add_element(EPoly e) {
        if (mono_is_one(e.m[0])) unit_ = true;
        append_monic(std::move(e));
        std::uint32_t n = static_cast<std::uint32_t>(basis_.size()) - 1;
        if (unit_) return;
        for (std::uint32_t i = 0; i < n; ++i) {
            Mono l = mono_lcm(basis_[i].lt, basis_[n].lt);
            if (mono_degree(l) > budget_.max_degree)
                throw ResourceError("degree budget exceeded at " +
                                    std::to_string(mono_degree(l)));
            pairs_.insert(PairKey{cmp_.bucket(l), l, i, n});
        }
    }

    // ---- dense bucket reducer ----------------------------------------------

    Bucket& bucket(std::uint64_t key, Mono witness) {
        auto it = buckets_.find(key);
        if (it != buckets_.end()) return it->second;
        if (mono_degree(witness) > budget_.max_degree)
            throw ResourceError("degree budget exceeded at degree " +
                                std::to_string(mono_degree(witness)));
        Bucket b;
        enumerate_bucket(key, [&](Mono m) { b.monos.push_back(m); });
        std::sort(b.monos.begin(), b.monos.end(),
                  [&](Mono x, Mono y) { return cmp_.greater(x, y); });
        table_entries_ += b.monos.size();
        if (table_entries_ > budget_.max_table)
            throw ResourceError("monomial table budget exceeded");
        b.index.build(b.monos);
        return buckets_.emplace(key, std::move(b)).first->second;
    }

    void enumerate_bucket(std::uint64_t key, const std::function<void(Mono)>& fn) const {
        unsigned nv = ring_->nvars();
        if (ord_.kind == OrderSpec::Kind::elim) {
            unsigned k = ord_.block;
            std::uint32_t d1 = static_cast<std::uint32_t>(key >> 20);
            std::uint32_t d2 = static_cast<std::uint32_t>(key & 0xfffff);
            std::span<const std::uint32_t> w(ring_->weights);
            enumerate_wdeg(w.subspan(0, k), d1, [&](Mono m1) {
                enumerate_wdeg(w.subspan(k, nv - k), d2, [&](Mono m2) {
                    fn(Mono{m1.v | (m2.v >> (8 * k))});
                });
            });
        } else {
            enumerate_wdeg(std::span<const std::uint32_t>(ring_->weights),
                           static_cast<std::uint32_t>(key), fn);
        }
    }

    BucketWS& workspace(std::uint64_t key, const Bucket& b) {
        BucketWS& w = ws_[key];
        if (w.val.size() != b.monos.size()) {
            w.val.assign(b.monos.size(), ring_->field.zero());
            w.queued.assign(b.monos.size(), 0);
        }
        return w;
    }

    // first basis element whose lead divides m (insertion order; the final
    // autoreduction makes the output independent of this choice)
    int find_reducer(Mono m, std::uint32_t mdeg) const {
        for (std::uint32_t i = 0; i < basis_.size(); ++i) {
            if (basis_[i].lt_deg > mdeg) continue;
            if (mono_divides(basis_[i].lt, m)) return static_cast<int>(i);
        }
        return -1;
    }

    EPoly reduce_dense(std::vector<std::pair<Mono, Elem>> terms) {
        const auto& field = ring_->field;
        std::set<std::uint64_t, std::greater<std::uint64_t>> active;

        auto deposit = [&](Mono m, const Elem& c) {
            std::uint64_t key = cmp_.bucket(m);
            Bucket& b = bucket(key, m);
            BucketWS& w = workspace(key, b);
            std::uint32_t idx = b.index.at(m);
            if (!w.queued[idx]) {
                w.queued[idx] = 1;
                w.heap.push_back(idx);
                std::push_heap(w.heap.begin(), w.heap.end(), std::greater<std::uint32_t>{});
                w.touched.push_back(idx);
                w.val[idx] = c;
                active.insert(key);
            } else {
                w.val[idx] = field.add(w.val[idx], c);
            }
        };

        for (auto& [m, c] : terms) deposit(m, c);

        EPoly out;
        while (!active.empty()) {
            std::uint64_t key = *active.begin();
            active.erase(active.begin());
            Bucket& b = bucket(key, mono_one());
            BucketWS& w = workspace(key, b);
            while (!w.heap.empty()) {
                std::pop_heap(w.heap.begin(), w.heap.end(), std::greater<std::uint32_t>{});
                std::uint32_t idx = w.heap.back();
                w.heap.pop_back();
                Elem v = w.val[idx];
                if (field.is_zero(v)) continue;
                Mono m = b.monos[idx];
                int red = find_reducer(m, mono_degree(m));
                if (red < 0) {
                    out.m.push_back(m);
                    out.c.push_back(v);
                    w.val[idx] = field.zero();
                    continue;
                }
                w.val[idx] = field.zero();
                const EPoly& g = basis_[static_cast<std::size_t>(red)].p;
                Mono q = mono_div(m, basis_[static_cast<std::size_t>(red)].lt);
                for (std::size_t t = 1; t < g.size(); ++t) {
                    Mono mt = mono_mul(q, g.m[t]);
                    Elem delta = field.neg(field.mul(v, g.c[t]));
                    std::uint64_t k2 = cmp_.bucket(mt);
                    if (k2 == key) {
                        std::uint32_t i2 = b.index.at(mt);
                        if (!w.queued[i2]) {
                            w.queued[i2] = 1;
                            w.heap.push_back(i2);
                            std::push_heap(w.heap.begin(), w.heap.end(),
                                           std::greater<std::uint32_t>{});
                            w.touched.push_back(i2);
                            w.val[i2] = delta;
                        } else {
                            w.val[i2] = field.add(w.val[i2], delta);
                        }
                    } else {
                        deposit(mt, delta);
                    }
                }
            }
            for (auto idx : w.touched) {
                w.val[idx] = field.zero();
                w.queued[idx] = 0;
            }
            w.touched.clear();
            w.heap.clear();
        }
        return out;
    }

    // ---- sparse fallback (lex and other non-bucketed orders) ---------------

    EPoly reduce_sparse(std::vector<std::pair<Mono, Elem>> terms) {
        const auto& field = ring_->field;
        std::sort(terms.begin(), terms.end(),
                  [&](const auto& a, const auto& b) { return cmp_.greater(a.first, b.first); });
        EPoly p;  // working tail, descending
        for (auto& [m, c] : terms) {
            if (!p.m.empty() && p.m.back() == m) {
                p.c.back() = field.add(p.c.back(), c);
                if (field.is_zero(p.c.back())) {
                    p.m.pop_back();
                    p.c.pop_back();
                }
            } else if (!field.is_zero(c)) {
                p.m.push_back(m);
                p.c.push_back(c);
            }
        }
        EPoly out;
        std::size_t guard = 0;
        while (!p.empty()) {
            if (++guard > 4'000'000) throw ResourceError("sparse reduction step budget exceeded");
            Mono m = p.m.front();
            Elem v = p.c.front();
            int red = find_reducer(m, mono_degree(m));
            if (red < 0) {
                out.m.push_back(m);
                out.c.push_back(v);
                p.m.erase(p.m.begin());
                p.c.erase(p.c.begin());
                continue;
            }
            const EPoly& g = basis_[static_cast<std::size_t>(red)].p;
            Mono q = mono_div(m, basis_[static_cast<std::size_t>(red)].lt);
            // p -= v * q * g  (merge, leading terms cancel)
            EPoly next;
            next.m.reserve(p.size() + g.size());
            next.c.reserve(p.size() + g.size());
            std::size_t i = 1, j = 1;  // 0-th terms cancel exactly
            while (i < p.size() || j < g.size()) {
                if (j >= g.size()) {
                    next.m.push_back(p.m[i]);
                    next.c.push_back(p.c[i]);
                    ++i;
                    continue;
                }
                Mono gm = mono_mul(q, g.m[j]);
                if (i >= p.size()) {
                    next.m.push_back(gm);
                    next.c.push_back(field.neg(field.mul(v, g.c[j])));
                    ++j;
                    continue;
                }
                int c0 = cmp_.cmp(p.m[i], gm);
                if (c0 > 0) {
                    next.m.push_back(p.m[i]);
                    next.c.push_back(p.c[i]);
                    ++i;
                } else if (c0 < 0) {
                    next.m.push_back(gm);
                    next.c.push_back(field.neg(field.mul(v, g.c[j])));
                    ++j;
                } else {
                    Elem s = field.sub(p.c[i], field.mul(v, g.c[j]));
                    if (!field.is_zero(s)) {
                        next.m.push_back(p.m[i]);
                        next.c.push_back(std::move(s));
                    }
                    ++i;
                    ++j;
                }
            }
            p = std::move(next);
        }
        return out;
    }

    // ---- reduced basis -----------------------------------------------------

    GroebnerBasis<F> autoreduce() {
        GroebnerBasis<F> gb;
        gb.ring = ring_;
        gb.order = ord_;
        if (unit_) {
            gb.elements.push_back(poly_one(ring_));
            gb.leads.push_back(mono_one());
            return gb;
        }
        // minimal generating set of the leading-term ideal
        std::vector<std::uint32_t> order_idx(basis_.size());
        for (std::uint32_t i = 0; i < basis_.size(); ++i) order_idx[i] = i;
        std::sort(order_idx.begin(), order_idx.end(), [&](std::uint32_t a, std::uint32_t b) {
            int c = cmp_.cmp(basis_[a].lt, basis_[b].lt);
            if (c != 0) return c < 0;
            return a < b;
        });
        std::vector<std::uint32_t> kept;
        for (auto i : order_idx) {
            bool divisible = false;
            for (auto k : kept)
                if (mono_divides(basis_[k].lt, basis_[i].lt)) {
                    divisible = true;
                    break;
                }
            if (!divisible) kept.push_back(i);
        }
        // tail reduction: with leads fixed and mutually non-divisible, one
        // full normal form per element against the others suffices
        std::vector<EPoly> reduced;
        reduced.reserve(kept.size());
        std::vector<BElem> saved = std::move(basis_);
        for (std::size_t t = 0; t < kept.size(); ++t) {
            basis_.clear();
            for (std::size_t s = 0; s < kept.size(); ++s) {
                if (s == t) continue;
                basis_.push_back(saved[kept[s]]);
            }
            EPoly r = reduce(saved[kept[t]].p);
            reduced.push_back(std::move(r));
        }
        basis_ = std::move(saved);

        std::vector<std::uint32_t> out_idx(reduced.size());
        for (std::uint32_t i = 0; i < reduced.size(); ++i) out_idx[i] = i;
        std::sort(out_idx.begin(), out_idx.end(), [&](std::uint32_t a, std::uint32_t b) {
            return cmp_.greater(reduced[a].m[0], reduced[b].m[0]);
        });
        const auto& field = ring_->field;
        for (auto i : out_idx) {
            EPoly& e = reduced[i];
            Elem lc = e.c[0];
            if (!field.equal(lc, field.one())) {
                Elem ilc = field.inv(lc);
                for (auto& c : e.c) c = field.mul(ilc, c);
            }
            gb.leads.push_back(e.m[0]);
            gb.elements.push_back(to_poly(e));
        }
        return gb;
    }
};

// ---- public operations ------------------------------------------------------

template <class F>
GroebnerBasis<F> reduced_groebner_basis(const Ideal<F>& ideal, OrderSpec ord,
                                        GBBudget budget = {}) {
    if (auto cached = ideal.cached_gb(ord)) return *cached;
    GBEngine<F> engine(ideal.ring(), ord, budget);
    GroebnerBasis<F> gb = engine.run(ideal.gens());
    ideal.store_gb(std::make_shared<const GroebnerBasis<F>>(gb));
    return gb;
}

// Reusable normal-form context for many reductions against one basis.
template <class F>
class NormalFormer {
public:
    explicit NormalFormer(const GroebnerBasis<F>& gb, GBBudget budget = {})
        : ring_(gb.ring), engine_(gb.ring, gb.order, budget) {
        engine_.set_reducers(gb.elements);
    }

    Poly<F> nf(const Poly<F>& p) {
        require_same_ring(p.ring(), ring_);
        return engine_.to_poly(engine_.reduce(engine_.to_engine(p)));
    }

    bool reduces_to_zero(const Poly<F>& p) { return nf(p).is_zero(); }

private:
    Ring<F> ring_;
    GBEngine<F> engine_;
};

template <class F>
Poly<F> normal_form(const Poly<F>& p, const GroebnerBasis<F>& gb, GBBudget budget = {}) {
    GBEngine<F> engine(gb.ring, gb.order, budget);
    engine.set_reducers(gb.elements);
    return engine.to_poly(engine.reduce(engine.to_engine(p)));
}

// Post-hoc certificate: every S-polynomial of the basis reduces to zero.
template <class F>
bool verify_groebner(const GroebnerBasis<F>& gb, GBBudget budget = {}) {
    GBEngine<F> engine(gb.ring, gb.order, budget);
    engine.set_reducers(gb.elements);
    const auto& field = gb.ring->field;
    for (std::size_t i = 0; i < gb.elements.size(); ++i) {
        for (std::size_t j = i + 1; j < gb.elements.size(); ++j) {
            Mono l = mono_lcm(gb.leads[i], gb.leads[j]);
            Mono qi = mono_div(l, gb.leads[i]);
            Mono qj = mono_div(l, gb.leads[j]);
            std::vector<std::pair<Mono, typename F::Elem>> terms;
            const auto& a = gb.elements[i];
            const auto& b = gb.elements[j];
            for (std::size_t t = 0; t < a.nterms(); ++t)
                terms.emplace_back(mono_mul(qi, a.mono(t)), a.coeff(t));
            for (std::size_t t = 0; t < b.nterms(); ++t)
                terms.emplace_back(mono_mul(qj, b.mono(t)), field.neg(b.coeff(t)));
            if (!engine.reduce(std::move(terms)).empty()) return false;
        }
    }
    return true;
}

}  // namespace octonode

#endif
