#ifndef OCTONODE_RING_HPP
#define OCTONODE_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "octonode/errors.hpp"
#include "octonode/field.hpp"
#include "octonode/monomial.hpp"

namespace octonode {

// Ring context: variable names, coefficient field, and a positive weight per
// variable. Weights are 1 except for auxiliary saturation variables, where a
// weight equal to the saturating form's degree keeps ideals homogeneous.
// Contexts are immutable after construction and shared by pointer.
template <class F>
struct RingData {
    F field;
    std::vector<std::string> vars;
    std::vector<std::uint32_t> weights;

    unsigned nvars() const { return static_cast<unsigned>(vars.size()); }

    bool standard_graded() const {
        for (auto w : weights)
            if (w != 1) return false;
        return true;
    }

    int var_index(const std::string& name) const {
        for (unsigned i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        return -1;
    }

    bool same_as(const RingData& o) const {
        return field.spec() == o.field.spec() && vars == o.vars && weights == o.weights;
    }
};

template <class F>
using Ring = std::shared_ptr<const RingData<F>>;

template <class F>
Ring<F> make_ring(const F& field, std::vector<std::string> vars,
                  std::vector<std::uint32_t> weights = {}) {
    if (vars.empty() || vars.size() > kMaxVars)
        throw PreconditionError("ring must have between 1 and 8 variables");
    if (weights.empty()) weights.assign(vars.size(), 1);
    if (weights.size() != vars.size())
        throw PreconditionError("one weight per variable required");
    for (auto w : weights)
        if (w == 0) throw PreconditionError("variable weights must be positive");
    for (unsigned i = 0; i < vars.size(); ++i)
        for (unsigned j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j])
                throw PreconditionError("duplicate variable name: " + vars[i]);
    auto data = std::make_shared<RingData<F>>();
    data->field = field;
    data->vars = std::move(vars);
    data->weights = std::move(weights);
    return data;
}

template <class F>
void require_same_ring(const Ring<F>& a, const Ring<F>& b) {
    if (a == b) return;
    if (!a || !b || !a->same_as(*b))
        throw PreconditionError("mismatched ring contexts");
}

template <class F>
std::uint32_t mono_wdeg(const RingData<F>& ring, Mono m) {
    if (ring.standard_graded()) return mono_degree(m);
    std::uint32_t d = 0;
    for (unsigned i = 0; i < ring.nvars(); ++i) d += ring.weights[i] * mono_exponent(m, i);
    return d;
}

// Monomial order: a total order refining divisibility. Elimination(k) is a
// block order (degree in the first k variables decides first), so any
// monomial involving an eliminated variable beats every monomial in the rest.
struct OrderSpec {
    enum class Kind { grevlex, lex, elim };

    Kind kind = Kind::grevlex;
    unsigned block = 0;  // for elim: count of leading variables being eliminated

    static OrderSpec grevlex() { return {Kind::grevlex, 0}; }
    static OrderSpec lex() { return {Kind::lex, 0}; }
    static OrderSpec elim(unsigned k) { return {Kind::elim, k}; }

    bool operator==(const OrderSpec&) const = default;

    std::string to_string() const {
        switch (kind) {
            case Kind::grevlex: return "grevlex";
            case Kind::lex: return "lex";
            default: return "elim" + std::to_string(block);
        }
    }
};

template <class F>
struct OrderCmp {
    const RingData<F>* ring = nullptr;
    OrderSpec ord;

    std::uint32_t block_deg(Mono m, unsigned lo, unsigned hi) const {
        std::uint32_t d = 0;
        for (unsigned i = lo; i < hi; ++i) d += ring->weights[i] * mono_exponent(m, i);
        return d;
    }

    int cmp(Mono a, Mono b) const {
        switch (ord.kind) {
            case OrderSpec::Kind::lex:
                return mono_cmp_lex(a, b);
            case OrderSpec::Kind::grevlex: {
                std::uint32_t da = mono_wdeg(*ring, a), db = mono_wdeg(*ring, b);
                if (da != db) return da > db ? 1 : -1;
                return mono_revlex_tie(a, b);
            }
            case OrderSpec::Kind::elim: {
                std::uint32_t da = block_deg(a, 0, ord.block), db = block_deg(b, 0, ord.block);
                if (da != db) return da > db ? 1 : -1;
                da = block_deg(a, ord.block, ring->nvars());
                db = block_deg(b, ord.block, ring->nvars());
                if (da != db) return da > db ? 1 : -1;
                return mono_revlex_tie(a, b);
            }
        }
        return 0;
    }

    bool greater(Mono a, Mono b) const { return cmp(a, b) > 0; }
    bool less(Mono a, Mono b) const { return cmp(a, b) < 0; }

    // Bucket key for the dense reducer: monomials are processed bucket-major,
    // and each bucket is a finite order-sorted slice. grevlex buckets by
    // weighted degree; elim by (block degree, rest degree). lex admits no such
    // finite bucketing and is served by the sparse reducer instead.
    std::uint64_t bucket(Mono m) const {
        if (ord.kind == OrderSpec::Kind::elim) {
            return (static_cast<std::uint64_t>(block_deg(m, 0, ord.block)) << 20) |
                   block_deg(m, ord.block, ring->nvars());
        }
        return mono_wdeg(*ring, m);
    }

    bool bucket_major() const { return ord.kind != OrderSpec::Kind::lex; }
};

}  // namespace octonode

#endif
