#ifndef OCTONODE_IDEAL_HPP
#define OCTONODE_IDEAL_HPP

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "octonode/polynomial.hpp"

namespace octonode {

// Reduced Groebner basis: monic elements, no term of any element divisible by
// the leading monomial of another, sorted descending by leading monomial.
// Two ideals are equal iff their reduced bases under the same order coincide.
template <class F>
struct GroebnerBasis {
    Ring<F> ring;
    OrderSpec order;
    std::vector<Poly<F>> elements;
    std::vector<Mono> leads;  // parallel to elements, leading monomials under `order`

    bool is_unit() const {
        return elements.size() == 1 && !elements[0].is_zero() && mono_is_one(leads[0]);
    }
    bool is_zero_ideal() const { return elements.empty(); }

    bool same_basis(const GroebnerBasis& o) const {
        if (elements.size() != o.elements.size()) return false;
        for (std::size_t i = 0; i < elements.size(); ++i)
            if (elements[i] != o.elements[i]) return false;
        return true;
    }
};

// A finitely generated ideal. Generators are canonicalized only by dropping
// zeros; reduced Groebner bases are computed on demand and cached per order.
// Copies share the cache; all visible state is immutable.
template <class F>
class Ideal {
public:
    Ideal() = default;
    Ideal(Ring<F> ring, std::vector<Poly<F>> gens) : ring_(std::move(ring)) {
        gens_.reserve(gens.size());
        for (auto& g : gens) {
            if (g.is_zero()) continue;
            require_same_ring(g.ring(), ring_);
            gens_.push_back(std::move(g));
        }
    }

    const Ring<F>& ring() const { return ring_; }
    const std::vector<Poly<F>>& gens() const { return gens_; }

    std::shared_ptr<const GroebnerBasis<F>> cached_gb(OrderSpec ord) const {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->map.find(key(ord));
        return it == cache_->map.end() ? nullptr : it->second;
    }
    void store_gb(std::shared_ptr<const GroebnerBasis<F>> gb) const {
        std::lock_guard<std::mutex> lock(cache_->mu);
        cache_->map.emplace(key(gb->order), std::move(gb));
    }

private:
    struct CacheBox {
        std::mutex mu;
        std::map<std::pair<int, unsigned>, std::shared_ptr<const GroebnerBasis<F>>> map;
    };
    static std::pair<int, unsigned> key(OrderSpec ord) {
        return {static_cast<int>(ord.kind), ord.block};
    }

    Ring<F> ring_;
    std::vector<Poly<F>> gens_;
    std::shared_ptr<CacheBox> cache_ = std::make_shared<CacheBox>();
};

template <class F>
Ideal<F> make_ideal(const Ring<F>& ring, std::vector<Poly<F>> gens) {
    return Ideal<F>(ring, std::move(gens));
}

}  // namespace octonode

#endif
