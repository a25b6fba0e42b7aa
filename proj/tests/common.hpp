#ifndef OCTONODE_TESTS_COMMON_HPP
#define OCTONODE_TESTS_COMMON_HPP

#include <string>
#include <vector>

#include "octonode/field.hpp"
#include "octonode/parse.hpp"
#include "octonode/polynomial.hpp"
#include "octonode/ring.hpp"
#include "octonode/rng.hpp"

namespace tst {

using namespace octonode;

inline Ring<FpField> fp_ring(std::vector<std::string> vars, std::uint32_t p = 32003) {
    return make_ring(FpField(FieldSpec::prime(p)), std::move(vars));
}

inline Ring<QQField> qq_ring(std::vector<std::string> vars) {
    return make_ring(QQField(FieldSpec::rationals()), std::move(vars));
}

template <class F>
Poly<F> pp(const Ring<F>& ring, const std::string& text) {
    return parse_polynomial(text, ring);
}

// random polynomial, not necessarily homogeneous, with ~`terms` terms
template <class F>
Poly<F> random_poly(const Ring<F>& ring, unsigned max_deg, unsigned terms, std::uint64_t seed) {
    SplitMix64 rng(derive_seed(seed, 0x7465726d));
    std::vector<std::pair<Mono, typename F::Elem>> acc;
    for (unsigned t = 0; t < terms; ++t) {
        std::array<unsigned, kMaxVars> exps{};
        unsigned rem = max_deg;
        for (unsigned v = 0; v < ring->nvars(); ++v) {
            unsigned e = static_cast<unsigned>(rng.below(rem + 1));
            exps[v] = e;
            rem -= e;
        }
        acc.emplace_back(mono_make(std::span<const unsigned>(exps.data(), ring->nvars())),
                         ring->field.random(rng));
    }
    return Poly<F>::from_terms(ring, std::move(acc));
}

inline Mono random_mono(unsigned nv, unsigned max_deg, SplitMix64& rng) {
    std::array<unsigned, kMaxVars> exps{};
    unsigned rem = max_deg;
    for (unsigned v = 0; v < nv; ++v) {
        unsigned e = static_cast<unsigned>(rng.below(rem + 1));
        exps[v] = e;
        rem -= e;
    }
    return mono_make(std::span<const unsigned>(exps.data(), nv));
}

}  // namespace tst

#endif
