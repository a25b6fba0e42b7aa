#ifndef OCTONODE_RNG_HPP
#define OCTONODE_RNG_HPP

#include <cstdint>

namespace octonode {

// splitmix64: tiny, fully specified, platform-independent. Used everywhere a
// seed appears so that reports are bit-identical across runs and machines
// (std::uniform_int_distribution is not portable).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Unbiased-enough uniform draw in [0, n) via 128-bit multiply; n << 2^64
    // in all uses here, so the modulo bias is irrelevant and determinism wins.
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

private:
    std::uint64_t state_;
};

// Stable derivation of independent streams from one base seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) {
    SplitMix64 rng(base ^ (0x517cc1b727220a95ull * (salt + 1)));
    rng.next();
    return rng.next();
}

}  // namespace octonode

#endif
