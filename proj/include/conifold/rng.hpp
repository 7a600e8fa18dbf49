#pragma once

// Deterministic randomness for witness searches and property trials.
//
// The engine identity is pinned to std::mt19937_64, whose output sequence is
// fully specified by the C++ standard, so results are bit-identical across
// platforms and compilers. Bounded draws use explicit rejection sampling
// because the std:: distribution templates are implementation-defined and
// would silently break reproducibility.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string_view>

namespace conifold {

class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : seed_(seed), eng_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return eng_(); }

    // Unbiased uniform draw from [0, n). Rejects raw values below
    // 2^64 mod n so that the accepted range is an exact multiple of n.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("SeededRng::below: bound must be positive");
        const std::uint64_t cutoff = (0 - n) % n;  // 2^64 mod n
        std::uint64_t x = eng_();
        while (x < cutoff) x = eng_();
        return x % n;
    }

    // Uniform integer in the inclusive range [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        if (lo > hi) throw std::invalid_argument("SeededRng::between: empty range");
        const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
        return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + below(span));
    }

    // Derives an independent child stream from this stream's seed (not its
    // current state): FNV-1a of the label, XORed with the golden-ratio
    // multiple of the index, then finalized with splitmix64. Every task in a
    // run names its stream, so adding or reordering tasks cannot shift the
    // draws seen by unrelated tasks.
    SeededRng stream(std::string_view label, std::uint64_t index = 0) const {
        return SeededRng(derive_seed(seed_, label, index));
    }

    static std::uint64_t derive_seed(std::uint64_t master, std::string_view label,
                                     std::uint64_t index) {
        std::uint64_t h = 1469598103934665603ULL;
        for (char ch : label) {
            h ^= static_cast<unsigned char>(ch);
            h *= 1099511628211ULL;
        }
        std::uint64_t x = master ^ h ^ (index * 0x9E3779B97F4A7C15ULL);
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 eng_;
};

}  // namespace conifold
