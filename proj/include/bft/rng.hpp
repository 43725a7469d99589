#ifndef BFT_RNG_HPP
#define BFT_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace bft {

/// splitmix64 step; used only for seed derivation.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Counter-based sub-seed derivation: sub-streams for (trial, source) pairs
/// come from a fixed mixing rule so every trial is reproducible on its own.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0) {
    std::uint64_t x = splitmix64(master ^ (0x9E3779B97F4A7C15ull * (a + 1)));
    return splitmix64(x ^ (0xC2B2AE3D27D4EB4Full * (b + 1)));
}

/// Seeded generator with hand-rolled uniform mappings. std::*_distribution
/// implementations differ across standard libraries; these mappings do not,
/// so streams are stable wherever mt19937_64 is.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform double in [0, 1), 53-bit resolution.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound), unbiased (rejection sampling). bound >= 1.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t r;
        do {
            r = next_u64();
        } while (r >= limit);
        return r % bound;
    }

    /// Uniform integer in [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(next_below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    /// First `count` elements of a seeded partial Fisher-Yates shuffle of `pool`.
    template <typename T>
    std::vector<T> sample_without_replacement(std::vector<T> pool, std::size_t count) {
        for (std::size_t i = 0; i < count; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(next_below(pool.size() - i));
            std::swap(pool[i], pool[j]);
        }
        pool.resize(count);
        return pool;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace bft

#endif  // BFT_RNG_HPP
