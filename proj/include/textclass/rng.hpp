#ifndef TEXTCLASS_RNG_HPP
#define TEXTCLASS_RNG_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace textclass {

/// SplitMix64 generator (Steele/Lea/Flood 2014). Chosen over std::mt19937 +
/// std::shuffle because every output here must be reproducible bit-for-bit
/// across standard libraries and platforms; the whole stream is pinned by
/// this file. All stochastic components (split shuffle, SGD/SVM epoch
/// shuffles, network init) draw from SplitMix64 streams derived from the
/// run seed plus a component label, see derive_seed().
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [0, n) via 128-bit multiply-shift (Lemire).
    std::uint64_t next_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [-eps, eps].
    double next_symmetric(double eps) {
        return eps * (2.0 * next_unit() - 1.0);
    }

private:
    std::uint64_t state_;
};

/// FNV-1a 64-bit hash.
inline std::uint64_t fnv1a64(std::string_view s,
                             std::uint64_t h = 0xCBF29CE484222325ULL) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

/// Fixed-width lowercase hex rendering, used for fingerprints.
inline std::string hex64(std::uint64_t h) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xF];
        h >>= 4;
    }
    return out;
}

/// Deterministic per-component seed: mixes the run seed with a component
/// label ("split|<class>", "sgd|3|epoch|12", ...) through one SplitMix64
/// step so unrelated components get unrelated streams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view label) {
    SplitMix64 mix(seed ^ fnv1a64(label));
    return mix.next();
}

/// Fisher-Yates shuffle driven by SplitMix64; the loop direction and the
/// bounded-draw method are part of the reproducibility contract.
template <typename T>
void shuffle(std::vector<T>& items, SplitMix64& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng.next_below(i));
        std::swap(items[i - 1], items[j]);
    }
}

} // namespace textclass

#endif
