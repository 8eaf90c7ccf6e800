#pragma once

#include <cstdint>

namespace allmatch {

// SplitMix64 (Steele et al.): state advances by the golden-ratio increment,
// outputs are the mixed state. Constants are the reference ones.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound); bound >= 1. Rejection keeps it exactly uniform.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound; // 2^64 mod bound
        for (;;) {
            std::uint64_t u = next();
            if (u >= threshold) return u % bound;
        }
    }

private:
    std::uint64_t state_;
};

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Stream for sample `index` under `seed`: state mix64(seed) + PHI*index, so
// substreams are the master sequence fast-forwarded to position index. The
// result depends only on (seed, index), never on which thread draws it.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(mix64(seed) + 0x9E3779B97F4A7C15ull * index);
}

} // namespace allmatch
