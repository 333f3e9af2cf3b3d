#pragma once

// Pinned random number machinery. Results of every stochastic operation are
// reproducible across platforms and versions as long as these three pieces
// stay unchanged:
//   * splitmix64 (Steele, Lea & Flood constants) for seeding and mixing
//   * xoshiro256** as the stream generator
//   * Lemire's multiply-shift rejection method for bounded integers
// Stream k of a run with seed s is Xoshiro256ss(stream_seed(s, k)).

#include <array>
#include <cstdint>
#include <limits>

namespace tieroc::rng {

inline constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        state_ += 0x9E3779B97F4A7C15ULL;
        return splitmix64_mix(state_);
    }

private:
    std::uint64_t state_;
};

// Child seed for stream `index` of a run seeded with `seed`.
inline constexpr std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    return splitmix64_mix(splitmix64_mix(seed) ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
}

// xoshiro256** 1.0 (Blackman & Vigna). Satisfies UniformRandomBitGenerator.
class Xoshiro256ss {
public:
    using result_type = std::uint64_t;

    explicit constexpr Xoshiro256ss(std::uint64_t seed) noexcept : s_{} {
        SplitMix64 sm(seed);
        for (auto& word : s_) {
            word = sm.next();
        }
    }

    static Xoshiro256ss for_stream(std::uint64_t seed, std::uint64_t index) noexcept {
        return Xoshiro256ss(stream_seed(seed, index));
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    constexpr result_type operator()() noexcept {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> s_;
};

// Uniform integer in [0, bound), bound > 0. Unbiased.
template <typename Gen>
std::uint64_t uniform_below(Gen& gen, std::uint64_t bound) noexcept {
    unsigned __int128 m = static_cast<unsigned __int128>(gen()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            m = static_cast<unsigned __int128>(gen()) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

}  // namespace tieroc::rng
