#ifndef ICHAIN_RNG_HPP
#define ICHAIN_RNG_HPP

#include <array>
#include <cstdint>
#include <limits>

namespace ichain {

/// SplitMix64, used only to expand a 64-bit seed into generator state.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : x_(seed) {}
    constexpr std::uint64_t next() noexcept {
        std::uint64_t z = (x_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t x_;
};

/// xoshiro256** 1.0 (Blackman and Vigna), seeded through SplitMix64.
/// Satisfies UniformRandomBitGenerator. The output stream for a given seed
/// is fixed and platform independent.
class Xoshiro256ss {
public:
    using result_type = std::uint64_t;

    explicit constexpr Xoshiro256ss(std::uint64_t seed) noexcept : s_{} {
        SplitMix64 sm(seed);
        for (auto& w : s_) w = sm.next();
    }

    /// Generator with an explicit internal state (must not be all zero).
    static constexpr Xoshiro256ss from_state(const std::array<std::uint64_t, 4>& state) noexcept {
        Xoshiro256ss g(0);
        g.s_ = state;
        return g;
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

    /// Uniform double in [0, 1) from the top 53 bits.
    constexpr double uniform() noexcept {
        return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
    }

    friend constexpr bool operator==(const Xoshiro256ss&, const Xoshiro256ss&) = default;

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }
    std::array<std::uint64_t, 4> s_;
};

/// Uniform integer in [0, bound) by rejection, identical on every platform
/// (std::uniform_int_distribution is implementation defined).
inline std::uint64_t uniform_below(Xoshiro256ss& rng, std::uint64_t bound) noexcept {
    if (bound <= 1) return 0;
    const std::uint64_t limit = Xoshiro256ss::max() - Xoshiro256ss::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

}  // namespace ichain

#endif  // ICHAIN_RNG_HPP
