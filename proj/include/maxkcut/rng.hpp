#pragma once

#include <cmath>
#include <cstdint>

namespace mkc {

/// SplitMix64 generator.
///
/// Every stochastic routine in the library takes an explicit 64-bit seed and
/// draws from this generator, so results depend only on the seed and never on
/// the standard library's distribution implementations. Independent streams
/// are obtained with `split(index)`, which hashes (state, index) into a fresh
/// seed; a stream derived for shot `i` is the same regardless of how many
/// workers run the shots.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~result_type{0}; }

    result_type operator()() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        return mix(z);
    }

    /// Child stream keyed by `index`. Does not advance this generator.
    [[nodiscard]] SplitMix64 split(std::uint64_t index) const noexcept {
        return SplitMix64(mix(state_ ^ mix(index + 0xD1B54A32D192ED03ULL)));
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound). `bound` must be positive.
    std::uint64_t below(std::uint64_t bound) noexcept {
        // Lemire's multiply-shift with rejection.
        std::uint64_t x = (*this)();
        __uint128_t m = static_cast<__uint128_t>(x) * bound;
        auto low = static_cast<std::uint64_t>(m);
        if (low < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                x = (*this)();
                m = static_cast<__uint128_t>(x) * bound;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    bool bernoulli(double p) noexcept { return uniform() < p; }

private:
    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace mkc
