#pragma once

#include <cstdint>

namespace syncfifo {

/// SplitMix64. The seed fully determines the stream, which keeps random
/// stimulus reproducible across runs and implementations.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed = 0) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    constexpr std::uint64_t state() const noexcept { return state_; }

    constexpr bool operator==(const SplitMix64 &) const = default;

private:
    std::uint64_t state_;
};

} // namespace syncfifo
