#pragma once

#include <cstdint>
#include <random>

namespace syncode {

/// Seedable random source with a fully documented, platform-stable stream.
///
/// The raw generator is std::mt19937_64, whose output sequence is pinned by
/// the standard. The standard *distributions* are not (their algorithms are
/// implementation-defined), so bounded draws are derived here by hand:
///
///   uniform_index(bound): rejection sampling on raw 64-bit words. Words
///     >= 2^64 - (2^64 mod bound) are discarded, the rest reduced mod bound.
///   uniform01(): (word >> 11) * 2^-53, uniform on [0,1) with 53-bit
///     resolution.
///
/// Two Rng instances with the same seed therefore produce identical draw
/// sequences on every conforming platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform integer in [0, bound). bound must be nonzero.
    std::uint64_t uniform_index(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t x = gen_();
        while (x >= limit) x = gen_();
        return x % bound;
    }

    /// Uniform double in [0,1).
    double uniform01() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

private:
    std::mt19937_64 gen_;
};

} // namespace syncode
