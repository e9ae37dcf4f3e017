#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace povac {

/// Stream tags keep the random numbers consumed by different purposes of the
/// same trial on disjoint counter ranges.
namespace rng_stream {
inline constexpr std::uint32_t points = 0;
inline constexpr std::uint32_t vacancy_samples = 1;
inline constexpr std::uint32_t clearing = 2;
inline constexpr std::uint32_t thinning = 3;
inline constexpr std::uint32_t box_samples = 4;
inline constexpr std::uint32_t volume_mc = 5;
} // namespace rng_stream

/// Counter-based Philox4x32-10 generator.
///
/// The key is the 64-bit seed; the upper counter words hold (trial_id,
/// stream). Distinct (seed, trial_id, stream) triples therefore index
/// non-overlapping counter blocks of the same permutation family, which
/// makes parallel trials reproducible without sequential coupling.
class TrialRng {
public:
    using Block = std::array<std::uint32_t, 4>;

    TrialRng(std::uint64_t seed, std::uint64_t trial_id,
             std::uint32_t stream = rng_stream::points)
        : key_{static_cast<std::uint32_t>(seed & 0xFFFFFFFFu),
               static_cast<std::uint32_t>(seed >> 32)} {
        if (trial_id > 0xFFFFFFFFull)
            throw std::invalid_argument("TrialRng: trial_id must fit in 32 bits");
        counter_ = {0u, 0u, static_cast<std::uint32_t>(trial_id), stream};
    }

    /// One 10-round Philox4x32 block; exposed for known-answer tests.
    static Block philox_block(Block counter, std::array<std::uint32_t, 2> key);

    std::uint32_t next_u32() {
        if (pos_ == 4) refill();
        return buf_[pos_++];
    }

    std::uint64_t next_u64() {
        const std::uint64_t lo = next_u32();
        const std::uint64_t hi = next_u32();
        return lo | (hi << 32);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * next_double(); }

    /// Uniform point in the box, written to out[0..d).
    void point_in_box(std::span<const double> lo, std::span<const double> hi,
                      std::span<double> out) {
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = uniform(lo[i], hi[i]);
    }

    /// Exact Poisson sample by inverse-transform over product of uniforms.
    /// Large means are split into chunks of at most 500 so exp(-lambda)
    /// stays far from underflow; sums of independent Poisson chunks are
    /// exact in distribution.
    std::uint64_t poisson(double mean);

private:
    void refill() {
        buf_ = philox_block(counter_, key_);
        pos_ = 0;
        if (++counter_[0] == 0) ++counter_[1]; // 64-bit block counter
    }

    Block counter_{};
    std::array<std::uint32_t, 2> key_{};
    Block buf_{};
    int pos_ = 4;
};

} // namespace povac
