#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace lmoam {

/// Seeded, splittable random stream.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. All derived draws (reals, indices, Bernoulli trials) are mapped
/// from raw 64-bit words here rather than through <random> distributions, whose
/// algorithms are implementation-defined, so a seed reproduces the same run on
/// every conforming toolchain.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed);

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next_u64();

    /// Uniform double in [0, 1) with 53 bits of resolution.
    double uniform();

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi);

    /// Uniform integer in [0, n). n must be positive.
    std::size_t index(std::size_t n);

    bool bernoulli(double p);

    /// Standard exponential variate.
    double exponential();

    /// Derives an independent child stream; advances this stream by one draw.
    RngStream split();

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer, used to decorrelate derived seeds.
std::uint64_t mix_seed(std::uint64_t x) noexcept;

} // namespace lmoam
