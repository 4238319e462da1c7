#pragma once

#include "vko/rational.hpp"

#include <cstdint>
#include <random>

namespace vko {

/// Seeded generator with a portable integer mapping (std distributions are
/// implementation-defined, so they are avoided).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    /// n / denominator with n uniform in [lo, hi].
    Rational uniformRational(std::int64_t lo, std::int64_t hi, std::int64_t denominator);

private:
    std::mt19937_64 engine_;
};

/// Independent stream seed for sub-task `stream` of a run seeded with `seed`.
std::uint64_t deriveSeed(std::uint64_t seed, std::uint64_t stream);

} // namespace vko
