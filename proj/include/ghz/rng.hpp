#pragma once

#include <cstdint>
#include <random>

namespace ghz {

/// Seedable random source backing the sampling oracle: a Mersenne Twister
/// (std::mt19937_64) with Box-Muller normal variates. Reproducible for a
/// given seed within a build; cross-implementation runs only need to agree
/// within the acceptance tolerances, not bitwise.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform double strictly inside (0, 1).
    double uniform() {
        return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal variate (Box-Muller, pairs cached).
    double normal();

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace ghz
