#pragma once

#include <cstdint>
#include <random>

#include "pencils/errors.hpp"

namespace pencils {

// Seeded RNG with a rejection-sampled bounded draw. std::uniform_int_distribution
// is implementation-defined, so sequences would not be reproducible across
// standard libraries; this is.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Uniform integer in [lo, hi], endpoints included.
    int uniform(int lo, int hi) {
        check_internal(lo <= hi, "rng range empty");
        const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return static_cast<int>(lo + static_cast<std::int64_t>(x % span));
    }

    std::uint64_t raw() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

} // namespace pencils
