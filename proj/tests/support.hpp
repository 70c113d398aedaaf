#pragma once

#include <cstdint>
#include <vector>

// Deterministic data generation shared by the property and acceptance
// suites. splitmix64 keeps failing cases reproducible from a printed seed
// regardless of standard-library internals.

namespace testsupport {

class rng {
  public:
    explicit rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi], inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span =
            static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
        if (span == 0) {  // full 64-bit span
            return static_cast<std::int64_t>(next());
        }
        return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + next() % span);
    }

    std::size_t index(std::size_t bound) {  // [0, bound)
        return static_cast<std::size_t>(next() % bound);
    }

  private:
    std::uint64_t state_;
};

inline std::vector<std::int64_t> random_values(rng& gen, std::size_t n, std::int64_t lo,
                                               std::int64_t hi) {
    std::vector<std::int64_t> values;
    values.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        values.push_back(gen.range(lo, hi));
    }
    return values;
}

// Value-range regimes the randomized campaigns rotate through: signed,
// duplicate-heavy, all-equal, and sparse spans.
inline std::pair<std::int64_t, std::int64_t> range_regime(std::size_t i) {
    switch (i % 4) {
        case 0: return {-100, 100};
        case 1: return {-3, 3};
        case 2: return {5, 5};
        default: return {-(std::int64_t{1} << 40), std::int64_t{1} << 40};
    }
}

}  // namespace testsupport
