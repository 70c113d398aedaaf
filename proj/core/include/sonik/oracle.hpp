#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

// Brute-force reference rankings for differential testing. Deliberately
// naive (sort + binary search, quadratic stable counting) and implemented
// without touching any of the optimized ranking code.

namespace sonik::oracle {

struct oracle_config {
    // Rank only the mask_bits low bits. Negative input is lifted by its
    // minimum first so the bit patterns match what the core is fed.
    std::optional<int> mask_bits;
    bool descending = false;
    bool stable = false;
};

// rank[i] = 1 + number of distinct values strictly less than value[i]
// (strictly greater when descending). Equal values share a rank.
std::vector<std::uint64_t> dense_ranks(std::span<const std::int64_t> elements,
                                       const oracle_config& config = {});

// rank[i] = |{j : v[j] < v[i]}| + |{j <= i : v[j] = v[i]}|; a permutation
// of 1..n with duplicates ranked in appearance order.
std::vector<std::uint64_t> stable_ranks(std::span<const std::int64_t> elements,
                                        const oracle_config& config = {});

// Dispatches on config.stable.
std::vector<std::uint64_t> ranks(std::span<const std::int64_t> elements,
                                 const oracle_config& config = {});

}  // namespace sonik::oracle
