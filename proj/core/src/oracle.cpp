#include "sonik/oracle.hpp"

#include <algorithm>
#include <cassert>

namespace sonik::oracle {

namespace {

// Maps each value to an unsigned key whose < order matches the configured
// ranking order. Masking is applied to min-shifted values so the bit
// patterns match what a normalized input presents.
std::vector<std::uint64_t> sortable_keys(std::span<const std::int64_t> elements,
                                         const oracle_config& config) {
    std::vector<std::uint64_t> keys;
    keys.reserve(elements.size());

    if (config.mask_bits.has_value()) {
        assert(*config.mask_bits >= 0 && *config.mask_bits <= 64);
        // Negative input is lifted to non-negative before masking, matching
        // what the ranking pipeline feeds the core; values that are already
        // non-negative are masked as-is.
        std::int64_t shift = 0;
        if (!elements.empty()) {
            shift = std::min<std::int64_t>(
                0, *std::min_element(elements.begin(), elements.end()));
        }
        const std::uint64_t mask =
            *config.mask_bits == 64 ? ~std::uint64_t{0}
                                    : (std::uint64_t{1} << *config.mask_bits) - 1;
        for (std::int64_t v : elements) {
            // Wrap-safe shift: v - shift is in [0, 2^64) and order-preserving.
            keys.push_back(
                (static_cast<std::uint64_t>(v) - static_cast<std::uint64_t>(shift)) &
                mask);
        }
    } else {
        for (std::int64_t v : elements) {
            // Flip the sign bit so unsigned comparison matches signed order.
            keys.push_back(static_cast<std::uint64_t>(v) ^ (std::uint64_t{1} << 63));
        }
    }

    if (config.descending) {
        for (auto& k : keys) k = ~k;
    }
    return keys;
}

}  // namespace

std::vector<std::uint64_t> dense_ranks(std::span<const std::int64_t> elements,
                                       const oracle_config& config) {
    const auto keys = sortable_keys(elements, config);

    std::vector<std::uint64_t> sorted(keys);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<std::uint64_t> out;
    out.reserve(keys.size());
    for (std::uint64_t k : keys) {
        const auto it = std::lower_bound(sorted.begin(), sorted.end(), k);
        out.push_back(static_cast<std::uint64_t>(it - sorted.begin()) + 1);
    }
    return out;
}

std::vector<std::uint64_t> stable_ranks(std::span<const std::int64_t> elements,
                                        const oracle_config& config) {
    const auto keys = sortable_keys(elements, config);
    const std::size_t n = keys.size();

    std::vector<std::uint64_t> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t rank = 0;
        for (std::size_t j = 0; j < n; ++j) {
            rank += keys[j] < keys[i];
            rank += j <= i && keys[j] == keys[i];
        }
        out[i] = rank;
    }
    return out;
}

std::vector<std::uint64_t> ranks(std::span<const std::int64_t> elements,
                                 const oracle_config& config) {
    return config.stable ? stable_ranks(elements, config) : dense_ranks(elements, config);
}

}  // namespace sonik::oracle
