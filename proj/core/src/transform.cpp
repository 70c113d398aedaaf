#include "sonik/transform.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace sonik {

namespace {

normalized_input shift_by(std::span<const value_t> elements, value_t offset) {
    normalized_input result;
    if (elements.empty()) {
        return result;
    }

    const value_t max_value = *std::max_element(elements.begin(), elements.end());
    const std::uint64_t range =
        static_cast<std::uint64_t>(max_value) - static_cast<std::uint64_t>(offset);
    if (range > static_cast<std::uint64_t>(std::numeric_limits<value_t>::max())) {
        throw std::overflow_error("normalize: value range exceeds 64-bit signed capacity");
    }

    result.shift.offset = offset;
    result.shift.applied = true;
    result.values.reserve(elements.size());
    for (value_t v : elements) {
        result.values.push_back(static_cast<value_t>(
            static_cast<std::uint64_t>(v) - static_cast<std::uint64_t>(offset)));
    }
    return result;
}

}  // namespace

normalized_input normalize(std::span<const value_t> elements) {
    if (elements.empty()) {
        return {};
    }
    return shift_by(elements, *std::min_element(elements.begin(), elements.end()));
}

normalized_input lift_negatives(std::span<const value_t> elements) {
    if (elements.empty()) {
        return {};
    }
    const value_t min_value = *std::min_element(elements.begin(), elements.end());
    return shift_by(elements, std::min<value_t>(min_value, 0));
}

rank_list stabilize_ranks(std::span<const value_t> elements, const rank_list& dense_ranks) {
    const std::size_t n = elements.size();
    if (dense_ranks.size() != n) {
        throw std::invalid_argument("stabilize_ranks: rank list length mismatch");
    }

    for (rank_t r : dense_ranks) {
        if (r < 1 || r > n) {
            throw std::invalid_argument("stabilize_ranks: rank outside [1, n]");
        }
    }

    // Counting pass: how many elements share each dense rank, then where
    // each rank's block starts in the stable order.
    std::vector<rank_t> start(n + 1, 0);
    for (rank_t r : dense_ranks) {
        ++start[r];
    }
    rank_t running = 1;
    for (std::size_t r = 1; r <= n; ++r) {
        const rank_t count = start[r];
        start[r] = running;
        running += count;
    }

    rank_list out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = start[dense_ranks[i]]++;
    }
    return out;
}

namespace {

// Scatters elements by rank; false when the ranks fail to be a permutation
// of 1..n.
bool try_place(std::span<const value_t> elements, const rank_list& ranks,
               element_list& out) {
    const std::size_t n = elements.size();
    out.assign(n, 0);
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        const rank_t r = ranks[i];
        if (r < 1 || r > n || seen[r - 1]) {
            return false;
        }
        seen[r - 1] = true;
        out[r - 1] = elements[i];
    }
    return true;
}

}  // namespace

element_list sorted_from_ranks(std::span<const value_t> elements, const rank_list& ranks) {
    if (ranks.size() != elements.size()) {
        throw std::invalid_argument("sorted_from_ranks: rank list length mismatch");
    }

    element_list out;
    if (try_place(elements, ranks, out)) {
        return out;
    }
    // Dense ranks with duplicates leave holes; stabilizing assigns each
    // duplicate its own slot.
    if (try_place(elements, stabilize_ranks(elements, ranks), out)) {
        return out;
    }
    throw std::invalid_argument("sorted_from_ranks: ranks do not form a permutation of 1..n");
}

}  // namespace sonik
