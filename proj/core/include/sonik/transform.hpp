#pragma once

#include <span>

#include "sonik/core.hpp"

// Input normalization and output post-processing around the core ranking
// loop: one subtract-min pass makes signed input non-negative and trims the
// bit count in the same stroke, a counting pass turns dense ranks into
// stable ones, and a scatter pass rebuilds the sorted list from ranks.

namespace sonik {

// Shift recorded by normalize; offset is the minimum input value.
struct normalization {
    value_t offset = 0;
    bool applied = false;
};

struct normalized_input {
    element_list values;
    normalization shift;
};

// Returns values - min(values) elementwise. Ranks are shift-invariant, so
// ranking the result equals ranking the input; the shift also minimizes the
// number of bit iterations. Throws std::overflow_error when max - min does
// not fit in a signed 64-bit value.
normalized_input normalize(std::span<const value_t> elements);

// Like normalize, but shifts only when negatives are present. Non-negative
// input passes through bit-identical, so early-terminated runs rank the
// input's own low bits. Same overflow rule as normalize.
normalized_input lift_negatives(std::span<const value_t> elements);

// Rewrites dense ranks (duplicates share a rank) as stable ranks (each
// element's position in the stable sort): occurrences per rank are counted,
// prefix-summed to start positions, and handed out in appearance order.
// Always a permutation of 1..n. Throws std::invalid_argument on length
// mismatch or on rank values outside [1, n].
rank_list stabilize_ranks(std::span<const value_t> elements, const rank_list& dense_ranks);

// Places each element at index rank-1, yielding the sorted list in one pass.
// Ranks that are not a permutation of 1..n are stabilized first; if they
// still fail to form one, throws std::invalid_argument.
element_list sorted_from_ranks(std::span<const value_t> elements, const rank_list& ranks);

}  // namespace sonik
