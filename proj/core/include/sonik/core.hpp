#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

// In-situ integer ranking. For an input list of n non-negative integers the
// driver produces, at each element's original position, its dense rank in
// sorted order, processing one bit per iteration from the least significant
// bit upward. Each iteration splits the current ranks by the bit value,
// shifts the two sides by per-iteration update parameters, and closes the
// resulting gaps so ranks stay contiguous. No sorting, no element movement.
//
// Signed inputs are handled by the normalize() pass in transform.hpp.

namespace sonik {

using value_t = std::int64_t;
using rank_t = std::uint64_t;

using element_list = std::vector<value_t>;
using rank_list = std::vector<rank_t>;

enum class sort_order { ascending, descending };

// One element's slot in a bit partition: its position in the input and the
// rank it carries into the current iteration.
struct partition_entry {
    std::size_t position = 0;
    rank_t rank = 0;

    friend bool operator==(const partition_entry&, const partition_entry&) = default;
};

// Split of the current ranks by one bit. `low` collects the side that keeps
// the smaller ranks for this bit (bit value 0 when ascending, 1 when
// descending); `high` is the side whose ranks move up. Entries appear in
// element order within each side, and every position lands in exactly one.
struct bit_partition {
    std::vector<partition_entry> low;
    std::vector<partition_entry> high;
    int bit_index = 0;  // 1-based, counted from the least significant bit
};

// Update parameters for one iteration, derived from the partition.
//
//   min_high_rank  smallest rank on the high side
//   low_floor      largest low-side rank <= min_high_rank, 0 if none
//   low_ceiling    smallest low-side rank >= min_high_rank, low_floor if none
//   low_decrement  shift applied to low-side ranks above min_high_rank:
//                  0 when min_high_rank = low_floor, else
//                  low_ceiling - min_high_rank
struct operating_vars {
    rank_t min_high_rank = 0;
    rank_t low_floor = 0;
    rank_t low_ceiling = 0;
    rank_t low_decrement = 0;
};

// Scatter array that closes gaps in a partition's rank values. Each input
// rank occupies the slot indexed by its value; a single walk over the
// occupied range assigns consecutive values anchored at the minimum input
// rank. Duplicate ranks share a slot and therefore share their remapped
// value. The driver sizes the buffer to 2n, the proven bound on any rank
// produced by the updation phase.
class consolidation_buffer {
  public:
    explicit consolidation_buffer(rank_t max_rank);

    // Remaps entries' ranks in place to the contiguous run anchored at their
    // minimum and returns the largest rank assigned (0 for empty input).
    // Every input rank must lie in [1, max_rank]; touched slots are cleared
    // again before returning, so the buffer can be reused.
    rank_t consolidate(std::span<partition_entry> entries);

    rank_t max_rank() const { return max_rank_; }

  private:
    template <typename Slot>
    rank_t scatter_walk(std::vector<Slot>& slots, std::span<partition_entry> entries);

    // slot[r] = remapped value of rank r, 0 = free. Narrow slots halve the
    // scatter footprint and are enough whenever the rank bound fits 32 bits.
    rank_t max_rank_;
    std::vector<std::uint32_t> narrow_slots_;
    std::vector<rank_t> wide_slots_;
};

struct consolidation_result {
    std::vector<partition_entry> entries;
    rank_t max_assigned = 0;
};

// Counters reported by compute_ranks when requested.
struct rank_stats {
    rank_t max_intermediate_rank = 0;  // largest rank seen before consolidation
    int iterations_run = 0;
};

// The i-th least significant bit of a non-negative value, 1 <= bit_index <= 64.
int extract_bit(value_t value, int bit_index);

// Number of bits needed to encode the largest element; at least 1, so an
// all-zero input still runs one (no-op) iteration.
int required_bits(std::span<const value_t> elements);

// Splits positions by the bit_index-th bit into the low/high sides for the
// given order. Elements must be non-negative.
bit_partition partition_by_bit(std::span<const value_t> elements, const rank_list& ranks,
                               int bit_index, sort_order order = sort_order::ascending);

// Derives the update parameters in one pass per side. Empty high side yields
// nullopt: every element shares the bit, so the iteration changes nothing.
std::optional<operating_vars> compute_operating_vars(const bit_partition& partition);

// Low-side updation: ranks above min_high_rank drop by low_decrement, the
// rest stay. Positions outside the low side are untouched.
rank_list update_low_ranks(const rank_list& ranks, const bit_partition& partition,
                           const operating_vars& vars);

// Order-preserving dense remap of the entries' ranks anchored at their
// minimum: new(r) = min + |{distinct input ranks < r}|. Equal ranks stay
// equal, holes close, max_assigned = min + distinct-count - 1.
consolidation_result consolidate_ranks(std::span<const partition_entry> entries);

// High-side updation: every high rank grows by max_assigned + 1 -
// min_high_rank, placing the side's minimum just above the consolidated low
// side. max_assigned is 0 when the low side was empty.
rank_list update_high_ranks(const rank_list& ranks, const bit_partition& partition,
                            rank_t min_high_rank, rank_t max_assigned);

// One full iteration: partition, derive parameters, update + consolidate the
// low side, then the high side. Returns ranks unchanged when the high side
// is empty. With valid input ranks for i-1 bits, the result is the dense
// ranking of the values masked to their i low bits.
rank_list rank_iteration(std::span<const value_t> elements, const rank_list& ranks,
                         int bit_index, sort_order order = sort_order::ascending);

// Runs iterations for bits 1..min(k, bit_limit) starting from all-ones ranks,
// where k = required_bits(elements). Without bit_limit this yields the final
// dense ranks; stopping early yields the valid ranking under the bit_limit
// lowest bits. The input is never modified. Elements must be non-negative
// (run normalize() first for signed data).
rank_list compute_ranks(std::span<const value_t> elements,
                        sort_order order = sort_order::ascending,
                        std::optional<int> bit_limit = std::nullopt,
                        rank_stats* stats = nullptr);

}  // namespace sonik
