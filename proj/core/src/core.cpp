#include "sonik/core.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <limits>

namespace sonik {

int extract_bit(value_t value, int bit_index) {
    assert(value >= 0);
    assert(bit_index >= 1 && bit_index <= 64);
    return static_cast<int>((static_cast<std::uint64_t>(value) >> (bit_index - 1)) & 1u);
}

int required_bits(std::span<const value_t> elements) {
    value_t max_value = 0;
    for (value_t v : elements) {
        assert(v >= 0);
        max_value = std::max(max_value, v);
    }
    const int width = std::bit_width(static_cast<std::uint64_t>(max_value));
    return std::max(width, 1);
}

bit_partition partition_by_bit(std::span<const value_t> elements, const rank_list& ranks,
                               int bit_index, sort_order order) {
    assert(elements.size() == ranks.size());
    const int low_bit = order == sort_order::ascending ? 0 : 1;

    bit_partition part;
    part.bit_index = bit_index;
    part.low.reserve(elements.size());
    part.high.reserve(elements.size());
    for (std::size_t pos = 0; pos < elements.size(); ++pos) {
        auto& side = extract_bit(elements[pos], bit_index) == low_bit ? part.low : part.high;
        side.push_back({pos, ranks[pos]});
    }
    return part;
}

std::optional<operating_vars> compute_operating_vars(const bit_partition& partition) {
    if (partition.high.empty()) {
        return std::nullopt;
    }

    operating_vars vars;
    vars.min_high_rank = partition.high.front().rank;
    for (const auto& entry : partition.high) {
        vars.min_high_rank = std::min(vars.min_high_rank, entry.rank);
    }

    vars.low_floor = 0;
    rank_t ceiling = 0;
    bool have_ceiling = false;
    for (const auto& entry : partition.low) {
        if (entry.rank <= vars.min_high_rank) {
            vars.low_floor = std::max(vars.low_floor, entry.rank);
        }
        if (entry.rank >= vars.min_high_rank && (!have_ceiling || entry.rank < ceiling)) {
            ceiling = entry.rank;
            have_ceiling = true;
        }
    }
    vars.low_ceiling = have_ceiling ? ceiling : vars.low_floor;

    // With the fallback ceiling below min_high_rank no low rank exceeds
    // min_high_rank, so the decrement is never applied; keep it at 0.
    vars.low_decrement = 0;
    if (vars.min_high_rank != vars.low_floor && vars.low_ceiling >= vars.min_high_rank) {
        vars.low_decrement = vars.low_ceiling - vars.min_high_rank;
    }
    return vars;
}

rank_list update_low_ranks(const rank_list& ranks, const bit_partition& partition,
                           const operating_vars& vars) {
    rank_list out(ranks);
    for (const auto& entry : partition.low) {
        if (entry.rank > vars.min_high_rank) {
            assert(entry.rank > vars.low_decrement);
            out[entry.position] = entry.rank - vars.low_decrement;
        }
    }
    return out;
}

consolidation_buffer::consolidation_buffer(rank_t max_rank) : max_rank_(max_rank) {
    if (max_rank_ <= std::numeric_limits<std::uint32_t>::max()) {
        narrow_slots_.assign(static_cast<std::size_t>(max_rank_) + 1, 0);
    } else {
        wide_slots_.assign(static_cast<std::size_t>(max_rank_) + 1, 0);
    }
}

template <typename Slot>
rank_t consolidation_buffer::scatter_walk(std::vector<Slot>& slots,
                                          std::span<partition_entry> entries) {
    rank_t lo = entries.front().rank;
    rank_t hi = entries.front().rank;
    for (const auto& entry : entries) {
        assert(entry.rank >= 1 && entry.rank <= max_rank_);
        lo = std::min(lo, entry.rank);
        hi = std::max(hi, entry.rank);
        slots[entry.rank] = 1;  // occupied; overwritten by the walk below
    }

    // Single walk over the occupied span hands out consecutive values
    // starting at the minimum input rank.
    rank_t next = lo;
    for (rank_t r = lo; r <= hi; ++r) {
        if (slots[r] != 0) {
            slots[r] = static_cast<Slot>(next++);
        }
    }
    for (auto& entry : entries) {
        entry.rank = slots[entry.rank];
    }
    for (rank_t r = lo; r <= hi; ++r) {
        slots[r] = 0;
    }
    return next - 1;
}

rank_t consolidation_buffer::consolidate(std::span<partition_entry> entries) {
    if (entries.empty()) {
        return 0;
    }
    return wide_slots_.empty() ? scatter_walk(narrow_slots_, entries)
                               : scatter_walk(wide_slots_, entries);
}

consolidation_result consolidate_ranks(std::span<const partition_entry> entries) {
    consolidation_result result;
    result.entries.assign(entries.begin(), entries.end());
    if (entries.empty()) {
        return result;
    }

    rank_t max_rank = 0;
    for (const auto& entry : entries) {
        max_rank = std::max(max_rank, entry.rank);
    }
    consolidation_buffer buffer(max_rank);
    result.max_assigned = buffer.consolidate(result.entries);
    return result;
}

rank_list update_high_ranks(const rank_list& ranks, const bit_partition& partition,
                            rank_t min_high_rank, rank_t max_assigned) {
    // The consolidated low side never ends below min_high_rank - 1, so the
    // increment is non-negative; 0 exactly when the low side was empty.
    assert(max_assigned + 1 >= min_high_rank);
    const rank_t increment = max_assigned + 1 - min_high_rank;
    const rank_t bound = 2 * static_cast<rank_t>(ranks.size());

    rank_list out(ranks);
    for (const auto& entry : partition.high) {
        const rank_t updated = entry.rank + increment;
        assert(updated <= bound);
        (void)bound;
        out[entry.position] = updated;
    }
    return out;
}

rank_list rank_iteration(std::span<const value_t> elements, const rank_list& ranks,
                         int bit_index, sort_order order) {
    const bit_partition part = partition_by_bit(elements, ranks, bit_index, order);
    const auto vars = compute_operating_vars(part);
    if (!vars) {
        return ranks;
    }

    rank_list out = update_low_ranks(ranks, part, *vars);

    std::vector<partition_entry> side;
    side.reserve(std::max(part.low.size(), part.high.size()));
    for (const auto& entry : part.low) {
        side.push_back({entry.position, out[entry.position]});
    }
    const consolidation_result low_done = consolidate_ranks(side);
    for (const auto& entry : low_done.entries) {
        out[entry.position] = entry.rank;
    }

    out = update_high_ranks(out, part, vars->min_high_rank, low_done.max_assigned);

    side.clear();
    for (const auto& entry : part.high) {
        side.push_back({entry.position, out[entry.position]});
    }
    const consolidation_result high_done = consolidate_ranks(side);
    for (const auto& entry : high_done.entries) {
        out[entry.position] = entry.rank;
    }
    return out;
}

rank_list compute_ranks(std::span<const value_t> elements, sort_order order,
                        std::optional<int> bit_limit, rank_stats* stats) {
    const std::size_t n = elements.size();
    if (stats) {
        *stats = {};
    }
    rank_list ranks(n, 1);
    if (n == 0) {
        return ranks;
    }
    if (stats) {
        stats->max_intermediate_rank = 1;
    }

    assert(!bit_limit || (*bit_limit >= 0 && *bit_limit <= 64));
    const int total_bits =
        bit_limit ? std::min(required_bits(elements), *bit_limit) : required_bits(elements);
    const int low_bit = order == sort_order::ascending ? 0 : 1;
    const rank_t bound = 2 * static_cast<rank_t>(n);

    // Reused across iterations; consolidation cleans its own slots.
    bit_partition part;
    part.low.reserve(n);
    part.high.reserve(n);
    consolidation_buffer buffer(bound);

    for (int bit = 1; bit <= total_bits; ++bit) {
        part.bit_index = bit;
        part.low.clear();
        part.high.clear();
        for (std::size_t pos = 0; pos < n; ++pos) {
            auto& side = extract_bit(elements[pos], bit) == low_bit ? part.low : part.high;
            side.push_back({pos, ranks[pos]});
        }

        const auto vars = compute_operating_vars(part);
        if (stats) {
            ++stats->iterations_run;
        }
        if (!vars) {
            continue;  // every element shares this bit
        }

        for (auto& entry : part.low) {
            if (entry.rank > vars->min_high_rank) {
                assert(entry.rank > vars->low_decrement);
                entry.rank -= vars->low_decrement;
            }
            if (stats) {
                stats->max_intermediate_rank =
                    std::max(stats->max_intermediate_rank, entry.rank);
            }
        }
        const rank_t max_assigned = buffer.consolidate(part.low);
        for (const auto& entry : part.low) {
            ranks[entry.position] = entry.rank;
        }

        assert(max_assigned + 1 >= vars->min_high_rank);
        const rank_t increment = max_assigned + 1 - vars->min_high_rank;
        for (auto& entry : part.high) {
            entry.rank += increment;
            assert(entry.rank <= bound);
            if (stats) {
                stats->max_intermediate_rank =
                    std::max(stats->max_intermediate_rank, entry.rank);
            }
        }
        buffer.consolidate(part.high);
        for (const auto& entry : part.high) {
            ranks[entry.position] = entry.rank;
        }
    }
    return ranks;
}

}  // namespace sonik
