#ifndef KGA_GREEDY_HPP
#define KGA_GREEDY_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "kga/instance.hpp"
#include "kga/solution.hpp"

namespace kga {

/// Item indices sorted by non-increasing profit-to-weight ratio.
/// Ties break by ascending item index, so the order is deterministic.
std::vector<std::size_t> ratio_order(const Instance& inst);

/// Item indices sorted by non-increasing profit, same tie-break.
std::vector<std::size_t> profit_order(const Instance& inst);

/// Scans the items in the given order and packs each one that still fits.
/// A misfit is skipped, not a stopping point: later (smaller) items in the
/// order may still be packed.
Solution greedy_fill(const Instance& inst, std::span<const std::size_t> order);

/// The classic 1/2-approximation: best of the ratio-ordered fill and the
/// profit-ordered fill (ratio fill wins ties).
Solution greedy_solve(const Instance& inst);

} // namespace kga

#endif // KGA_GREEDY_HPP
