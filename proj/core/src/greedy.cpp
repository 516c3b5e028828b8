#include "kga/greedy.hpp"

#include <algorithm>
#include <numeric>

#include "kga/evaluation.hpp"

namespace kga {

namespace {

template <typename Key>
std::vector<std::size_t> order_by_descending(const Instance& inst, Key key) {
  std::vector<std::size_t> order(inst.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double ka = key(a);
    const double kb = key(b);
    if (ka != kb) return ka > kb;
    return a < b;  // ties keep original item order
  });
  return order;
}

} // namespace

std::vector<std::size_t> ratio_order(const Instance& inst) {
  return order_by_descending(inst,
                             [&](std::size_t i) { return inst.ratio(i); });
}

std::vector<std::size_t> profit_order(const Instance& inst) {
  return order_by_descending(inst,
                             [&](std::size_t i) { return inst.profit(i); });
}

Solution greedy_fill(const Instance& inst,
                     std::span<const std::size_t> order) {
  Solution s(inst);
  const double limit = inst.capacity() + kWeightTolerance;
  for (const std::size_t item : order) {
    if (s.total_weight() + inst.weight(item) <= limit) {
      s.set(item, true);
    }
  }
  return s;
}

Solution greedy_solve(const Instance& inst) {
  Solution by_ratio = greedy_fill(inst, ratio_order(inst));
  Solution by_profit = greedy_fill(inst, profit_order(inst));
  return by_profit.total_profit() > by_ratio.total_profit() ? by_profit
                                                            : by_ratio;
}

} // namespace kga
