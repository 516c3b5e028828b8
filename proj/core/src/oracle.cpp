#include "kga/oracle.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "kga/errors.hpp"
#include "kga/evaluation.hpp"

namespace kga {

namespace {

constexpr std::size_t kMaxExhaustiveItems = 24;
constexpr double kMaxDpCells = 1e8;

// Lexicographic order on bit strings (item 0 leftmost): the first
// differing item decides, and the mask with a 0 there is lower.
bool lex_less(std::uint32_t a, std::uint32_t b) {
  const std::uint32_t diff = a ^ b;
  if (diff == 0) return false;
  const int first = std::countr_zero(diff);
  return ((a >> first) & 1u) == 0;
}

bool integer_valued(double v) { return std::fabs(v - std::round(v)) <= 1e-9; }

Solution mask_to_solution(const Instance& inst, std::uint32_t mask) {
  Solution s(inst);
  for (std::size_t i = 0; i < inst.size(); ++i) {
    if ((mask >> i) & 1u) s.set(i, true);
  }
  return s;
}

} // namespace

OracleResult solve_exhaustive(const Instance& inst) {
  const std::size_t n = inst.size();
  if (n > kMaxExhaustiveItems) {
    throw BudgetError("exhaustive search limited to 24 items, got n = " +
                      std::to_string(n));
  }
  const double limit = inst.capacity() + kWeightTolerance;

  // Gray-code walk: one bit flips per step, so profit and weight update in
  // O(1). The sums stay exact for integer-valued profits/weights.
  std::uint32_t mask = 0;
  double profit = 0.0;
  double weight = 0.0;
  std::uint32_t best_mask = 0;  // empty packing, always feasible
  double best_profit = 0.0;

  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < total; ++step) {
    const int j = std::countr_zero(step);
    const std::uint32_t bit = std::uint32_t{1} << j;
    if (mask & bit) {
      profit -= inst.profit(j);
      weight -= inst.weight(j);
    } else {
      profit += inst.profit(j);
      weight += inst.weight(j);
    }
    mask ^= bit;
    if (weight <= limit) {
      if (profit > best_profit ||
          (profit == best_profit && lex_less(mask, best_mask))) {
        best_profit = profit;
        best_mask = mask;
      }
    }
  }

  Solution witness = mask_to_solution(inst, best_mask);
  return OracleResult{witness.total_profit(), std::move(witness),
                      OracleMethod::exhaustive};
}

OracleResult solve_dp(const Instance& inst) {
  const std::size_t n = inst.size();
  if (!integer_valued(inst.capacity())) {
    throw NotApplicableError("weight-indexed DP needs an integer capacity");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!integer_valued(inst.weight(i))) {
      throw NotApplicableError("weight-indexed DP needs integer weights");
    }
  }
  const auto cap = static_cast<std::int64_t>(std::llround(inst.capacity()));
  if (static_cast<double>(n) * static_cast<double>(cap) > kMaxDpCells) {
    throw BudgetError("DP table would exceed the n * capacity <= 1e8 budget");
  }

  const std::size_t width = static_cast<std::size_t>(cap) + 1;
  std::vector<double> best(width, 0.0);
  std::vector<bool> take(n * width, false);  // bit-packed choice table

  for (std::size_t i = 0; i < n; ++i) {
    const auto w = static_cast<std::size_t>(std::llround(inst.weight(i)));
    const double p = inst.profit(i);
    if (w > static_cast<std::size_t>(cap)) continue;
    for (std::size_t c = width; c-- > w;) {
      const double candidate = best[c - w] + p;
      if (candidate > best[c]) {
        best[c] = candidate;
        take[i * width + c] = true;
      }
    }
  }

  std::vector<std::uint8_t> bits(n, 0);
  std::size_t c = static_cast<std::size_t>(cap);
  for (std::size_t i = n; i-- > 0;) {
    if (take[i * width + c]) {
      bits[i] = 1;
      c -= static_cast<std::size_t>(std::llround(inst.weight(i)));
    }
  }
  Solution witness(inst, std::move(bits));
  return OracleResult{witness.total_profit(), std::move(witness),
                      OracleMethod::dynamic_programming};
}

} // namespace kga
