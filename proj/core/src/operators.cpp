#include "kga/operators.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <stdexcept>

#include "kga/evaluation.hpp"

namespace kga {

namespace {

// Geometric gap to the next flipped position, inverse-CDF sampled:
// floor(log(u) / log(1-p)) with u uniform in (0,1].
std::size_t geometric_gap(RngStream& rng, double log_one_minus_p) {
  const double u = 1.0 - rng.next_double();
  return static_cast<std::size_t>(std::log(u) / log_one_minus_p);
}

std::size_t pick_removal_victim(const Instance& inst, const Solution& s,
                                RepairMethod method, RngStream& rng) {
  if (method == RepairMethod::random_item) {
    const auto packed = s.packed_items();
    return packed[rng.next_index(packed.size())];
  }
  std::size_t victim = s.size();
  double victim_key = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!s.test(i)) continue;
    const double key = method == RepairMethod::ratio_greedy ? inst.ratio(i)
                                                            : inst.profit(i);
    if (key < victim_key) {  // strict: ties keep the lowest index
      victim_key = key;
      victim = i;
    }
  }
  return victim;
}

} // namespace

Solution bitwise_mutation(const Solution& s, RngStream& rng) {
  Solution child = s;
  const std::size_t n = s.size();
  if (n == 1) {  // flip probability 1/n = 1
    child.flip(0);
    return child;
  }
  const double p = 1.0 / static_cast<double>(n);
  const double log_one_minus_p = std::log1p(-p);
  std::size_t i = geometric_gap(rng, log_one_minus_p);
  while (i < n) {
    child.flip(i);
    i += 1 + geometric_gap(rng, log_one_minus_p);
  }
  return child;
}

std::pair<Solution, Solution> one_point_crossover_at(const Solution& a,
                                                     const Solution& b,
                                                     std::size_t k) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("crossover parents differ in length");
  }
  if (k < 1 || k > a.size()) {
    throw std::invalid_argument("crossover point out of range");
  }
  std::vector<std::uint8_t> first(a.bits());
  std::vector<std::uint8_t> second(b.bits());
  for (std::size_t i = k; i < a.size(); ++i) {
    std::swap(first[i], second[i]);
  }
  return {Solution(a.instance(), std::move(first)),
          Solution(a.instance(), std::move(second))};
}

std::pair<Solution, Solution> one_point_crossover(const Solution& a,
                                                  const Solution& b,
                                                  RngStream& rng) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("crossover parents differ in length");
  }
  const std::size_t k = 1 + rng.next_index(a.size());
  return one_point_crossover_at(a, b, k);
}

Solution repair(const Instance& inst, Solution s, RepairMethod method,
                RngStream& rng) {
  while (!is_feasible(inst, s)) {
    s.set(pick_removal_victim(inst, s, method, rng), false);
  }
  return s;
}

RepairMethod draw_repair_method(RngStream& rng) {
  switch (rng.next_below(3)) {
    case 0: return RepairMethod::ratio_greedy;
    case 1: return RepairMethod::profit_greedy;
    default: return RepairMethod::random_item;
  }
}

Solution mixed_repair(const Instance& inst, Solution s, RngStream& rng) {
  const RepairMethod method = draw_repair_method(rng);
  return repair(inst, std::move(s), method, rng);
}

std::vector<std::size_t> roulette_select_indices(
    std::span<const double> fitness, std::size_t count, RngStream& rng) {
  if (count > 0 && fitness.empty()) {
    throw std::invalid_argument("roulette selection over an empty pool");
  }
  std::vector<std::size_t> picks;
  picks.reserve(count);
  if (count == 0) return picks;

  std::vector<double> cumulative(fitness.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < fitness.size(); ++i) {
    if (fitness[i] < 0.0) {
      throw std::invalid_argument("roulette fitness must be non-negative");
    }
    sum += fitness[i];
    cumulative[i] = sum;
  }

  if (sum <= 0.0) {
    // Degenerate wheel; fall back to uniform draws.
    std::cerr << "kga: roulette selection saw all-zero fitness, "
                 "falling back to uniform\n";
    for (std::size_t d = 0; d < count; ++d) {
      picks.push_back(rng.next_index(fitness.size()));
    }
    return picks;
  }

  for (std::size_t d = 0; d < count; ++d) {
    const double u = rng.next_double() * sum;
    const auto it =
        std::upper_bound(cumulative.begin(), cumulative.end(), u);
    picks.push_back(std::min<std::size_t>(
        static_cast<std::size_t>(it - cumulative.begin()),
        fitness.size() - 1));
  }
  return picks;
}

Population roulette_select(const Population& pool,
                           std::span<const double> fitness, std::size_t count,
                           RngStream& rng) {
  if (pool.size() != fitness.size()) {
    throw std::invalid_argument("pool and fitness sizes differ");
  }
  Population out;
  out.reserve(count);
  for (const std::size_t i : roulette_select_indices(fitness, count, rng)) {
    out.push_back(pool[i]);
  }
  return out;
}

} // namespace kga
