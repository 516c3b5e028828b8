#include "kga/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "kga/evaluation.hpp"
#include "kga/greedy.hpp"
#include "kga/operators.hpp"

namespace kga {

namespace {

std::string instance_name(const char* kind, const GeneratorSpec& spec,
                          std::size_t bound) {
  if (!spec.name.empty()) return spec.name;
  return std::string(kind) + "-n" + std::to_string(spec.n) + "-b" +
         std::to_string(bound) + "-s" + std::to_string(spec.seed);
}

std::pair<std::vector<double>, std::vector<double>> draw_items(
    std::size_t n, std::size_t bound, std::uint64_t seed) {
  RngStream rng(seed);
  std::vector<double> profits(n), weights(n);
  for (std::size_t i = 0; i < n; ++i) {
    profits[i] = static_cast<double>(1 + rng.next_below(bound));
    weights[i] = static_cast<double>(1 + rng.next_below(bound));
  }
  return {std::move(profits), std::move(weights)};
}

std::size_t checked_bound(const GeneratorSpec& spec) {
  const std::size_t bound = spec.bound == 0 ? spec.n : spec.bound;
  if (spec.n < 1 || bound < 1) {
    throw std::invalid_argument("generator needs n >= 1 and B >= 1");
  }
  return bound;
}

// How many copies of an item with weight `unit` fit into `room`, capped at
// `available`. Works in the same tolerance regime as is_feasible.
std::size_t fit_count(double room, double unit, std::size_t available) {
  if (room < 0.0) return 0;
  auto count = static_cast<std::size_t>(
      std::max(0.0, std::floor((room + kWeightTolerance) / unit)));
  count = std::min(count, available);
  while (count > 0 &&
         static_cast<double>(count) * unit > room + kWeightTolerance) {
    --count;
  }
  return count;
}

// Draws k distinct positions from `group` (partial Fisher-Yates) and sets
// them in `bits`.
void set_random_half(std::vector<std::uint8_t>& bits,
                     std::vector<std::size_t> group, std::size_t k,
                     RngStream& rng) {
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + rng.next_index(group.size() - i);
    std::swap(group[i], group[j]);
    bits[group[i]] = 1;
  }
}

} // namespace

Instance gen_restrictive(const GeneratorSpec& spec) {
  if (spec.kind != InstanceKind::restrictive) {
    throw std::invalid_argument("spec kind is not restrictive");
  }
  const std::size_t bound = checked_bound(spec);
  auto [profits, weights] = draw_items(spec.n, bound, spec.seed);
  return Instance(instance_name("restrictive", spec, bound), std::move(profits),
                  std::move(weights), static_cast<double>(bound));
}

Instance gen_average(const GeneratorSpec& spec) {
  if (spec.kind != InstanceKind::average) {
    throw std::invalid_argument("spec kind is not average");
  }
  const std::size_t bound = checked_bound(spec);
  auto [profits, weights] = draw_items(spec.n, bound, spec.seed);
  const double capacity = 0.25 * static_cast<double>(spec.n) *
                          static_cast<double>(bound);
  return Instance(instance_name("average", spec, bound), std::move(profits),
                  std::move(weights), capacity);
}

Instance generate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case InstanceKind::restrictive: return gen_restrictive(spec);
    case InstanceKind::average: return gen_average(spec);
    case InstanceKind::special_i:
      return special_instance_one(spec.n, spec.alpha);
    case InstanceKind::special_ii: return special_instance_two(spec.n);
  }
  throw std::invalid_argument("unknown instance kind");
}

Instance special_instance_one(std::size_t n, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1)");
  }
  const auto units = static_cast<std::size_t>(
      std::ceil(static_cast<double>(n) / (1.0 + alpha)));
  if (units + 1 > n) {
    throw std::invalid_argument("n too small for this item layout");
  }
  const double nd = static_cast<double>(n);
  const double big_profit = alpha * nd / (1.0 + alpha);
  const double big_weight = nd / (1.0 + alpha) - alpha / (4.0 + 4.0 * alpha);
  const double tiny_profit = 1.0 / nd;
  const double tiny_weight = 1.0 / (2.0 * nd);

  std::vector<double> profits(n), weights(n);
  for (std::size_t i = 0; i < units; ++i) {
    profits[i] = 1.0;
    weights[i] = 1.0;
  }
  profits[units] = big_profit;
  weights[units] = big_weight;
  for (std::size_t i = units + 1; i < n; ++i) {
    profits[i] = tiny_profit;
    weights[i] = tiny_weight;
  }
  std::string name = "special-I";
  if (n != 500 || alpha != 0.2) name += "-n" + std::to_string(n);
  return Instance(std::move(name), std::move(profits), std::move(weights),
                  nd / (1.0 + alpha), InitRule::special_i);
}

Instance special_instance_two(std::size_t n) {
  if (n == 0 || n % 4 != 0) {
    throw std::invalid_argument("n must be a positive multiple of 4");
  }
  const double nd = static_cast<double>(n);
  const double root = std::sqrt(nd);
  std::vector<double> profits(n), weights(n);
  for (std::size_t i = 0; i < n / 4; ++i) {
    profits[i] = 0.25 * nd * root + 2.0;
    weights[i] = 0.25 * nd * root + 1.0;
  }
  for (std::size_t i = n / 4; i < n / 2; ++i) {
    profits[i] = 0.3 * nd * root;
    weights[i] = 0.5 * nd * root;
  }
  for (std::size_t i = n / 2; i < n; ++i) {
    profits[i] = root;
    weights[i] = root;
  }
  std::string name = "special-II";
  if (n != 200) name += "-n" + std::to_string(n);
  return Instance(std::move(name), std::move(profits), std::move(weights),
                  0.5 * nd * root, InitRule::special_ii);
}

OracleResult analytic_optimum_special_one(std::size_t n, double alpha) {
  const Instance inst = special_instance_one(n, alpha);
  const std::size_t units = static_cast<std::size_t>(
      std::ceil(static_cast<double>(n) / (1.0 + alpha)));
  const std::size_t tinies = n - units - 1;
  const double tiny_weight = inst.weight(n - 1);
  const double big_weight = inst.weight(units);

  // Items within a block are identical, so a packing is characterized by
  // (big item or not, #units, #tinies), and for fixed big/units the best
  // move is to pack as many tinies as fit. Enumerate unit counts.
  double best = 0.0;
  bool best_with_big = false;
  std::size_t best_units = 0;
  std::size_t best_tinies = 0;
  for (int with_big = 0; with_big <= 1; ++with_big) {
    const double base_weight = with_big ? big_weight : 0.0;
    const double base_profit = with_big ? inst.profit(units) : 0.0;
    const std::size_t unit_cap =
        fit_count(inst.capacity() - base_weight, 1.0, units);
    for (std::size_t k = 0; k <= unit_cap; ++k) {
      const double used = base_weight + static_cast<double>(k);
      const std::size_t t =
          fit_count(inst.capacity() - used, tiny_weight, tinies);
      const double value = base_profit + static_cast<double>(k) +
                           static_cast<double>(t) * inst.profit(n - 1);
      if (value > best) {
        best = value;
        best_with_big = with_big != 0;
        best_units = k;
        best_tinies = t;
      }
    }
  }

  Solution witness(inst);
  for (std::size_t i = 0; i < best_units; ++i) witness.set(i, true);
  if (best_with_big) witness.set(units, true);
  for (std::size_t i = 0; i < best_tinies; ++i) {
    witness.set(units + 1 + i, true);
  }
  return OracleResult{witness.total_profit(), std::move(witness),
                      OracleMethod::analytic};
}

OracleResult analytic_optimum_special_two(std::size_t n) {
  const Instance inst = special_instance_two(n);
  const std::size_t quarter = n / 4;
  const std::size_t half = n / 2;
  const double wa = inst.weight(0);
  const double wb = inst.weight(quarter);
  const double wc = inst.weight(half);

  // Same group argument as above: enumerate counts of A and B items and
  // fill the remaining room with C items.
  double best = 0.0;
  std::size_t best_a = 0, best_b = 0, best_c = 0;
  for (std::size_t a = 0; a <= quarter; ++a) {
    const double wa_total = static_cast<double>(a) * wa;
    if (wa_total > inst.capacity() + kWeightTolerance) break;
    for (std::size_t b = 0; b <= quarter; ++b) {
      const double used = wa_total + static_cast<double>(b) * wb;
      if (used > inst.capacity() + kWeightTolerance) break;
      const std::size_t c = fit_count(inst.capacity() - used, wc, half);
      const double value = static_cast<double>(a) * inst.profit(0) +
                           static_cast<double>(b) * inst.profit(quarter) +
                           static_cast<double>(c) * inst.profit(half);
      if (value > best) {
        best = value;
        best_a = a;
        best_b = b;
        best_c = c;
      }
    }
  }

  Solution witness(inst);
  for (std::size_t i = 0; i < best_a; ++i) witness.set(i, true);
  for (std::size_t i = 0; i < best_b; ++i) witness.set(quarter + i, true);
  for (std::size_t i = 0; i < best_c; ++i) witness.set(half + i, true);
  return OracleResult{witness.total_profit(), std::move(witness),
                      OracleMethod::analytic};
}

namespace {

Solution random_feasible_individual(const Instance& inst, RngStream& rng) {
  std::vector<std::uint8_t> bits(inst.size());
  for (auto& b : bits) b = rng.next_bool() ? 1 : 0;
  Solution s(inst, std::move(bits));
  if (!is_feasible(inst, s)) {
    s = repair(inst, std::move(s), RepairMethod::random_item, rng);
  }
  return s;
}

Solution special_one_individual(const Instance& inst, RngStream& rng) {
  // Big item = the unique heaviest item; unit items sit before it, tiny
  // items after it (generator layout).
  const std::size_t n = inst.size();
  std::size_t big = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (inst.weight(i) > inst.weight(big)) big = i;
  }
  std::vector<std::uint8_t> bits(n, 0);
  bits[big] = 1;
  std::vector<std::size_t> tinies;
  for (std::size_t i = big + 1; i < n; ++i) tinies.push_back(i);
  if (!tinies.empty()) {
    set_random_half(bits, tinies, tinies.size() / 2, rng);
  }
  Solution s(inst, std::move(bits));
  if (!is_feasible(inst, s)) s = mixed_repair(inst, std::move(s), rng);
  return s;
}

Solution special_two_individual(const Instance& inst, RngStream& rng) {
  const std::size_t n = inst.size();
  if (n % 4 != 0) {
    throw std::invalid_argument(
        "special_II initialization needs n divisible by 4");
  }
  const std::size_t quarter = n / 4;
  const std::size_t half = n / 2;
  std::vector<std::uint8_t> bits(n, 0);
  bits[rng.next_index(quarter)] = 1;  // one random group-A item
  std::vector<std::size_t> group_c(half);
  std::iota(group_c.begin(), group_c.end(), half);
  set_random_half(bits, std::move(group_c), half / 2, rng);
  Solution s(inst, std::move(bits));
  if (!is_feasible(inst, s)) s = mixed_repair(inst, std::move(s), rng);
  return s;
}

} // namespace

Population build_initial_population(const Instance& inst, InitRule rule,
                                    std::size_t count, RngStream& rng) {
  Population pop;
  pop.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    switch (rule) {
      case InitRule::none:
        pop.push_back(random_feasible_individual(inst, rng));
        break;
      case InitRule::special_i:
        pop.push_back(special_one_individual(inst, rng));
        break;
      case InitRule::special_ii:
        pop.push_back(special_two_individual(inst, rng));
        break;
    }
  }
  return pop;
}

Population build_greedy_seeded_population(const Instance& inst,
                                          std::size_t count, RngStream& rng) {
  if (count < 3) {
    throw std::invalid_argument("greedy seeding needs a population of >= 3");
  }
  Population pop;
  pop.reserve(count);
  pop.push_back(greedy_solve(inst));
  pop.push_back(greedy_fill(inst, ratio_order(inst)));
  pop.push_back(greedy_fill(inst, profit_order(inst)));
  while (pop.size() < count) {
    pop.push_back(random_feasible_individual(inst, rng));
  }
  return pop;
}

} // namespace kga
