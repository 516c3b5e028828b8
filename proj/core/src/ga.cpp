#include "kga/ga.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace kga {

namespace {

void validate_config(const Instance& inst, const GaConfig& cfg,
                     const Population& init, bool needs_multiple_of_three) {
  if (cfg.population_size < 3) {
    throw std::invalid_argument("population size must be at least 3");
  }
  if (needs_multiple_of_three && cfg.population_size % 3 != 0) {
    throw std::invalid_argument(
        "population size must be divisible by 3 for multi-criteria selection");
  }
  if (cfg.max_generations == 0) {
    throw std::invalid_argument("generation budget must be positive");
  }
  if (!(cfg.mutation_branch_prob >= 0.0 && cfg.mutation_branch_prob <= 1.0)) {
    throw std::invalid_argument("mutation branch probability must be in [0,1]");
  }
  if (init.size() != cfg.population_size) {
    throw std::invalid_argument("initial population size does not match N");
  }
  for (const Solution& s : init) {
    if (s.size() != inst.size()) {
      throw std::invalid_argument("initial individual length mismatch");
    }
    if (!is_feasible(inst, s)) {
      throw std::invalid_argument("initial population must be feasible");
    }
  }
}

void fisher_yates(std::vector<std::size_t>& values, RngStream& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    std::swap(values[i - 1], values[rng.next_index(i)]);
  }
}

// Index of the max-f individual across parents (positions 0..N-1) and
// children (N..2N-1); ties keep the lowest position.
std::size_t merged_best_position(const Population& parents,
                                 const Population& children) {
  std::size_t best = 0;
  double best_f = parents.empty() ? 0.0 : parents[0].total_profit();
  for (std::size_t i = 1; i < parents.size(); ++i) {
    if (parents[i].total_profit() > best_f) {
      best_f = parents[i].total_profit();
      best = i;
    }
  }
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (children[i].total_profit() > best_f) {
      best_f = children[i].total_profit();
      best = parents.size() + i;
    }
  }
  return best;
}

const Solution& merged_at(const Population& parents,
                          const Population& children, std::size_t pos) {
  return pos < parents.size() ? parents[pos] : children[pos - parents.size()];
}

void track_best(GaRunResult& result, const Solution& candidate) {
  if (candidate.total_profit() > result.best_value) {
    result.best_value = candidate.total_profit();
    result.best_solution = candidate;
  }
}

} // namespace

Population make_children(const Population& pop, const GaConfig& cfg,
                         const Instance& inst, RngStream& rng) {
  Population children;
  children.reserve(pop.size());

  if (rng.next_double() < cfg.mutation_branch_prob) {
    for (const Solution& parent : pop) {
      children.push_back(bitwise_mutation(parent, rng));
    }
  } else {
    std::vector<std::size_t> perm(pop.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    fisher_yates(perm, rng);
    std::size_t i = 0;
    for (; i + 1 < perm.size(); i += 2) {
      auto [first, second] =
          one_point_crossover(pop[perm[i]], pop[perm[i + 1]], rng);
      children.push_back(std::move(first));
      children.push_back(std::move(second));
    }
    if (i < perm.size()) {  // odd N: the unpaired parent is copied
      children.push_back(pop[perm[i]]);
    }
  }

  for (Solution& child : children) {
    if (!is_feasible(inst, child)) {
      child = mixed_repair(inst, std::move(child), rng);
    }
  }
  return children;
}

GaRunResult run_msga(const Instance& inst, const GaConfig& cfg,
                     Population init) {
  validate_config(inst, cfg, init, false);
  RngStream rng(cfg.seed);
  Population pop = std::move(init);
  const std::size_t count = cfg.population_size;

  GaRunResult result{0.0, Solution(inst), 0, {}};
  result.best_value = -1.0;
  for (const Solution& s : pop) track_best(result, s);
  if (cfg.record_trace) result.trace.reserve(cfg.max_generations);

  std::vector<double> fitness(2 * count);
  for (std::size_t gen = 0; gen < cfg.max_generations; ++gen) {
    Population children = make_children(pop, cfg, inst, rng);

    const std::size_t best_pos = merged_best_position(pop, children);
    const Solution& elite = merged_at(pop, children, best_pos);
    track_best(result, elite);
    if (cfg.record_trace) result.trace.push_back(elite.total_profit());

    for (std::size_t i = 0; i < count; ++i) {
      fitness[i] = pop[i].total_profit();
      fitness[count + i] = children[i].total_profit();
    }

    Population next;
    next.reserve(count);
    next.push_back(elite);
    for (const std::size_t pick :
         roulette_select_indices(fitness, count - 1, rng)) {
      next.push_back(merged_at(pop, children, pick));
    }
    pop = std::move(next);
  }

  result.generations_run = cfg.max_generations;
  return result;
}

std::vector<std::size_t> diversity_scan(std::span<const ObjectiveVector> sorted,
                                        std::size_t max_keep,
                                        KeyDiffers differs) {
  std::vector<std::size_t> kept;
  if (sorted.empty() || max_keep == 0) return kept;
  kept.push_back(0);
  for (std::size_t i = 1; i < sorted.size() && kept.size() < max_keep; ++i) {
    if (differs(sorted[kept.back()], sorted[i])) {
      kept.push_back(i);
    }
  }
  return kept;
}

bool differs_by_averages(const ObjectiveVector& a, const ObjectiveVector& b) {
  return !nearly_equal(a.avg_profit, b.avg_profit) ||
         !nearly_equal(a.avg_ratio, b.avg_ratio);
}

bool differs_by_item_count(const ObjectiveVector& a, const ObjectiveVector& b) {
  return a.item_count != b.item_count;
}

Population multi_criteria_select(const Population& parents,
                                 const Population& children, std::size_t count,
                                 const Instance& inst, RngStream& rng) {
  if (count < 3 || count % 3 != 0) {
    throw std::invalid_argument(
        "selection size must be a positive multiple of 3");
  }
  if (parents.size() != count || children.size() != count) {
    throw std::invalid_argument("selection expects N parents and N children");
  }

  struct Entry {
    ObjectiveVector obj;
    std::uint32_t pos;  // position in the merged pool, parents first
  };
  std::vector<Entry> pool;
  pool.reserve(2 * count);
  for (std::size_t i = 0; i < 2 * count; ++i) {
    const Solution& s = merged_at(parents, children, i);
    if (is_feasible(inst, s)) {
      pool.push_back({objective_vector(inst, s), static_cast<std::uint32_t>(i)});
    }
  }

  const std::size_t per_pass = count / 3;
  Population next;
  next.reserve(count);
  std::vector<ObjectiveVector> sorted_objs(pool.size());

  auto run_pass = [&](auto primary, KeyDiffers differs) {
    std::sort(pool.begin(), pool.end(), [&](const Entry& a, const Entry& b) {
      const double pa = primary(a.obj);
      const double pb = primary(b.obj);
      if (pa != pb) return pa > pb;
      if (a.obj.profit != b.obj.profit) return a.obj.profit > b.obj.profit;
      return a.pos < b.pos;
    });
    for (std::size_t i = 0; i < pool.size(); ++i) {
      sorted_objs[i] = pool[i].obj;
    }
    for (const std::size_t k : diversity_scan(sorted_objs, per_pass, differs)) {
      next.push_back(merged_at(parents, children, pool[k].pos));
    }
  };

  run_pass([](const ObjectiveVector& o) { return o.profit; },
           differs_by_averages);
  run_pass([](const ObjectiveVector& o) { return o.avg_profit; },
           differs_by_item_count);
  run_pass([](const ObjectiveVector& o) { return o.avg_ratio; },
           differs_by_item_count);

  while (next.size() < count) {
    next.push_back(parents[rng.next_index(count)]);
  }
  return next;
}

GaRunResult run_moga(const Instance& inst, const GaConfig& cfg,
                     Population init) {
  validate_config(inst, cfg, init, true);
  RngStream rng(cfg.seed);
  Population pop = std::move(init);
  const std::size_t count = cfg.population_size;

  GaRunResult result{0.0, Solution(inst), 0, {}};
  result.best_value = -1.0;
  for (const Solution& s : pop) track_best(result, s);
  if (cfg.record_trace) result.trace.reserve(cfg.max_generations);

  for (std::size_t gen = 0; gen < cfg.max_generations; ++gen) {
    Population children = make_children(pop, cfg, inst, rng);

    const std::size_t best_pos = merged_best_position(pop, children);
    const Solution& best = merged_at(pop, children, best_pos);
    track_best(result, best);
    if (cfg.record_trace) result.trace.push_back(best.total_profit());

    pop = multi_criteria_select(pop, children, count, inst, rng);
  }

  result.generations_run = cfg.max_generations;
  return result;
}

} // namespace kga
