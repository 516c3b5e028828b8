#ifndef KGA_GA_HPP
#define KGA_GA_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "kga/evaluation.hpp"
#include "kga/instance.hpp"
#include "kga/operators.hpp"
#include "kga/rng.hpp"
#include "kga/solution.hpp"

namespace kga {

struct GaConfig {
  std::size_t population_size = 0;  // N; >= 3, and divisible by 3 for MOGA
  std::size_t max_generations = 0;  // exactly this many generations run
  double mutation_branch_prob = 0.9;  // P(mutation generation); else crossover
  std::uint64_t seed = 0;
  bool record_trace = false;
};

struct GaRunResult {
  double best_value = 0.0;  // max f over every feasible individual seen
  Solution best_solution;
  std::size_t generations_run = 0;
  std::vector<double> trace;  // per-generation best f, if record_trace
};

/// One brood of N children. A single draw picks the generation's branch:
/// with probability mutation_branch_prob every parent is bitwise-mutated,
/// otherwise the parents are shuffled, paired consecutively, and each
/// pair crossed (an odd leftover parent is copied). Every infeasible
/// child then goes through mixed repair, so all N children come back
/// feasible.
Population make_children(const Population& pop, const GaConfig& cfg,
                         const Instance& inst, RngStream& rng);

/// Mixed-strategy GA: per generation, children via make_children, then the
/// single best-f individual of parents+children survives (elitism) and the
/// remaining N-1 slots are filled by roulette-wheel selection over
/// parents+children with fitness f.
GaRunResult run_msga(const Instance& inst, const GaConfig& cfg,
                     Population init);

/// Diversity scan used by each selection pass: `sorted` is the merged pool
/// in the pass's sort order; the scan keeps the first element and every
/// later element whose key (per `differs`) is distinct from the most
/// recently kept one, stopping after max_keep. Returns kept positions.
using KeyDiffers = bool (*)(const ObjectiveVector&, const ObjectiveVector&);
std::vector<std::size_t> diversity_scan(std::span<const ObjectiveVector> sorted,
                                        std::size_t max_keep,
                                        KeyDiffers differs);

/// Keys for the scans: avg_profit or avg_ratio differ (1e-9 relative), and
/// item_count differs (exact).
bool differs_by_averages(const ObjectiveVector& a, const ObjectiveVector& b);
bool differs_by_item_count(const ObjectiveVector& a, const ObjectiveVector& b);

/// Survivor selection of the multi-objective GA. Three passes over the
/// merged feasible parents+children, each contributing at most N/3:
///   1. sort by f descending, keep an avg_profit/avg_ratio-diverse prefix;
///   2. sort by avg_profit descending, keep an item_count-diverse prefix;
///   3. sort by avg_ratio descending, keep an item_count-diverse prefix.
/// All sorts break ties by f descending then original pool position, so
/// selection is deterministic. Individuals kept by several passes appear
/// several times. If fewer than N were kept, uniformly drawn parents fill
/// the remainder. Returns exactly N individuals, always including a
/// maximum-f one (pass 1 keeps its sorted head).
/// Requires |parents| = |children| = N and N divisible by 3.
Population multi_criteria_select(const Population& parents,
                                 const Population& children, std::size_t count,
                                 const Instance& inst, RngStream& rng);

/// Multi-objective GA: same child generation as the MSGA (0.9/0.1 branch,
/// mixed repair) with multi_criteria_select as survivor selection.
GaRunResult run_moga(const Instance& inst, const GaConfig& cfg,
                     Population init);

} // namespace kga

#endif // KGA_GA_HPP
