#ifndef KGA_OPERATORS_HPP
#define KGA_OPERATORS_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "kga/instance.hpp"
#include "kga/rng.hpp"
#include "kga/solution.hpp"

namespace kga {

/// How an overweight packing sheds items, one at a time, until feasible.
enum class RepairMethod {
  ratio_greedy,   // drop the packed item with the smallest profit/weight
  profit_greedy,  // drop the packed item with the smallest profit
  random_item,    // drop a uniformly random packed item
};

/// Flips each bit independently with probability 1/n. Implemented with
/// geometric gap sampling (the gap to the next flipped position is
/// geometrically distributed), which draws O(flips) random numbers instead
/// of O(n) while producing the exact per-bit Bernoulli distribution.
Solution bitwise_mutation(const Solution& s, RngStream& rng);

/// One-point crossover at a fixed cut k in {1..n}: children are
/// (a_1..a_k b_{k+1}..b_n) and (b_1..b_k a_{k+1}..a_n). k = n copies the
/// parents.
std::pair<Solution, Solution> one_point_crossover_at(const Solution& a,
                                                     const Solution& b,
                                                     std::size_t k);

/// One-point crossover with the cut drawn uniformly from {1..n}.
/// Throws std::invalid_argument if the parents' lengths differ.
std::pair<Solution, Solution> one_point_crossover(const Solution& a,
                                                  const Solution& b,
                                                  RngStream& rng);

/// Removes items per `method` until the packing is feasible. A feasible
/// input is returned unchanged. Greedy methods break ties by lowest item
/// index. Never adds an item, so output bits are a subset of input bits
/// and the loop always terminates (the empty packing is feasible).
Solution repair(const Instance& inst, Solution s, RepairMethod method,
                RngStream& rng);

/// One of the three repair methods, uniformly at random.
RepairMethod draw_repair_method(RngStream& rng);

/// Draws a repair method with probability 1/3 each, then repairs with it.
Solution mixed_repair(const Instance& inst, Solution s, RngStream& rng);

/// Fitness-proportional sampling with replacement: draws `count` members,
/// each draw picking index i with probability f_i / sum(f). All fitness
/// values must be non-negative; if they are all zero the draw falls back
/// to uniform (noted on stderr, not an error).
std::vector<std::size_t> roulette_select_indices(std::span<const double> fitness,
                                                 std::size_t count,
                                                 RngStream& rng);

Population roulette_select(const Population& pool,
                           std::span<const double> fitness, std::size_t count,
                           RngStream& rng);

} // namespace kga

#endif // KGA_OPERATORS_HPP
