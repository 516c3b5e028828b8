#ifndef KGA_EVALUATION_HPP
#define KGA_EVALUATION_HPP

#include <cstddef>

#include "kga/instance.hpp"
#include "kga/solution.hpp"

namespace kga {

/// Absolute slack allowed on the capacity constraint. Covers instances
/// whose optimum fills the knapsack exactly in real arithmetic, where the
/// floating-point summation order must not flip feasibility.
inline constexpr double kWeightTolerance = 1e-6;

/// Total profit of the packed items, summed afresh from the bits.
double evaluate_f(const Instance& inst, const Solution& s);

/// Total weight of the packed items, summed afresh from the bits.
double evaluate_weight(const Instance& inst, const Solution& s);

/// True iff the cached total weight is within capacity + kWeightTolerance.
bool is_feasible(const Instance& inst, const Solution& s);

/// Mean profit of packed items; 0 for the empty packing (the one value
/// that never beats a non-empty packing under maximization).
double helper_avg_profit(const Instance& inst, const Solution& s);

/// Mean profit-to-weight ratio of packed items; 0 for the empty packing.
double helper_avg_ratio(const Instance& inst, const Solution& s);

/// Number of packed items.
std::size_t helper_item_count(const Solution& s);

/// The four criteria the multi-objective GA maximizes simultaneously.
struct ObjectiveVector {
  double profit = 0.0;      // total profit
  double avg_profit = 0.0;  // mean profit per packed item
  double avg_ratio = 0.0;   // mean profit-to-weight ratio per packed item
  std::size_t item_count = 0;
};

/// Evaluates all four criteria. Defined for infeasible solutions too;
/// callers gate on feasibility.
ObjectiveVector objective_vector(const Instance& inst, const Solution& s);

/// Relative comparison used by the selection operator's diversity scans:
/// values within 1e-9 relative of each other count as equal.
bool nearly_equal(double a, double b);

} // namespace kga

#endif // KGA_EVALUATION_HPP
