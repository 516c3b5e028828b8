#include "kga/evaluation.hpp"

#include <cmath>
#include <stdexcept>

namespace kga {

namespace {

void check_length(const Instance& inst, const Solution& s) {
  if (s.size() != inst.size()) {
    throw std::invalid_argument("solution length does not match instance");
  }
}

} // namespace

double evaluate_f(const Instance& inst, const Solution& s) {
  check_length(inst, s);
  double sum = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.test(i)) sum += inst.profit(i);
  }
  return sum;
}

double evaluate_weight(const Instance& inst, const Solution& s) {
  check_length(inst, s);
  double sum = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.test(i)) sum += inst.weight(i);
  }
  return sum;
}

bool is_feasible(const Instance& inst, const Solution& s) {
  check_length(inst, s);
  return s.total_weight() <= inst.capacity() + kWeightTolerance;
}

double helper_avg_profit(const Instance& inst, const Solution& s) {
  check_length(inst, s);
  const auto count = s.cardinality();
  if (count == 0) return 0.0;
  return s.total_profit() / static_cast<double>(count);
}

double helper_avg_ratio(const Instance& inst, const Solution& s) {
  check_length(inst, s);
  const auto count = s.cardinality();
  if (count == 0) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.test(i)) sum += inst.ratio(i);
  }
  return sum / static_cast<double>(count);
}

std::size_t helper_item_count(const Solution& s) { return s.cardinality(); }

ObjectiveVector objective_vector(const Instance& inst, const Solution& s) {
  check_length(inst, s);
  ObjectiveVector obj;
  obj.item_count = s.cardinality();
  obj.profit = s.total_profit();
  if (obj.item_count == 0) return obj;
  const auto count = static_cast<double>(obj.item_count);
  obj.avg_profit = obj.profit / count;
  double ratio_sum = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.test(i)) ratio_sum += inst.ratio(i);
  }
  obj.avg_ratio = ratio_sum / count;
  return obj;
}

bool nearly_equal(double a, double b) {
  const double diff = std::fabs(a - b);
  return diff <= 1e-9 * std::max(std::fabs(a), std::fabs(b));
}

} // namespace kga
