#ifndef KGA_SOLUTION_HPP
#define KGA_SOLUTION_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kga/instance.hpp"

namespace kga {

/// A candidate knapsack packing: one bit per item plus cached total profit,
/// total weight and item count. The caches are updated incrementally on
/// single-bit flips; recomputation from the bits is the test oracle for
/// them. Value type; mutable, so confine each Solution to one thread.
class Solution {
public:
  /// Empty packing (all bits zero).
  explicit Solution(const Instance& inst);
  Solution(const Instance& inst, std::vector<std::uint8_t> bits);
  /// Parse "00011"-style strings; handy in tests.
  Solution(const Instance& inst, std::string_view bit_string);

  const Instance& instance() const { return *inst_; }
  std::size_t size() const { return bits_.size(); }

  bool test(std::size_t i) const { return bits_[i] != 0; }
  void set(std::size_t i, bool value);
  void flip(std::size_t i) { set(i, !test(i)); }

  double total_profit() const { return profit_; }
  double total_weight() const { return weight_; }
  std::size_t cardinality() const { return cardinality_; }

  const std::vector<std::uint8_t>& bits() const { return bits_; }
  std::string to_bit_string() const;
  /// Indices of packed items, ascending.
  std::vector<std::size_t> packed_items() const;

  friend bool operator==(const Solution& a, const Solution& b) {
    return a.bits_ == b.bits_;
  }

private:
  void recompute();

  const Instance* inst_;
  std::vector<std::uint8_t> bits_;
  double profit_ = 0.0;
  double weight_ = 0.0;
  std::size_t cardinality_ = 0;
};

using Population = std::vector<Solution>;

} // namespace kga

#endif // KGA_SOLUTION_HPP
