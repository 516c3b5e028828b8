#include "kga/solution.hpp"

#include <stdexcept>
#include <utility>

namespace kga {

Solution::Solution(const Instance& inst)
    : inst_(&inst), bits_(inst.size(), 0) {}

Solution::Solution(const Instance& inst, std::vector<std::uint8_t> bits)
    : inst_(&inst), bits_(std::move(bits)) {
  if (bits_.size() != inst.size()) {
    throw std::invalid_argument("bit vector length does not match instance");
  }
  recompute();
}

Solution::Solution(const Instance& inst, std::string_view bit_string)
    : inst_(&inst), bits_(inst.size(), 0) {
  if (bit_string.size() != inst.size()) {
    throw std::invalid_argument("bit string length does not match instance");
  }
  for (std::size_t i = 0; i < bit_string.size(); ++i) {
    if (bit_string[i] != '0' && bit_string[i] != '1') {
      throw std::invalid_argument("bit string must be over {0,1}");
    }
    bits_[i] = bit_string[i] == '1' ? 1 : 0;
  }
  recompute();
}

void Solution::set(std::size_t i, bool value) {
  const std::uint8_t v = value ? 1 : 0;
  if (bits_[i] == v) return;
  bits_[i] = v;
  if (value) {
    profit_ += inst_->profit(i);
    weight_ += inst_->weight(i);
    ++cardinality_;
  } else {
    profit_ -= inst_->profit(i);
    weight_ -= inst_->weight(i);
    --cardinality_;
  }
}

void Solution::recompute() {
  profit_ = 0.0;
  weight_ = 0.0;
  cardinality_ = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) {
      profit_ += inst_->profit(i);
      weight_ += inst_->weight(i);
      ++cardinality_;
    }
  }
}

std::string Solution::to_bit_string() const {
  std::string out(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out[i] = '1';
  }
  return out;
}

std::vector<std::size_t> Solution::packed_items() const {
  std::vector<std::size_t> packed;
  packed.reserve(cardinality_);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) packed.push_back(i);
  }
  return packed;
}

} // namespace kga
