#ifndef KGA_INSTANCE_HPP
#define KGA_INSTANCE_HPP

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kga {

/// Tag carried by instance files that prescribes how initial GA populations
/// are built. Plain instances have no rule (random bits + random repair).
enum class InitRule { none, special_i, special_ii };

std::string_view to_string(InitRule rule);
InitRule init_rule_from_string(std::string_view tag);

/// A 0-1 knapsack instance: n items with positive profits and weights, and
/// a positive capacity. Immutable after construction and safe to share
/// across threads.
class Instance {
public:
  Instance(std::string name, std::vector<double> profits,
           std::vector<double> weights, double capacity,
           InitRule init_rule = InitRule::none);

  const std::string& name() const { return name_; }
  std::size_t size() const { return profits_.size(); }
  double capacity() const { return capacity_; }
  InitRule init_rule() const { return init_rule_; }

  double profit(std::size_t i) const { return profits_[i]; }
  double weight(std::size_t i) const { return weights_[i]; }
  /// Profit-to-weight ratio p_i / w_i, precomputed at construction.
  double ratio(std::size_t i) const { return ratios_[i]; }

  std::span<const double> profits() const { return profits_; }
  std::span<const double> weights() const { return weights_; }

  /// JSON document layout:
  ///   {"name": str, "n": int, "capacity": num,
  ///    "items": [{"profit": num, "weight": num}, ...],
  ///    "initial_population_rule": str (optional)}
  /// Numbers survive a round trip exactly (shortest-round-trip printing).
  static Instance from_json_text(const std::string& text);
  std::string to_json_text() const;

  static Instance load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

private:
  std::string name_;
  std::vector<double> profits_;
  std::vector<double> weights_;
  std::vector<double> ratios_;
  double capacity_;
  InitRule init_rule_;
};

} // namespace kga

#endif // KGA_INSTANCE_HPP
