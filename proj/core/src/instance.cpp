#include "kga/instance.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace kga {

std::string_view to_string(InitRule rule) {
  switch (rule) {
    case InitRule::none: return "";
    case InitRule::special_i: return "special_I";
    case InitRule::special_ii: return "special_II";
  }
  return "";
}

InitRule init_rule_from_string(std::string_view tag) {
  if (tag.empty()) return InitRule::none;
  if (tag == "special_I") return InitRule::special_i;
  if (tag == "special_II") return InitRule::special_ii;
  throw std::invalid_argument("unknown initial_population_rule: " +
                              std::string(tag));
}

Instance::Instance(std::string name, std::vector<double> profits,
                   std::vector<double> weights, double capacity,
                   InitRule init_rule)
    : name_(std::move(name)),
      profits_(std::move(profits)),
      weights_(std::move(weights)),
      capacity_(capacity),
      init_rule_(init_rule) {
  if (profits_.empty()) {
    throw std::invalid_argument("instance needs at least one item");
  }
  if (profits_.size() != weights_.size()) {
    throw std::invalid_argument("profits and weights differ in length");
  }
  if (!(capacity_ > 0.0)) {
    throw std::invalid_argument("capacity must be positive");
  }
  ratios_.reserve(profits_.size());
  for (std::size_t i = 0; i < profits_.size(); ++i) {
    if (!(profits_[i] > 0.0) || !(weights_[i] > 0.0)) {
      throw std::invalid_argument("profits and weights must be positive");
    }
    ratios_.push_back(profits_[i] / weights_[i]);
  }
}

Instance Instance::from_json_text(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  if (!doc.is_object()) {
    throw std::invalid_argument("instance document must be a JSON object");
  }
  const auto n = doc.at("n").get<std::size_t>();
  const auto& items = doc.at("items");
  if (!items.is_array() || items.size() != n) {
    throw std::invalid_argument("items array must hold exactly n entries");
  }
  std::vector<double> profits, weights;
  profits.reserve(n);
  weights.reserve(n);
  for (const auto& item : items) {
    profits.push_back(item.at("profit").get<double>());
    weights.push_back(item.at("weight").get<double>());
  }
  InitRule rule = InitRule::none;
  if (auto it = doc.find("initial_population_rule"); it != doc.end()) {
    rule = init_rule_from_string(it->get<std::string>());
  }
  return Instance(doc.at("name").get<std::string>(), std::move(profits),
                  std::move(weights), doc.at("capacity").get<double>(), rule);
}

std::string Instance::to_json_text() const {
  nlohmann::json doc;
  doc["name"] = name_;
  doc["n"] = size();
  doc["capacity"] = capacity_;
  auto items = nlohmann::json::array();
  for (std::size_t i = 0; i < size(); ++i) {
    items.push_back({{"profit", profits_[i]}, {"weight", weights_[i]}});
  }
  doc["items"] = std::move(items);
  if (init_rule_ != InitRule::none) {
    doc["initial_population_rule"] = std::string(to_string(init_rule_));
  }
  return doc.dump(2) + "\n";
}

Instance Instance::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open instance file: " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_json_text(buffer.str());
}

void Instance::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) {
    throw std::invalid_argument("cannot write instance file: " +
                                path.string());
  }
  out << to_json_text();
}

} // namespace kga
