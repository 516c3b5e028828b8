#include "kga/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "kga/ga.hpp"
#include "kga/generator.hpp"
#include "kga/greedy.hpp"
#include "kga/oracle.hpp"
#include "kga/rng.hpp"

namespace kga {

namespace {

// Shortest round-trip decimal form.
std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

} // namespace

std::string_view to_string(Algorithm alg) {
  switch (alg) {
    case Algorithm::greedy: return "greedy";
    case Algorithm::dp: return "dp";
    case Algorithm::msga: return "msga";
    case Algorithm::greedy_msga: return "greedy-msga";
    case Algorithm::moga: return "moga";
  }
  return "";
}

Algorithm algorithm_from_string(std::string_view name) {
  if (name == "greedy") return Algorithm::greedy;
  if (name == "dp") return Algorithm::dp;
  if (name == "msga") return Algorithm::msga;
  if (name == "greedy-msga") return Algorithm::greedy_msga;
  if (name == "moga") return Algorithm::moga;
  throw std::invalid_argument("unknown algorithm: " + std::string(name));
}

ReportFormat report_format_from_string(std::string_view name) {
  if (name == "csv") return ReportFormat::csv;
  if (name == "json") return ReportFormat::json;
  if (name == "markdown") return ReportFormat::markdown;
  throw std::invalid_argument("unknown report format: " + std::string(name));
}

Stats stats(std::span<const double> values) {
  if (values.empty()) {
    throw std::invalid_argument("stats over an empty value list");
  }
  Stats out;
  out.max = *std::max_element(values.begin(), values.end());
  out.average = std::accumulate(values.begin(), values.end(), 0.0) /
                static_cast<double>(values.size());
  if (values.size() >= 2) {
    double ss = 0.0;
    for (const double v : values) {
      const double d = v - out.average;
      ss += d * d;
    }
    out.stdev = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return out;
}

namespace {

std::string emit_csv(const RunReport& report, bool include_timing) {
  std::ostringstream out;
  if (report.partial) out << "# partial: suite stopped at --max-seconds\n";
  out << "instance,algorithm,max,average,stdev";
  if (include_timing) out << ",seconds";
  out << "\n";
  for (const ReportRow& row : report.rows) {
    out << row.instance << ',' << row.algorithm << ','
        << format_double(row.max) << ',' << format_double(row.average) << ','
        << format_double(row.stdev);
    if (include_timing) out << ',' << format_double(row.seconds);
    out << "\n";
  }
  return out.str();
}

nlohmann::json report_to_json(const RunReport& report, bool include_timing) {
  nlohmann::json doc;
  doc["base_seed"] = report.base_seed;
  doc["partial"] = report.partial;
  auto rows = nlohmann::json::array();
  for (const ReportRow& row : report.rows) {
    nlohmann::json r;
    r["instance"] = row.instance;
    r["algorithm"] = row.algorithm;
    r["max"] = row.max;
    r["average"] = row.average;
    r["stdev"] = row.stdev;
    r["per_run"] = row.per_run;
    if (include_timing) r["seconds"] = row.seconds;
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  return doc;
}

// One table row per instance, one column group per algorithm; algorithms
// that ran once (greedy, dp) collapse to a single value column.
std::string emit_markdown(const RunReport& report) {
  std::vector<std::string> instances;
  std::vector<std::string> algorithms;
  for (const ReportRow& row : report.rows) {
    if (std::find(instances.begin(), instances.end(), row.instance) ==
        instances.end()) {
      instances.push_back(row.instance);
    }
    if (std::find(algorithms.begin(), algorithms.end(), row.algorithm) ==
        algorithms.end()) {
      algorithms.push_back(row.algorithm);
    }
  }
  auto find_row = [&](const std::string& inst,
                      const std::string& alg) -> const ReportRow* {
    for (const ReportRow& row : report.rows) {
      if (row.instance == inst && row.algorithm == alg) return &row;
    }
    return nullptr;
  };
  auto single_valued = [&](const std::string& alg) {
    for (const ReportRow& row : report.rows) {
      if (row.algorithm == alg && row.per_run.size() > 1) return false;
    }
    return true;
  };

  std::ostringstream out;
  if (report.partial) out << "*(partial: suite stopped at --max-seconds)*\n\n";
  out << "| instance |";
  std::size_t columns = 1;
  for (const auto& alg : algorithms) {
    if (single_valued(alg)) {
      out << ' ' << alg << " |";
      columns += 1;
    } else {
      out << ' ' << alg << " max | " << alg << " average | " << alg
          << " stdev |";
      columns += 3;
    }
  }
  out << "\n|";
  for (std::size_t i = 0; i < columns; ++i) out << " --- |";
  out << "\n";
  for (const auto& inst : instances) {
    out << "| " << inst << " |";
    for (const auto& alg : algorithms) {
      const ReportRow* row = find_row(inst, alg);
      const bool collapse = single_valued(alg);
      if (row == nullptr) {
        out << (collapse ? " |" : " | | |");
        continue;
      }
      if (collapse) {
        out << ' ' << format_double(row->max) << " |";
      } else {
        out << ' ' << format_double(row->max) << " | "
            << format_double(row->average) << " | "
            << format_double(row->stdev) << " |";
      }
    }
    out << "\n";
  }
  return out.str();
}

} // namespace

std::string emit_report(const RunReport& report, ReportFormat format,
                        bool include_timing) {
  switch (format) {
    case ReportFormat::csv: return emit_csv(report, include_timing);
    case ReportFormat::json:
      return report_to_json(report, include_timing).dump(2) + "\n";
    case ReportFormat::markdown: return emit_markdown(report);
  }
  throw std::invalid_argument("unknown report format");
}

RunReport parse_report_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  RunReport report;
  report.base_seed = doc.at("base_seed").get<std::uint64_t>();
  report.partial = doc.at("partial").get<bool>();
  for (const auto& r : doc.at("rows")) {
    ReportRow row;
    row.instance = r.at("instance").get<std::string>();
    row.algorithm = r.at("algorithm").get<std::string>();
    row.max = r.at("max").get<double>();
    row.average = r.at("average").get<double>();
    row.stdev = r.at("stdev").get<double>();
    row.per_run = r.at("per_run").get<std::vector<double>>();
    if (auto it = r.find("seconds"); it != r.end()) {
      row.seconds = it->get<double>();
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

namespace {

struct GaBudget {
  std::size_t population;
  std::size_t generations;
};

std::size_t round_up_to_multiple_of_three(std::size_t n) {
  return 3 * ((n + 2) / 3);
}

std::size_t scaled(std::size_t generations, double scale) {
  const double s = std::max(1.0, std::round(static_cast<double>(generations) *
                                            scale));
  return static_cast<std::size_t>(s);
}

// Paper-protocol budgets: random instances use N = 3n with 30n (MSGA) or
// 10n (MOGA) generations; the special instances use N = n with 15n or 5n.
GaBudget suite_budget(const Instance& inst, Algorithm alg, double scale) {
  const std::size_t n = inst.size();
  const bool special = inst.init_rule() != InitRule::none;
  GaBudget budget{};
  budget.population = special ? n : 3 * n;
  switch (alg) {
    case Algorithm::msga:
    case Algorithm::greedy_msga:
      budget.generations = special ? 15 * n : 30 * n;
      break;
    case Algorithm::moga:
      budget.generations = special ? 5 * n : 10 * n;
      budget.population = round_up_to_multiple_of_three(budget.population);
      break;
    default:
      break;
  }
  budget.generations = scaled(budget.generations, scale);
  return budget;
}

double run_single(const Instance& inst, Algorithm alg, const GaBudget& budget,
                  std::uint64_t run_seed) {
  switch (alg) {
    case Algorithm::greedy: return greedy_solve(inst).total_profit();
    case Algorithm::dp: return solve_dp(inst).optimum;
    default: break;
  }
  GaConfig cfg;
  cfg.population_size = budget.population;
  cfg.max_generations = budget.generations;
  cfg.seed = seed_combine(run_seed, 2);
  RngStream init_rng(seed_combine(run_seed, 1));
  if (alg == Algorithm::greedy_msga) {
    Population init =
        build_greedy_seeded_population(inst, cfg.population_size, init_rng);
    return run_msga(inst, cfg, std::move(init)).best_value;
  }
  Population init = build_initial_population(inst, inst.init_rule(),
                                             cfg.population_size, init_rng);
  if (alg == Algorithm::moga) {
    return run_moga(inst, cfg, std::move(init)).best_value;
  }
  return run_msga(inst, cfg, std::move(init)).best_value;
}

std::size_t resolve_threads(std::size_t requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("KGA_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && parsed > 0) return static_cast<std::size_t>(parsed);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

} // namespace

RunReport run_paper_suite(const SuiteOptions& options) {
  if (options.runs_per_cell < 1) {
    throw std::invalid_argument("runs per cell must be >= 1");
  }
  if (!(options.budget_scale > 0.0)) {
    throw std::invalid_argument("budget scale must be positive");
  }

  std::vector<Instance> instances;
  instances.reserve(22);
  for (std::size_t i = 0; i < 20; ++i) {
    GeneratorSpec spec;
    spec.kind = i < 10 ? InstanceKind::restrictive : InstanceKind::average;
    spec.n = 100;
    spec.seed = options.base_seed + i;  // one instance per seed offset
    const std::size_t ordinal = (i % 10) + 1;
    spec.name = std::string(i < 10 ? "restrictive-" : "average-") +
                (ordinal < 10 ? "0" : "") + std::to_string(ordinal);
    instances.push_back(generate(spec));
  }
  instances.push_back(special_instance_one());
  instances.push_back(special_instance_two());

  constexpr Algorithm kSuiteAlgorithms[] = {Algorithm::greedy, Algorithm::msga,
                                            Algorithm::greedy_msga,
                                            Algorithm::moga};

  struct Task {
    std::size_t instance_index;
    Algorithm alg;
    int run_index;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    for (const Algorithm alg : kSuiteAlgorithms) {
      const int runs = alg == Algorithm::greedy ? 1 : options.runs_per_cell;
      for (int j = 0; j < runs; ++j) {
        tasks.push_back({i, alg, j});
      }
    }
  }

  struct TaskResult {
    double value = 0.0;
    double seconds = 0.0;
    bool done = false;
  };
  std::vector<TaskResult> results(tasks.size());
  std::atomic<std::size_t> cursor{0};
  const auto start = std::chrono::steady_clock::now();
  auto out_of_time = [&]() {
    if (!options.max_seconds.has_value()) return false;
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start;
    return elapsed.count() >= *options.max_seconds;
  };

  auto worker = [&]() {
    for (;;) {
      const std::size_t t = cursor.fetch_add(1);
      if (t >= tasks.size() || out_of_time()) return;
      const Task& task = tasks[t];
      const Instance& inst = instances[task.instance_index];
      const GaBudget budget =
          suite_budget(inst, task.alg, options.budget_scale);
      const std::uint64_t run_seed = seed_combine(
          seed_combine(seed_combine(options.base_seed, task.instance_index),
                       static_cast<std::uint64_t>(task.alg)),
          static_cast<std::uint64_t>(task.run_index));
      const auto t0 = std::chrono::steady_clock::now();
      results[t].value = run_single(inst, task.alg, budget, run_seed);
      results[t].seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
              .count();
      results[t].done = true;
    }
  };

  const std::size_t n_threads =
      std::min(resolve_threads(options.threads), tasks.size());
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(n_threads);
    for (std::size_t i = 0; i < n_threads; ++i) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
  }

  RunReport report;
  report.base_seed = options.base_seed;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    for (const Algorithm alg : kSuiteAlgorithms) {
      ReportRow row;
      row.instance = instances[i].name();
      row.algorithm = std::string(to_string(alg));
      for (std::size_t t = 0; t < tasks.size(); ++t) {
        if (tasks[t].instance_index != i || tasks[t].alg != alg) continue;
        if (!results[t].done) {
          report.partial = true;
          continue;
        }
        row.per_run.push_back(results[t].value);
        row.seconds += results[t].seconds;
      }
      if (row.per_run.empty()) {
        report.partial = true;
        continue;
      }
      const Stats s = stats(row.per_run);
      row.max = s.max;
      row.average = s.average;
      row.stdev = s.stdev;
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

} // namespace kga
