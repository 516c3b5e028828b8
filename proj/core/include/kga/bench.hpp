#ifndef KGA_BENCH_HPP
#define KGA_BENCH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kga/instance.hpp"

namespace kga {

enum class Algorithm { greedy, dp, msga, greedy_msga, moga };

std::string_view to_string(Algorithm alg);
Algorithm algorithm_from_string(std::string_view name);

struct Stats {
  double max = 0.0;
  double average = 0.0;
  double stdev = 0.0;  // sample standard deviation, divisor runs-1
};

/// Max, mean and sample standard deviation (0 for a single value).
/// Throws std::invalid_argument on an empty list.
Stats stats(std::span<const double> values);

/// Aggregated outcome of repeated runs of one algorithm on one instance.
struct ReportRow {
  std::string instance;
  std::string algorithm;
  double max = 0.0;
  double average = 0.0;
  double stdev = 0.0;
  std::vector<double> per_run;
  double seconds = 0.0;
};

struct RunReport {
  std::vector<ReportRow> rows;
  std::uint64_t base_seed = 0;
  bool partial = false;  // true when a --max-seconds deadline cut the suite
};

enum class ReportFormat { csv, json, markdown };

ReportFormat report_format_from_string(std::string_view name);

/// CSV columns instance,algorithm,max,average,stdev,seconds; JSON mirrors
/// RunReport including per-run values; markdown is one row per instance
/// with one column group per algorithm. include_timing=false omits the
/// wall-clock fields so two reports from the same seed compare
/// byte-identical.
std::string emit_report(const RunReport& report, ReportFormat format,
                        bool include_timing = true);

/// Inverse of the JSON emission; numbers survive the round trip exactly.
RunReport parse_report_json(const std::string& text);

struct SuiteOptions {
  std::uint64_t base_seed = 0;
  int runs_per_cell = 10;
  /// Scales every generation budget (floor 1 generation); 0.1 is the
  /// documented smoke setting.
  double budget_scale = 1.0;
  /// Abort cleanly after this many seconds: finished cells are reported,
  /// the report is flagged partial. No limit if unset.
  std::optional<double> max_seconds;
  /// Worker threads; 0 means the KGA_THREADS environment variable or,
  /// failing that, the machine's hardware concurrency.
  std::size_t threads = 0;
};

/// The full comparison protocol: 10 restrictive + 10 average instances
/// (n = 100, B = 100, instance seeds base_seed+0..19) plus the two fixed
/// special instances; greedy once per instance, MSGA / greedy+MSGA / MOGA
/// for runs_per_cell seeded runs each. Budgets: random instances N = 3n,
/// 30n generations for the MSGAs and 10n for the MOGA; special instances
/// N = n (MOGA: rounded up to a multiple of 3), 15n and 5n generations.
/// Every run's seed derives from (base_seed, instance index, algorithm,
/// run index), so cells are independent and the report is reproducible
/// regardless of scheduling.
RunReport run_paper_suite(const SuiteOptions& options);

} // namespace kga

#endif // KGA_BENCH_HPP
