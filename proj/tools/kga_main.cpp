#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "kga/bench.hpp"
#include "kga/errors.hpp"
#include "kga/evaluation.hpp"
#include "kga/ga.hpp"
#include "kga/generator.hpp"
#include "kga/greedy.hpp"
#include "kga/instance.hpp"
#include "kga/oracle.hpp"
#include "kga/rng.hpp"

namespace {

constexpr int kExitInvalidArguments = 2;
constexpr int kExitBudgetExceeded = 3;

struct GenArgs {
  std::string kind;
  std::size_t n = 0;  // 0: kind-specific default
  std::size_t bound = 0;
  double alpha = 0.2;
  std::uint64_t seed = 0;
  std::string output;
};

struct SolveArgs {
  std::string algorithm;
  std::string instance_path;
  std::size_t population = 0;  // 0: protocol default for the instance
  std::size_t generations = 0;
  int runs = 1;
  std::uint64_t seed = 0;
  std::string trace_path;
};

struct BenchArgs {
  std::string suite = "paper";
  std::uint64_t base_seed = 0;
  int runs = 10;
  std::string format = "csv";
  std::optional<double> max_seconds;
  double budget_scale = 1.0;
  bool no_timing = false;
  std::size_t threads = 0;
  std::string output;
};

int run_gen(const GenArgs& args) {
  kga::GeneratorSpec spec;
  if (args.kind == "restrictive") {
    spec.kind = kga::InstanceKind::restrictive;
    spec.n = args.n == 0 ? 100 : args.n;
  } else if (args.kind == "average") {
    spec.kind = kga::InstanceKind::average;
    spec.n = args.n == 0 ? 100 : args.n;
  } else if (args.kind == "special-I") {
    spec.kind = kga::InstanceKind::special_i;
    spec.n = args.n == 0 ? 500 : args.n;
  } else if (args.kind == "special-II") {
    spec.kind = kga::InstanceKind::special_ii;
    spec.n = args.n == 0 ? 200 : args.n;
  } else {
    throw std::invalid_argument("unknown instance kind: " + args.kind);
  }
  spec.bound = args.bound;
  spec.alpha = args.alpha;
  spec.seed = args.seed;

  const kga::Instance inst = kga::generate(spec);
  inst.save(args.output);
  std::cout << "wrote " << args.output << " (" << inst.name()
            << ", n=" << inst.size() << ", capacity=" << inst.capacity()
            << ")\n";
  return 0;
}

// Population and generation budgets when the user gives none: N = 3n with
// 30n/10n generations for plain instances, N = n with 15n/5n for the
// special instances (their files carry an initialization rule).
void apply_protocol_defaults(const kga::Instance& inst, kga::Algorithm alg,
                             std::size_t& population,
                             std::size_t& generations) {
  const std::size_t n = inst.size();
  const bool special = inst.init_rule() != kga::InitRule::none;
  if (population == 0) {
    population = special ? n : 3 * n;
  }
  if (generations == 0) {
    if (alg == kga::Algorithm::moga) {
      generations = special ? 5 * n : 10 * n;
    } else {
      generations = special ? 15 * n : 30 * n;
    }
  }
  if (alg == kga::Algorithm::moga && population % 3 != 0) {
    const std::size_t rounded = 3 * ((population + 2) / 3);
    std::cerr << "note: rounding population " << population << " up to "
              << rounded << " (multi-criteria selection fills N/3 per pass)\n";
    population = rounded;
  }
}

int run_solve(const SolveArgs& args) {
  const kga::Algorithm alg = kga::algorithm_from_string(args.algorithm);
  const kga::Instance inst = kga::Instance::load(args.instance_path);
  if (args.runs < 1) {
    throw std::invalid_argument("--runs must be >= 1");
  }

  std::cout << "instance: " << inst.name() << " (n=" << inst.size()
            << ", capacity=" << inst.capacity() << ")\n";

  const auto started = std::chrono::steady_clock::now();
  if (alg == kga::Algorithm::greedy || alg == kga::Algorithm::dp) {
    // Deterministic solvers run once regardless of --runs.
    kga::Solution best(inst);
    if (alg == kga::Algorithm::greedy) {
      best = kga::greedy_solve(inst);
      std::cout << "algorithm: greedy\n";
    } else {
      kga::OracleResult result = kga::solve_dp(inst);
      best = std::move(result.witness);
      std::cout << "algorithm: dp (exact)\n";
    }
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - started;
    std::cout << "value " << best.total_profit() << "  weight "
              << best.total_weight() << "  items " << best.cardinality()
              << "  seconds " << elapsed.count() << "\n";
    return 0;
  }

  std::size_t population = args.population;
  std::size_t generations = args.generations;
  apply_protocol_defaults(inst, alg, population, generations);

  std::ofstream trace;
  if (!args.trace_path.empty()) {
    trace.open(args.trace_path);
    if (!trace) {
      throw std::invalid_argument("cannot write trace file: " +
                                  args.trace_path);
    }
    trace << "run,generation,best_f\n";
  }

  std::cout << "algorithm: " << kga::to_string(alg) << "  pop=" << population
            << " gens=" << generations << " runs=" << args.runs
            << " seed=" << args.seed << "\n";

  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(args.runs));
  for (int j = 0; j < args.runs; ++j) {
    const std::uint64_t run_seed =
        kga::seed_combine(args.seed, static_cast<std::uint64_t>(j));
    kga::RngStream init_rng(kga::seed_combine(run_seed, 1));
    kga::GaConfig cfg;
    cfg.population_size = population;
    cfg.max_generations = generations;
    cfg.seed = kga::seed_combine(run_seed, 2);
    cfg.record_trace = trace.is_open();

    kga::Population init =
        alg == kga::Algorithm::greedy_msga
            ? kga::build_greedy_seeded_population(inst, population, init_rng)
            : kga::build_initial_population(inst, inst.init_rule(), population,
                                            init_rng);
    kga::GaRunResult result =
        alg == kga::Algorithm::moga
            ? kga::run_moga(inst, cfg, std::move(init))
            : kga::run_msga(inst, cfg, std::move(init));
    values.push_back(result.best_value);
    if (trace.is_open()) {
      for (std::size_t g = 0; g < result.trace.size(); ++g) {
        trace << j << ',' << g << ',' << result.trace[g] << "\n";
      }
    }
  }
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - started;

  const kga::Stats s = kga::stats(values);
  std::cout << "max " << s.max << "  average " << s.average << "  stdev "
            << s.stdev << "  seconds " << elapsed.count() << "\n";
  std::cout << "per-run:";
  for (const double v : values) std::cout << ' ' << v;
  std::cout << "\n";
  return 0;
}

int run_bench(const BenchArgs& args) {
  if (args.suite != "paper") {
    throw std::invalid_argument("unknown suite: " + args.suite);
  }
  const kga::ReportFormat format =
      kga::report_format_from_string(args.format);

  kga::SuiteOptions options;
  options.base_seed = args.base_seed;
  options.runs_per_cell = args.runs;
  options.budget_scale = args.budget_scale;
  options.max_seconds = args.max_seconds;
  options.threads = args.threads;

  const kga::RunReport report = kga::run_paper_suite(options);
  const std::string text =
      kga::emit_report(report, format, /*include_timing=*/!args.no_timing);

  if (args.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(args.output);
    if (!out) {
      throw std::invalid_argument("cannot write report file: " + args.output);
    }
    out << text;
    std::cout << "wrote " << args.output << "\n";
  }
  if (report.partial) {
    std::cerr << "bench: stopped at --max-seconds, report is partial\n";
    return kExitBudgetExceeded;
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"0-1 knapsack: exact, greedy and genetic solvers with a "
               "reproducible benchmark harness"};
  app.require_subcommand(1);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate an instance file");
  gen->add_option("--kind", gen_args.kind, "Instance kind")
      ->required()
      ->check(CLI::IsMember({"restrictive", "average", "special-I",
                             "special-II"}));
  gen->add_option("--n", gen_args.n, "Item count (default per kind)");
  gen->add_option("-B,--bound", gen_args.bound,
                  "Profit/weight bound (default n)");
  gen->add_option("--alpha", gen_args.alpha, "Layout parameter of special-I");
  gen->add_option("--seed", gen_args.seed, "Generator seed");
  gen->add_option("-o,--output", gen_args.output, "Output JSON file")
      ->required();

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Run one solver on an instance");
  solve->add_option("--alg", solve_args.algorithm, "Solver")
      ->required()
      ->check(CLI::IsMember({"greedy", "dp", "msga", "greedy-msga", "moga"}));
  solve->add_option("--instance", solve_args.instance_path,
                    "Instance JSON file")
      ->required();
  solve->add_option("--pop", solve_args.population,
                    "Population size (default: protocol)");
  solve->add_option("--gens", solve_args.generations,
                    "Generation budget (default: protocol)");
  solve->add_option("--runs", solve_args.runs, "Seeded repetitions");
  solve->add_option("--seed", solve_args.seed, "Base seed");
  solve->add_option("--trace", solve_args.trace_path,
                    "Write per-generation best-f CSV here");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Run a comparison suite");
  bench->add_option("--suite", bench_args.suite, "Suite name")
      ->check(CLI::IsMember({"paper"}));
  bench->add_option("--base-seed", bench_args.base_seed, "Suite base seed");
  bench->add_option("--runs", bench_args.runs, "Runs per GA cell");
  bench->add_option("--format", bench_args.format, "Report format")
      ->check(CLI::IsMember({"csv", "json", "markdown"}));
  bench->add_option("--max-seconds", bench_args.max_seconds,
                    "Stop scheduling new cells after this many seconds");
  bench->add_option("--budget-scale", bench_args.budget_scale,
                    "Scale generation budgets (0.1 = smoke setting)");
  bench->add_flag("--no-timing", bench_args.no_timing,
                  "Omit wall-clock columns (comparison mode)");
  bench->add_option("--threads", bench_args.threads,
                    "Worker threads (default: KGA_THREADS or hardware)");
  bench->add_option("-o,--output", bench_args.output,
                    "Report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalidArguments;
  }

  try {
    if (gen->parsed()) return run_gen(gen_args);
    if (solve->parsed()) return run_solve(solve_args);
    if (bench->parsed()) return run_bench(bench_args);
  } catch (const kga::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudgetExceeded;
  } catch (const kga::NotApplicableError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidArguments;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidArguments;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
