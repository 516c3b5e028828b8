#ifndef KGA_ORACLE_HPP
#define KGA_ORACLE_HPP

#include "kga/instance.hpp"
#include "kga/solution.hpp"

namespace kga {

enum class OracleMethod { exhaustive, dynamic_programming, analytic };

/// Exact optimum plus a witness attaining it. The witness is always
/// feasible and evaluates to exactly `optimum`.
struct OracleResult {
  double optimum;
  Solution witness;
  OracleMethod method;
};

/// Ground truth by enumerating all 2^n packings (Gray-code walk with
/// incremental sums, exact for integer-valued profits/weights). Among
/// optimal packings the lexicographically lowest bit vector wins, so the
/// witness is deterministic.
/// Throws BudgetError for n > 24.
OracleResult solve_exhaustive(const Instance& inst);

/// Exact dynamic program over the weight dimension with backtracking to
/// recover the witness. Requires integer-valued weights and capacity
/// (throws NotApplicableError otherwise) and n * capacity <= 1e8
/// (throws BudgetError beyond that).
OracleResult solve_dp(const Instance& inst);

} // namespace kga

#endif // KGA_ORACLE_HPP
