#ifndef KGA_GENERATOR_HPP
#define KGA_GENERATOR_HPP

#include <cstddef>
#include <cstdint>

#include "kga/instance.hpp"
#include "kga/oracle.hpp"
#include "kga/rng.hpp"
#include "kga/solution.hpp"

namespace kga {

enum class InstanceKind { restrictive, average, special_i, special_ii };

/// Recipe for one benchmark instance. Generation is a pure function of the
/// spec: the same spec yields a bit-identical instance.
struct GeneratorSpec {
  InstanceKind kind = InstanceKind::restrictive;
  std::size_t n = 100;
  std::size_t bound = 0;   // B, the profit/weight upper bound; 0 means B = n
  double alpha = 0.2;      // special_i only
  std::uint64_t seed = 0;
  std::string name;        // empty: derived from kind/n/B/seed
};

/// Restrictive-capacity instance: profits and weights are uniform integers
/// in {1..B} and the capacity is B itself, so only a few items fit.
Instance gen_restrictive(const GeneratorSpec& spec);

/// Average-capacity instance: same items, capacity 0.25 * n * B (half the
/// expected total weight), so roughly half the items fit.
Instance gen_average(const GeneratorSpec& spec);

/// Dispatch on spec.kind.
Instance generate(const GeneratorSpec& spec);

/// Fixed instance family one (default n = 500, alpha = 0.2): a block of
/// ceil(n/(1+alpha)) unit items (p = w = 1), one big item with
/// p = alpha*n/(1+alpha) and w = n/(1+alpha) - alpha/(4+4*alpha), and tiny
/// items with p = 1/n, w = 1/(2n); capacity n/(1+alpha). Carries the
/// special_I initialization rule: big item packed, unit items not, half of
/// the tiny items packed at random.
Instance special_instance_one(std::size_t n = 500, double alpha = 0.2);

/// Fixed instance family two (n divisible by 4, default 200), three item
/// groups A/B/C of sizes n/4, n/4, n/2:
///   A: p = 0.25*n*sqrt(n) + 2, w = 0.25*n*sqrt(n) + 1
///   B: p = 0.3*n*sqrt(n),      w = 0.5*n*sqrt(n)
///   C: p = w = sqrt(n)
/// and capacity 0.5*n*sqrt(n) (exactly all of group C). Carries the
/// special_II initialization rule: one random A item packed, no B items,
/// half of the C items packed at random, repaired if overweight.
Instance special_instance_two(std::size_t n = 200);

/// Closed-form optima of the two fixed families, with witnesses, for use
/// where the weight-indexed DP does not apply (non-integer weights). The
/// case analysis enumerates packings per item group, which is exact
/// because items within a group are identical.
OracleResult analytic_optimum_special_one(std::size_t n = 500,
                                          double alpha = 0.2);
OracleResult analytic_optimum_special_two(std::size_t n = 200);

/// N feasible individuals. Without a rule: uniform random bits, then
/// random repair if overweight. With a rule: the prescribed pattern per
/// individual, then mixed repair if overweight.
Population build_initial_population(const Instance& inst, InitRule rule,
                                    std::size_t count, RngStream& rng);

/// Seed population for the greedy+MSGA hybrid: the greedy solution, the
/// ratio-ordered fill, the profit-ordered fill, and count-3 random
/// feasible individuals.
Population build_greedy_seeded_population(const Instance& inst,
                                          std::size_t count, RngStream& rng);

} // namespace kga

#endif // KGA_GENERATOR_HPP
