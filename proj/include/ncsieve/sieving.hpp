#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ncsieve/int_poly.hpp"
#include "ncsieve/qanalog.hpp"

namespace ncsieve {

using Permutation = std::vector<std::uint32_t>;

/// A cyclic group of declared order N acting on {0, ..., size-1} through the
/// powers of one generator. N need not be the minimal period.
struct CyclicActionInstance {
  Permutation generator;
  unsigned declared_order = 1;
  std::string label;

  std::size_t size() const { return generator.size(); }
  /// Throws DomainError unless generator is a bijection and N > 0.
  void validate() const;
  /// generator^N = id.
  bool annihilated() const;
};

/// Composite of a permutation with itself k times.
Permutation permutation_power(const Permutation& p, unsigned long long k);

/// Orbit size -> number of orbits of that size.
std::map<std::size_t, std::size_t> orbits(const CyclicActionInstance& inst);
/// Least j > 0 with generator^j = id (lcm of the orbit sizes).
unsigned minimal_period(const CyclicActionInstance& inst);
/// Points fixed by generator^i, counted on the power permutation.
std::size_t fixed_count(const CyclicActionInstance& inst, unsigned i);
/// Same count rebuilt from orbit sizes s with s | i.
std::size_t fixed_count_from_orbits(const std::map<std::size_t, std::size_t>& orbit_sizes, unsigned i);

struct CSPRow {
  unsigned power = 0;       // i
  unsigned root_order = 1;  // N / gcd(N, i)
  std::size_t fixed = 0;
  RootEvaluation evaluation;
  bool match = false;
};

struct FaithfulnessInfo {
  unsigned minimal_period = 1;
  /// N / minimal period: the order of the subgroup acting trivially.
  unsigned kernel_order = 1;
  /// X'(q) with P(q) = X'(q^kernel_order) (directly, or after reducing P
  /// modulo q^N - 1), when kernel_order > 1 and such X' exists.
  std::optional<IntPoly> quotient;
  bool quotient_from_reduction = false;
};

struct CSPReport {
  unsigned declared_order = 1;
  IntPoly polynomial;
  std::size_t set_size = 0;
  std::vector<CSPRow> rows;
  std::map<std::size_t, std::size_t> orbit_sizes;
  FaithfulnessInfo faithfulness;
  /// generator^N = id; when false the report fails without a table.
  bool order_valid = true;
  /// Points fixed by c^i and by c^gcd(N,i) coincide for every i.
  bool subgroup_consistent = true;
  bool pass = false;
};

/// Compare |X^(c^i)| with P(zeta_(N/gcd(N,i))) for every 0 <= i < N. A
/// non-integral evaluation is a mismatch. Failures are report content.
CSPReport csp_check(const CyclicActionInstance& inst, const IntPoly& p);

FaithfulnessInfo faithfulness_analysis(const CyclicActionInstance& inst, const IntPoly& p);

/// Perturb a passing polynomial `trials` times (alternately adding q^k, and
/// adding q^a - q^b with a != b mod N, which keeps P(1)); returns how many
/// perturbations csp_check rejected.
unsigned mutation_test(const CyclicActionInstance& inst, const IntPoly& p, unsigned trials, std::mt19937_64& rng);

}  // namespace ncsieve
