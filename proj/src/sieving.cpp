#include "ncsieve/sieving.hpp"

#include <numeric>

#include "ncsieve/errors.hpp"

namespace ncsieve {

void CyclicActionInstance::validate() const {
  if (declared_order == 0) throw DomainError(label + ": declared order must be positive");
  std::vector<bool> seen(generator.size());
  for (auto x : generator) {
    if (x >= generator.size() || seen[x]) throw DomainError(label + ": generator is not a bijection");
    seen[x] = true;
  }
}

bool CyclicActionInstance::annihilated() const {
  const Permutation p = permutation_power(generator, declared_order);
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

Permutation permutation_power(const Permutation& p, unsigned long long k) {
  Permutation result(p.size()), base = p;
  std::iota(result.begin(), result.end(), 0u);
  while (k) {
    if (k & 1) {
      for (auto& x : result) x = base[x];
    }
    k >>= 1;
    if (k) {
      Permutation sq(base.size());
      for (std::size_t i = 0; i < base.size(); ++i) sq[i] = base[base[i]];
      base = std::move(sq);
    }
  }
  return result;
}

std::map<std::size_t, std::size_t> orbits(const CyclicActionInstance& inst) {
  std::map<std::size_t, std::size_t> out;
  std::vector<bool> seen(inst.size());
  for (std::size_t s = 0; s < inst.size(); ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    for (std::size_t x = s; !seen[x]; x = inst.generator[x]) {
      seen[x] = true;
      ++len;
    }
    ++out[len];
  }
  return out;
}

unsigned minimal_period(const CyclicActionInstance& inst) {
  unsigned long long p = 1;
  for (const auto& [size, count] : orbits(inst)) p = std::lcm(p, static_cast<unsigned long long>(size));
  return static_cast<unsigned>(p);
}

std::size_t fixed_count(const CyclicActionInstance& inst, unsigned i) {
  const Permutation p = permutation_power(inst.generator, i);
  std::size_t count = 0;
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p[x] == x) ++count;
  return count;
}

std::size_t fixed_count_from_orbits(const std::map<std::size_t, std::size_t>& orbit_sizes, unsigned i) {
  std::size_t count = 0;
  for (const auto& [size, n] : orbit_sizes)
    if (i % size == 0) count += size * n;
  return count;
}

FaithfulnessInfo faithfulness_analysis(const CyclicActionInstance& inst, const IntPoly& p) {
  FaithfulnessInfo out;
  out.minimal_period = minimal_period(inst);
  out.kernel_order = inst.declared_order / out.minimal_period;
  if (out.kernel_order <= 1) return out;
  auto squeeze = [&](const IntPoly& poly) -> std::optional<IntPoly> {
    std::vector<mpz_class> c;
    for (std::size_t k = 0; k < poly.coeffs().size(); ++k) {
      if (k % out.kernel_order == 0)
        c.push_back(poly.coeffs()[k]);
      else if (poly.coeffs()[k] != 0)
        return std::nullopt;
    }
    return IntPoly(std::move(c));
  };
  out.quotient = squeeze(p);
  if (!out.quotient) {
    out.quotient = squeeze(p.fold(inst.declared_order));
    out.quotient_from_reduction = out.quotient.has_value();
  }
  return out;
}

CSPReport csp_check(const CyclicActionInstance& inst, const IntPoly& p) {
  inst.validate();
  CSPReport r;
  r.declared_order = inst.declared_order;
  r.polynomial = p;
  r.set_size = inst.size();
  r.orbit_sizes = orbits(inst);
  const unsigned N = inst.declared_order;
  r.faithfulness.minimal_period = minimal_period(inst);
  if (!inst.annihilated()) {
    r.order_valid = false;
    r.pass = false;
    return r;
  }
  std::map<unsigned, RootEvaluation> evals;
  r.pass = true;
  for (unsigned i = 0; i < N; ++i) {
    CSPRow row;
    row.power = i;
    const unsigned g = std::gcd(N, i);
    row.root_order = N / g;
    auto it = evals.find(row.root_order);
    if (it == evals.end()) it = evals.emplace(row.root_order, eval_integer_at_root(p, row.root_order)).first;
    row.evaluation = it->second;
    const Permutation pi = permutation_power(inst.generator, i);
    const Permutation pg = permutation_power(inst.generator, g);
    for (std::size_t x = 0; x < pi.size(); ++x) {
      if (pi[x] == x) ++row.fixed;
      if ((pi[x] == x) != (pg[x] == x)) r.subgroup_consistent = false;
    }
    if (row.fixed != fixed_count_from_orbits(r.orbit_sizes, i))
      throw InternalError(inst.label + ": fixed-point count disagrees with the orbit decomposition");
    row.match = row.evaluation.is_integer() && *row.evaluation.value == mpz_class(static_cast<unsigned long>(row.fixed));
    r.pass = r.pass && row.match;
    r.rows.push_back(std::move(row));
  }
  if (!r.subgroup_consistent) throw InternalError(inst.label + ": c^i and c^gcd(N,i) fix different sets");
  r.faithfulness = faithfulness_analysis(inst, p);
  return r;
}

unsigned mutation_test(const CyclicActionInstance& inst, const IntPoly& p, unsigned trials, std::mt19937_64& rng) {
  const unsigned N = inst.declared_order;
  const long span = std::max<long>(p.degree() + 1, 1) + N;
  std::uniform_int_distribution<long> pick(0, span - 1);
  unsigned rejected = 0;
  for (unsigned t = 0; t < trials; ++t) {
    IntPoly q = p;
    const long a = pick(rng);
    if (t % 2 == 0 || N < 2) {
      q = q + IntPoly::monomial(1, static_cast<unsigned>(a));
    } else {
      long b = pick(rng);
      while (b % N == a % N) b = pick(rng);
      q = q + IntPoly::monomial(1, static_cast<unsigned>(a)) - IntPoly::monomial(1, static_cast<unsigned>(b));
    }
    if (!csp_check(inst, q).pass) ++rejected;
  }
  return rejected;
}

}  // namespace ncsieve
