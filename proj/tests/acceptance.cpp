// Acceptance run: one PASS/FAIL line per criterion, exact comparisons,
// wall-clock budgets. `--expect-fail N` names criteria known to fail; the
// process then succeeds only if exactly those fail.

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include "ncsieve/catalog.hpp"
#include "ncsieve/classical.hpp"
#include "ncsieve/errors.hpp"
#include "ncsieve/noncrossing.hpp"
#include "ncsieve/qanalog.hpp"
#include "ncsieve/restricted_group.hpp"
#include "ncsieve/root_system.hpp"
#include "ncsieve/sieving.hpp"
#include "ncsieve/verification.hpp"

using namespace ncsieve;

namespace {

constexpr std::uint64_t kEnumerable = 1'000'000;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> findings;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_s;  // 0 = none
  std::function<Outcome()> run;
  int shares_budget_with = 0;
};

std::vector<unsigned> divisors(unsigned h) {
  std::vector<unsigned> out;
  for (unsigned d = 1; d <= h; ++d)
    if (h % d == 0) out.push_back(d);
  return out;
}

std::vector<std::string> suite_and_catalog() {
  std::vector<std::string> out = main_suite_groups();
  for (const auto& e : Catalog::shipped().entries())
    if (std::find(out.begin(), out.end(), e.name) == out.end()) out.push_back(e.name);
  return out;
}

std::shared_ptr<const ReflectionGroup> build(const std::string& s) { return ReflectionGroup::build(s); }

IntPoly catalan_of(const GroupView& g, unsigned m = 1) { return catalan_poly(QCatalanSpec::from_degrees(g.degrees(), m)); }

std::string count_line(std::size_t n, const char* what) {
  return std::to_string(n) + " " + what;
}

Outcome main_csp() {
  Outcome o;
  const auto suite = main_suite_groups();
  std::size_t rows = 0;
  for (const auto& s : suite) {
    const auto g = build(s);
    const NCPoset nc = enumerate_nc(g);
    const CSPReport r = csp_check(conjugation_action(nc), catalan_of(*g));
    rows += r.rows.size();
    if (!r.pass || r.rows.size() != g->coxeter_number()) o.fail(s + ": CSP fails");
  }
  if (o.pass) o.detail = count_line(suite.size(), "groups, ") + std::to_string(rows) + " powers checked";
  return o;
}

Outcome nc_structure() {
  Outcome o;
  const auto suite = main_suite_groups();
  for (const auto& s : suite) {
    const auto g = build(s);
    const NCPoset nc = enumerate_nc(g);
    if (nc.size() != catalan_of(*g).eval(1)) o.fail(s + ": |NC(W)| != Cat(W)");
    const auto& r = nc.rank_sizes();
    if (!std::equal(r.begin(), r.end(), r.rbegin())) o.fail(s + ": rank vector not palindromic");
    if (!lattice_check(nc).passed) o.fail(s + ": not a lattice");
  }
  if (o.pass) o.detail = count_line(suite.size(), "groups");
  return o;
}

Outcome rotation_csp() {
  Outcome o;
  for (unsigned n = 1; n <= 10; ++n) {
    const auto ncn = enumerate_ncn(n);
    if (!csp_check(rotation_action(ncn, n), q_catalan(n)).pass) o.fail("n = " + std::to_string(n));
  }
  if (o.pass) o.detail = "n = 1..10";
  return o;
}

Outcome duality_and_regularity() {
  Outcome o;
  const auto groups = suite_and_catalog();
  for (const auto& s : groups) {
    const auto g = build(s);
    const auto& d = g->degrees();
    const auto& c = g->codegrees();
    const unsigned h = g->coxeter_number();
    for (std::size_t i = 0; i < d.size(); ++i)
      if (d[i] + c[i] != h) o.fail(s + ": d_i + d_i^* != h");
    const auto reg = g->regular_numbers();
    for (unsigned k = 1; k <= h; ++k) {
      const auto nd = std::count_if(d.begin(), d.end(), [&](unsigned x) { return x % k == 0; });
      const auto nc = std::count_if(c.begin(), c.end(), [&](unsigned x) { return x % k == 0; });
      const bool listed = std::find(reg.begin(), reg.end(), k) != reg.end();
      if (listed != (nd == nc)) o.fail(s + ": regular numbers disagree with the divisibility counts at " + std::to_string(k));
    }
    if (std::find(reg.begin(), reg.end(), h) == reg.end()) o.fail(s + ": h is not regular");
    if (!g->validate_coxeter(g->coxeter_element()).passed()) o.fail(s + ": Coxeter element not zeta_h-regular");
  }
  if (o.pass) o.detail = count_line(groups.size(), "groups");
  return o;
}

Outcome center() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& s : suite_and_catalog()) {
    const auto g = build(s);
    if (!g->enumerable()) continue;
    ++checked;
    const CenterInfo z = g->center();
    const unsigned gcd = std::accumulate(g->degrees().begin(), g->degrees().end(), 0u,
                                         [](unsigned a, unsigned b) { return std::gcd(a, b); });
    const GroupElement expected = g->coxeter_element().pow(g->coxeter_number() / gcd);
    std::set<GroupElement> central, powers;
    for (const auto& w : g->elements()) {
      bool commutes = true;
      for (const auto& x : g->generators()) commutes = commutes && w * x == x * w;
      if (commutes) central.insert(w);
    }
    for (unsigned k = 0; k < gcd; ++k) powers.insert(expected.pow(k));
    if (z.order != gcd || !(z.generator == expected) || central != powers) o.fail(s + ": center mismatch");
  }
  if (o.pass) o.detail = count_line(checked, "enumerable groups");
  return o;
}

Outcome restriction_order() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& s : suite_and_catalog()) {
    const auto g = build(s);
    if (!g->enumerable()) continue;
    for (unsigned d : divisors(g->coxeter_number())) {
      const auto r = RestrictedGroup::build(g, d);
      std::uint64_t expected = 1;
      for (unsigned x : g->degrees())
        if (x % d == 0) expected *= x;
      if (r->elements().size() != expected) o.fail(s + ", d = " + std::to_string(d) + ": |W'| mismatch");
      if (!r->reflections_generate()) o.fail(s + ", d = " + std::to_string(d) + ": R' does not generate W'");
      ++checked;
    }
  }
  if (o.pass) o.detail = count_line(checked, "(group, d) pairs");
  return o;
}

Outcome restriction_nc() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& s : main_suite_groups()) {
    const auto g = build(s);
    if (!g->enumerable()) continue;
    const NCPoset nc = enumerate_nc(g);
    for (unsigned d : divisors(g->coxeter_number())) {
      const auto r = RestrictedGroup::build(g, d);
      std::unordered_set<GroupElement> meet;
      for (const auto& w : nc.elements())
        if (r->contains(w)) meet.insert(w);
      const NCPoset sub = enumerate_nc(r);
      if (std::unordered_set<GroupElement>(sub.elements().begin(), sub.elements().end()) != meet)
        o.fail(s + ", d = " + std::to_string(d) + ": NC(W) cap W' != NC(W')");
      ++checked;
    }
  }
  if (o.pass) o.detail = count_line(checked, "(group, d) pairs");
  return o;
}

Outcome fuss_polynomiality() {
  Outcome o;
  const auto groups = suite_and_catalog();
  for (const auto& s : groups) {
    const GroupSpec spec = parse_spec(s);
    std::vector<unsigned> degrees;
    if (const auto* m = std::get_if<MonomialG>(&spec.family)) {
      if (m->d == 1)
        for (unsigned i = 2; i <= m->n; ++i) degrees.push_back(i);
      else if (m->e == 1)
        for (unsigned i = 1; i <= m->n; ++i) degrees.push_back(i * m->d);
      else {
        for (unsigned i = 1; i < m->n; ++i) degrees.push_back(i * m->d);
        degrees.push_back(m->n);
      }
    } else {
      degrees = Catalog::shipped().find(spec.label)->degrees;
    }
    std::sort(degrees.begin(), degrees.end());
    const unsigned h = degrees.back();
    for (unsigned m = 1; m <= 3; ++m) {
      std::vector<unsigned long> top;
      for (unsigned d : degrees) top.push_back(m * h + d);
      const auto [q, r] = divmod(q_int_product(top), q_int_product({degrees.begin(), degrees.end()}));
      if (!r.is_zero()) o.fail(s + ": Cat^" + std::to_string(m) + " leaves a remainder");
      if (!q.nonnegative()) o.fail(s + ": Cat^" + std::to_string(m) + " has a negative coefficient");
    }
  }
  if (o.pass) o.detail = count_line(groups.size(), "groups, m = 1..3");
  return o;
}

Outcome e8_value() {
  Outcome o;
  const RootEvaluation ev = eval_integer_at_root(catalan_poly(QCatalanSpec::from_degrees({2, 8, 12, 14, 18, 20, 24, 30})), 4);
  if (!ev.value || *ev.value != 88) o.fail("Cat(E8, i) = " + ev.residue.to_string());
  else o.detail = "Cat(E8, i) = 88";
  return o;
}

Outcome refined_classical() {
  Outcome o;
  std::size_t types = 0, formula_cases = 0;
  for (unsigned n = 1; n <= 8; ++n)
    for (const auto& t : all_block_types(n)) {
      ++types;
      if (!refined_csp(n, t).pass) o.fail("n = " + std::to_string(n) + ", type " + t.to_string());
      for (unsigned d : divisors(n)) {
        if (d == 1) continue;
        if (auto f = type_b_count(n, d, t)) {
          ++formula_cases;
          if (*f != symmetric_type_count(n, d, t))
            o.fail("symmetric count n = " + std::to_string(n) + ", d = " + std::to_string(d) + ", type " + t.to_string());
        }
      }
    }
  if (o.pass) o.detail = std::to_string(types) + " block types, " + std::to_string(formula_cases) + " closed-form counts";
  return o;
}

Outcome fuss_conjectures() {
  Outcome o;
  std::vector<std::pair<std::string, unsigned>> groups = {{"D4", 2}, {"H3", 2}};
  for (const char* g : {"A1", "A2", "A3", "A4", "B2", "B3"}) groups.emplace_back(g, 3);
  for (unsigned m = 3; m <= 8; ++m) groups.emplace_back("I2(" + std::to_string(m) + ")", 3);
  std::size_t checks = 0;
  for (const auto& [s, max_m] : groups) {
    const auto g = build(s);
    const NCPoset nc = enumerate_nc(g);
    for (unsigned m = 1; m <= max_m; ++m) {
      const NCMTuples t = enumerate_nc_m(nc, m);
      const IntPoly p = catalan_of(*g, m);
      const std::string tag = s + ", m = " + std::to_string(m);
      if (!csp_check(armstrong_action(nc, t), p).pass) o.findings.push_back(tag + ": Armstrong rotation");
      if (!csp_check(bessis_action(nc, t), p).pass) o.findings.push_back(tag + ": Bessis rotation");
      checks += 2;
    }
  }
  o.detail = std::to_string(checks) + " conjecture checks, " + std::to_string(o.findings.size()) + " findings";
  return o;
}

Outcome panyushev() {
  Outcome o;
  for (const char* t : {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "C3", "D4", "G2"}) {
    const RootSystem rs = build_root_system(t);
    const auto antichains = enumerate_antichains(rs);
    const auto inst = panyushev_action(rs, antichains);
    if ((2 * rs.coxeter_number) % minimal_period(inst) != 0) o.fail(std::string(t) + ": order does not divide 2h");
    if (!csp_check(inst, catalan_poly(QCatalanSpec::from_degrees(rs.degrees))).pass)
      o.findings.push_back(std::string(t) + ": Panyushev CSP");
  }
  if (o.pass) o.detail = "10 types, " + std::to_string(o.findings.size()) + " findings";
  return o;
}

Outcome torus() {
  Outcome o;
  std::size_t pairs = 0, coprime = 0, coprime_ok = 0, orbit_ok = 0, types = 0;
  std::vector<std::string> failing;
  for (const char* t : {"A1", "A2", "A3", "A4", "B2", "B3", "D4", "G2"}) {
    const RootSystem rs = build_root_system(t);
    const auto W = weyl_group(rs);
    ++types;
    for (unsigned p = 1; p <= 12; ++p) {
      ++pairs;
      const bool holds = torus_character_check(W, p).holds();
      const bool is_coprime = std::gcd(p, rs.coxeter_number) == 1;
      coprime += is_coprime;
      coprime_ok += is_coprime && holds;
      if (!holds) failing.push_back(std::string(t) + "/p" + std::to_string(p));
    }
    const auto cat = catalan_poly(QCatalanSpec::from_degrees(rs.degrees)).eval(1);
    orbit_ok += torus_orbit_count(W, rs.coxeter_number + 1) == cat;
  }
  std::ostringstream os;
  os << "fixed-point identity fails for " << failing.size() << " of " << pairs
     << " (type, p) pairs, every one with gcd(p, h) > 1; holds on " << coprime_ok << " of " << coprime
     << " coprime pairs; orbit count at p = h+1 equals Cat(W) for " << orbit_ok << " of " << types << " types";
  o.detail = os.str();
  o.pass = failing.empty() && orbit_ok == types;
  if (!failing.empty()) {
    std::string list;
    for (const auto& f : failing) list += (list.empty() ? "" : " ") + f;
    o.findings.push_back("failing pairs: " + list);
  }
  if (coprime_ok != coprime) o.detail += "; COPRIME FAILURE";
  return o;
}

Outcome mutation() {
  Outcome o;
  const auto suite = main_suite_groups();
  std::uint64_t seed = 20240601;
  for (const auto& s : suite) {
    const auto g = build(s);
    const NCPoset nc = enumerate_nc(g);
    const auto inst = conjugation_action(nc);
    std::mt19937_64 rng(seed++);
    const unsigned rejected = mutation_test(inst, catalan_of(*g), 20, rng);
    if (rejected != 20) o.fail(s + ": " + std::to_string(20 - rejected) + " perturbations accepted");
  }
  if (o.pass) o.detail = count_line(suite.size(), "groups x 20 perturbations");
  return o;
}

Outcome oracles() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& s : suite_and_catalog()) {
    const auto g = build(s);
    if (g->order() > 10'000) continue;
    ++checked;
    const LengthTable len(*g);
    const NCPoset nc = enumerate_nc(g);
    const std::unordered_set<GroupElement> fixed(nc.elements().begin(), nc.elements().end());
    if (nc_by_length(*g, len) != fixed) o.fail(s + ": length and fixed-space NC differ");
    for (const auto& w : g->elements()) {
      const unsigned codim = g->rank() - g->fixed_space_dim(w);
      if (len(w) < codim) o.fail(s + ": absolute length below codimension");
      if (fixed.count(w) && len(w) != codim) o.fail(s + ": absolute length differs from codimension on NC");
    }
  }
  if (o.pass) o.detail = count_line(checked, "groups with |W| <= 10^4");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> expect_fail, only;
  app.add_option("--expect-fail", expect_fail, "Criteria documented as failing");
  app.add_option("--only", only, "Run only these criteria");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria = {
      {1, "main CSP, exhaustive over the suite", 600, main_csp},
      {2, "rotation CSP on NC(n), n <= 10", 60, rotation_csp},
      {3, "duality and regular numbers across the catalog", 1, duality_and_regularity},
      {4, "|NC(W)| = Cat(W), palindromic ranks, lattice", 600, nc_structure, 1},
      {5, "center order and generator", 0, center},
      {6, "restricted group order and reflection generation", 0, restriction_order},
      {7, "NC(W) meets W' in NC(W')", 0, restriction_nc},
      {8, "Fuss-Catalan polynomiality and nonnegativity, m <= 3", 10, fuss_polynomiality},
      {9, "Cat(E8) at a primitive 4th root of unity is 88", 1, e8_value},
      {10, "refined block-type CSP and symmetric counts, n <= 8", 120, refined_classical},
      {11, "Fuss rotations on NC^m(W) (conjecture status)", 600, fuss_conjectures},
      {12, "Panyushev CSP (conjecture status)", 120, panyushev},
      {13, "finite torus fixed points and orbits", 60, torus},
      {14, "mutation test, 20 perturbations per suite group", 0, mutation},
      {15, "length and fixed-space oracles, |W| <= 10^4", 0, oracles},
  };

  std::map<int, double> seconds;
  std::set<int> failed;
  for (const auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    seconds[c.id] = s;
    const double spent = s + (c.shares_budget_with ? seconds[c.shares_budget_with] : 0.0);
    if (c.budget_s > 0 && spent > c.budget_s) o.fail("over budget: " + std::to_string(spent) + " s");
    if (!o.pass) failed.insert(c.id);

    char head[160];
    std::snprintf(head, sizeof head, "criterion %2d %s  %8.2f s", c.id, o.pass ? "PASS" : "FAIL", s);
    std::cout << head;
    if (c.budget_s > 0) std::cout << " (budget " << c.budget_s << " s" << (c.shares_budget_with ? ", shared" : "") << ")";
    std::cout << "  " << c.title << ": " << o.detail << "\n";
    for (const auto& f : o.findings) std::cout << "    FINDING " << f << "\n";
    std::cout.flush();
  }

  const std::set<int> expected(expect_fail.begin(), expect_fail.end());
  std::cout << failed.size() << " failing";
  if (!expected.empty()) std::cout << ", expected failing: " << expected.size();
  std::cout << "\n";
  if (expected.empty()) return failed.empty() ? 0 : 1;
  std::set<int> expected_run;
  for (int id : expected)
    if (seconds.count(id)) expected_run.insert(id);
  return failed == expected_run ? 0 : 1;
}
