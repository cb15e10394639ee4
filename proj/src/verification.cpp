#include "ncsieve/verification.hpp"

#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <unordered_set>

#include "ncsieve/commands.hpp"
#include "ncsieve/errors.hpp"
#include "ncsieve/noncrossing.hpp"
#include "ncsieve/qanalog.hpp"
#include "ncsieve/root_system.hpp"

namespace ncsieve {

const char* to_string(ClaimKind k) {
  switch (k) {
    case ClaimKind::Theorem:
      return "theorem";
    case ClaimKind::Conjecture:
      return "conjecture";
    case ClaimKind::Oracle:
      return "oracle";
  }
  return "theorem";
}

std::vector<std::string> main_suite_groups() {
  std::vector<std::string> out = {"A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "B5", "D4", "D5", "H3", "F4"};
  for (unsigned m = 3; m <= 12; ++m) out.push_back("I2(" + std::to_string(m) + ")");
  for (unsigned d = 2; d <= 12; ++d) out.push_back("G(" + std::to_string(d) + ",1,1)");
  for (unsigned n = 2;; ++n) {
    bool any = false;
    for (unsigned d = 2;; ++d) {
      double size = std::pow(static_cast<double>(d), n);
      for (unsigned k = 2; k <= n; ++k) size *= k;
      if (size > 1e5) break;
      any = true;
      const std::string ds = std::to_string(d), ns = std::to_string(n);
      out.push_back("G(" + ds + ",1," + ns + ")");
      if (!(d == 2 && n == 2)) out.push_back("G(" + ds + "," + ds + "," + ns + ")");
    }
    if (!any) break;
  }
  return out;
}

namespace {

// Enumeration beyond this order is out of scope for the matrix.
constexpr std::uint64_t kEnumerableBound = 1'000'000;

struct SpecData {
  unsigned rank = 0;
  std::vector<unsigned> degrees;
  std::uint64_t order = 1;
};

SpecData spec_data(const std::string& text) {
  const GroupSpec spec = parse_spec(text);
  SpecData s;
  s.rank = spec.rank();
  if (const auto* g = std::get_if<MonomialG>(&spec.family)) {
    if (g->d == 1) {
      for (unsigned i = 2; i <= g->n; ++i) s.degrees.push_back(i);
    } else if (g->e == 1) {
      for (unsigned i = 1; i <= g->n; ++i) s.degrees.push_back(i * g->d);
    } else {
      for (unsigned i = 1; i < g->n; ++i) s.degrees.push_back(i * g->d);
      s.degrees.push_back(g->n);
    }
  } else {
    const CatalogEntry* e = Catalog::shipped().find(spec.label);
    if (!e) throw DomainError("no catalog entry for " + spec.label);
    s.degrees = e->degrees;
  }
  std::sort(s.degrees.begin(), s.degrees.end());
  for (unsigned d : s.degrees) s.order *= d;
  return s;
}

std::uint64_t weyl_order(const RootSystem& rs) {
  std::uint64_t o = 1;
  for (unsigned d : rs.degrees) o *= d;
  return o;
}

ItemOutcome from_document(const ReportDocument& doc) {
  ItemOutcome out;
  out.status = doc.status;
  if (doc.result.contains("error")) {
    out.detail = doc.result["error"].get<std::string>();
  } else {
    for (const auto& f : doc.findings) out.detail += (out.detail.empty() ? "" : "; ") + f;
    if (out.detail.empty() && doc.status != Status::Pass) out.detail = "check failed; rerun `" + doc.command + "` for the report";
  }
  return out;
}

ItemOutcome outcome(bool ok, std::string detail_on_failure) {
  return ok ? ItemOutcome{} : ItemOutcome{Status::Fail, std::move(detail_on_failure)};
}

ItemOutcome center_item(const std::string& spec, const CommandOptions& opts) {
  auto g = build_group(spec, opts);
  const CenterInfo z = g->center();
  std::vector<GroupElement> central;
  for (const auto& w : g->elements()) {
    bool commutes = true;
    for (const auto& s : g->generators()) commutes = commutes && w * s == s * w;
    if (commutes) central.push_back(w);
  }
  std::unordered_set<GroupElement> powers;
  for (unsigned k = 0; k < z.order; ++k) powers.insert(z.generator.pow(k));
  const bool ok = central.size() == z.order && powers.size() == z.order &&
                  std::all_of(central.begin(), central.end(), [&](const GroupElement& w) { return powers.count(w) > 0; });
  return outcome(ok, "center has " + std::to_string(central.size()) + " elements, gcd(degrees) = " + std::to_string(z.order));
}

ItemOutcome fuss_item(const std::vector<unsigned>& degrees) {
  const unsigned h = degrees.back();
  for (unsigned m = 1; m <= 3; ++m) {
    std::vector<unsigned long> tops;
    for (unsigned d : degrees) tops.push_back(m * h + d);
    const auto [q, r] = divmod(q_int_product(tops), q_int_product({degrees.begin(), degrees.end()}));
    if (!r.is_zero()) return {Status::Fail, "Cat^" + std::to_string(m) + " leaves a nonzero remainder"};
    if (!q.nonnegative()) return {Status::Fail, "Cat^" + std::to_string(m) + " has a negative coefficient"};
    if (!(q == catalan_poly(QCatalanSpec::from_degrees(degrees, m))))
      return {Status::Fail, "Cat^" + std::to_string(m) + " differs from catalan_poly"};
  }
  return {};
}

ItemOutcome e8_item() {
  const auto spec = QCatalanSpec::from_degrees({2, 8, 12, 14, 18, 20, 24, 30});
  const RootEvaluation ev = eval_integer_at_root(catalan_poly(spec), 4);
  const mpq_class limit = catalan_limit_product(spec, 4);
  const bool ok = ev.value && *ev.value == 88 && limit == 88;
  return outcome(ok, "Cat(E8, i) = " + (ev.value ? ev.value->get_str() : ev.residue.to_string()) +
                         ", limit product " + limit.get_str() + ", expected 88");
}

ItemOutcome mutation_item(const std::string& spec, const CommandOptions& opts, std::uint64_t seed) {
  auto g = build_group(spec, opts);
  const NCPoset nc = enumerate_nc(g);
  const IntPoly cat = catalan_poly(QCatalanSpec::from_degrees(g->degrees()));
  const CyclicActionInstance inst = conjugation_action(nc);
  if (!csp_check(inst, cat).pass) return {Status::Fail, "unperturbed CSP fails"};
  std::mt19937_64 rng(seed);
  constexpr unsigned kTrials = 20;
  const unsigned rejected = mutation_test(inst, cat, kTrials, rng);
  return outcome(rejected == kTrials, std::to_string(kTrials - rejected) + " perturbed polynomials were accepted");
}

ItemOutcome length_item(const std::string& spec, const CommandOptions& opts) {
  auto g = build_group(spec, opts);
  const LengthTable lengths(*g);
  const auto by_length = nc_by_length(*g, lengths);
  const NCPoset nc = enumerate_nc(g);
  const std::unordered_set<GroupElement> by_fixed(nc.elements().begin(), nc.elements().end());
  if (by_length != by_fixed)
    return {Status::Fail, "length-based NC has " + std::to_string(by_length.size()) + " elements, fixed-space NC " +
                              std::to_string(by_fixed.size())};
  for (const auto& w : g->elements()) {
    const unsigned codim = g->rank() - g->fixed_space_dim(w);
    const unsigned len = lengths(w);
    if (len < codim) return {Status::Fail, "absolute length below codimension for " + w.to_string()};
    if (by_fixed.count(w) && len != codim) return {Status::Fail, "absolute length exceeds codimension on NC for " + w.to_string()};
  }
  return {};
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
  return h;
}

std::string pad(unsigned x) { return (x < 10 ? "0" : "") + std::to_string(x); }

}  // namespace

std::vector<VerificationItem> verification_matrix(const VerifyOptions& options) {
  std::vector<VerificationItem> items;
  CommandOptions opts;
  opts.max_group_size = options.max_group_size;
  auto add = [&](std::string key, std::string claim, ClaimKind kind, unsigned rank, std::uint64_t order,
                 std::function<ItemOutcome()> run) {
    if (options.max_rank != 0 && rank > options.max_rank) return;
    items.push_back(VerificationItem{std::move(key), std::move(claim), kind, rank, order, std::move(run)});
  };

  const auto suite = main_suite_groups();
  std::vector<std::string> with_catalog = suite;
  for (const auto& e : Catalog::shipped().entries())
    if (std::find(with_catalog.begin(), with_catalog.end(), e.name) == with_catalog.end()) with_catalog.push_back(e.name);

  for (const auto& g : suite) {
    const SpecData s = spec_data(g);
    add("main-csp/" + g, "conjugation by c on NC(W) exhibits the CSP with Cat(W,q); |NC(W)| = Cat(W), palindromic ranks, lattice",
        ClaimKind::Theorem, s.rank, 0, [=] { return from_document(cmd_csp_nc(g, 1, "conj", opts)); });
    add("mutation/" + g, "perturbed Cat(W,q) is rejected by the CSP engine", ClaimKind::Oracle, s.rank, 0,
        [=] { return mutation_item(g, opts, fnv1a(g)); });
    if (s.order <= 10'000)
      add("length-oracle/" + g, "length-based and fixed-space NC(W) agree; absolute length vs codimension",
          ClaimKind::Oracle, s.rank, s.order, [=] { return length_item(g, opts); });
  }
  for (const auto& g : with_catalog) {
    const SpecData s = spec_data(g);
    add("group-data/" + g, "degree/codegree duality and regularity of h", ClaimKind::Theorem, s.rank, 0,
        [=] { return from_document(cmd_group_info(g, opts)); });
    add("fuss-catalan/" + g, "Cat^m(W,q), m <= 3, is a polynomial with nonnegative coefficients", ClaimKind::Theorem, s.rank,
        0, [=] { return fuss_item(s.degrees); });
    if (s.order <= kEnumerableBound) {
      add("center/" + g, "center order gcd(d_i), generated by c^(h/gcd)", ClaimKind::Theorem, s.rank, s.order,
          [=] { return center_item(g, opts); });
      add("restriction/" + g, "centralizer of c^(h/d): order, reflection generation, NC(W) meets W' in NC(W')",
          ClaimKind::Theorem, s.rank, s.order, [=] { return from_document(cmd_restriction(g, 0, opts)); });
    }
  }
  add("e8-quarter-turn", "Cat(E8, q) at a primitive 4th root of unity is 88", ClaimKind::Theorem, 8, 0, e8_item);

  // Classical items enumerate NC(n) directly, never the symmetric group.
  for (unsigned n = 1; n <= 10; ++n) {
    add("classical-rotation/" + pad(n), "rotation on NC(n) exhibits the CSP with C_n(q)", ClaimKind::Theorem, n - 1, 0,
        [=] { return from_document(cmd_csp_classical(n, std::nullopt, opts)); });
    if (n > 8) continue;
    for (const auto& t : all_block_types(n))
      add("refined-csp/" + pad(n) + "/" + t.to_string(), "rotation on a block type exhibits the CSP; symmetric counts",
          ClaimKind::Theorem, n - 1, 0, [=] { return from_document(cmd_csp_classical(n, t, opts)); });
  }

  std::vector<std::pair<std::string, unsigned>> fuss_groups = {{"D4", 2}, {"H3", 2}};
  for (const char* g : {"A1", "A2", "A3", "A4", "B2", "B3"}) fuss_groups.emplace_back(g, 3);
  for (unsigned m = 3; m <= 8; ++m) fuss_groups.emplace_back("I2(" + std::to_string(m) + ")", 3);
  for (const auto& [g, max_m] : fuss_groups) {
    const SpecData s = spec_data(g);
    add("kreweras/" + g, "Kreweras complement on NC(W) exhibits the CSP (order 2h)", ClaimKind::Conjecture, s.rank, 0,
        [=, g = g] { return from_document(cmd_csp_nc(g, 1, "kreweras", opts)); });
    for (unsigned m = 1; m <= max_m; ++m) {
      add("armstrong/" + g + "/m" + std::to_string(m), "Armstrong rotation on NC^m(W) exhibits the CSP (order mh)",
          ClaimKind::Conjecture, s.rank, 0, [=, g = g] { return from_document(cmd_csp_nc(g, m, "armstrong", opts)); });
      add("bessis/" + g + "/m" + std::to_string(m), "Bessis rotation on NC^m(W) exhibits the CSP (order (m+1)h)",
          ClaimKind::Conjecture, s.rank, 0, [=, g = g] { return from_document(cmd_csp_nc(g, m, "bessis", opts)); });
    }
  }

  for (const char* t : {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "C3", "D4", "G2"}) {
    const RootSystem rs = build_root_system(t);
    add(std::string("panyushev/") + t, "Panyushev map exhibits the CSP with Cat(W,q) (order 2h)", ClaimKind::Conjecture,
        rs.rank, 0, [=] { return from_document(cmd_csp_panyushev(t, opts)); });
  }
  for (const char* t : {"A1", "A2", "A3", "A4", "B2", "B3", "D4", "G2"}) {
    const RootSystem rs = build_root_system(t);
    const std::uint64_t order = weyl_order(rs);
    for (unsigned p = 1; p <= 12; ++p)
      add(std::string("torus/") + t + "/p" + pad(p), "|(Q/pQ)^w| = p^dim V^w for every w", ClaimKind::Theorem, rs.rank,
          order, [=] { return from_document(cmd_torus(t, p, opts)); });
    const unsigned p = rs.coxeter_number + 1;
    add(std::string("torus/") + t + "/h+1", "|W \\ Q/(h+1)Q| = Cat(W)", ClaimKind::Theorem, rs.rank, order,
        [=] { return from_document(cmd_torus(t, p, opts)); });
  }
  return items;
}

ItemOutcome guarded(const std::function<ItemOutcome()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    return {Status::Error, std::string("parse error: ") + e.what()};
  } catch (const DomainError& e) {
    return {Status::Error, std::string("domain error: ") + e.what()};
  } catch (const SizeError& e) {
    return {Status::Error, std::string("size error: ") + e.what()};
  } catch (const InternalError& e) {
    return {Status::Error, std::string("internal error: ") + e.what()};
  }
}

std::vector<ItemResult> run_verification(const std::vector<VerificationItem>& items, const VerifyOptions& options) {
  std::vector<const VerificationItem*> order;
  for (const auto& it : items) order.push_back(&it);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->key < b->key; });
  const auto start = std::chrono::steady_clock::now();
  std::vector<ItemResult> out;
  for (const auto* it : order) {
    ItemResult r{it->key, it->claim, it->kind, {}, 0};
    const auto t0 = std::chrono::steady_clock::now();
    const double spent = std::chrono::duration<double>(t0 - start).count();
    if (options.max_group_size < 2) {
      r.outcome = {Status::Error, "size error: a budget of " + std::to_string(options.max_group_size) +
                                      " admits no nontrivial group"};
    } else if (it->enumerated_order > options.max_group_size) {
      r.outcome = {Status::Error, "size error: |W| = " + std::to_string(it->enumerated_order) + " exceeds the budget " +
                                      std::to_string(options.max_group_size)};
    } else if (options.time_budget > 0 && spent > options.time_budget) {
      r.outcome = {Status::Error, "time budget exhausted"};
    } else {
      r.outcome = guarded(it->run);
    }
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace ncsieve
