#include "ncsieve/commands.hpp"

#include <chrono>
#include <filesystem>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_set>

#include "ncsieve/errors.hpp"
#include "ncsieve/noncrossing.hpp"
#include "ncsieve/qanalog.hpp"
#include "ncsieve/restricted_group.hpp"
#include "ncsieve/root_system.hpp"

namespace ncsieve {

const Catalog& catalog_for(const CommandOptions& options) {
  if (options.catalog_path.empty()) return Catalog::shipped();
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<Catalog>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[options.catalog_path];
  if (!slot) {
    auto c = std::make_unique<Catalog>(Catalog::shipped());
    const std::filesystem::path path(options.catalog_path);
    if (std::filesystem::is_directory(path)) {
      std::vector<std::filesystem::path> files;
      for (const auto& entry : std::filesystem::directory_iterator(path))
        if (entry.path().extension() == ".json") files.push_back(entry.path());
      std::sort(files.begin(), files.end());
      for (const auto& f : files) c->add_file(f);
    } else if (std::filesystem::is_regular_file(path)) {
      c->add_file(path);
    } else {
      throw ParseError("catalog path '" + options.catalog_path + "' does not exist");
    }
    slot = std::move(c);
  }
  return *slot;
}

std::shared_ptr<const ReflectionGroup> build_group(const std::string& spec, const CommandOptions& options) {
  return ReflectionGroup::build(parse_spec(spec), catalog_for(options), GroupOptions{options.max_group_size});
}

namespace {

template <class Body>
ReportDocument run_command(std::string echo, Body&& body) {
  ReportDocument doc;
  doc.command = std::move(echo);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(doc);
  } catch (const ParseError& e) {
    doc.status = Status::Error;
    doc.result["error"] = std::string("parse error: ") + e.what();
  } catch (const DomainError& e) {
    doc.status = Status::Error;
    doc.result["error"] = std::string("domain error: ") + e.what();
  } catch (const SizeError& e) {
    doc.status = Status::Error;
    doc.result["error"] = std::string("size error: ") + e.what();
  } catch (const InternalError& e) {
    doc.status = Status::Error;
    doc.result["error"] = std::string("internal error: ") + e.what();
  }
  doc.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return doc;
}

std::string failing_powers(const CSPReport& r) {
  if (!r.order_valid) return "generator^N is not the identity";
  std::string s;
  for (const auto& row : r.rows)
    if (!row.match) s += (s.empty() ? "" : ",") + std::to_string(row.power);
  return "mismatch at powers " + s;
}

bool palindromic(const std::vector<std::size_t>& v) { return std::equal(v.begin(), v.end(), v.rbegin()); }

Json restriction_result(const std::shared_ptr<const ReflectionGroup>& g, const NCPoset& nc, unsigned d, bool& pass) {
  auto r = RestrictedGroup::build(g, d);
  Json j;
  j["d"] = d;
  j["order"] = r->elements().size();
  j["degrees"] = r->degrees();
  j["rank"] = r->rank();
  std::uint64_t expected_order = 1;
  unsigned expected_reflections = 0;
  for (unsigned deg : r->degrees()) {
    expected_order *= deg;
    expected_reflections += deg - 1;
  }
  j["expected_order"] = expected_order;
  j["reflections"] = r->reflections().size();
  j["expected_reflections"] = expected_reflections;
  const bool generate = r->reflections_generate();
  j["reflections_generate"] = generate;

  std::unordered_set<GroupElement> cap;
  for (const auto& w : nc.elements())
    if (r->contains(w)) cap.insert(w);
  const NCPoset sub = enumerate_nc(r);
  std::unordered_set<GroupElement> restricted(sub.elements().begin(), sub.elements().end());
  const mpz_class cat = catalan_poly(QCatalanSpec::from_degrees(r->degrees())).eval(1);
  j["nc_intersection"] = cap.size();
  j["nc_restricted"] = restricted.size();
  j["catalan"] = to_json(cat);
  j["equal"] = cap == restricted;
  const bool ok = r->elements().size() == expected_order && r->reflections().size() == expected_reflections &&
                  generate && cap == restricted && mpz_class(restricted.size()) == cat;
  j["pass"] = ok;
  pass = pass && ok;
  return j;
}

}  // namespace

ReportDocument cmd_group_info(const std::string& spec, const CommandOptions& options) {
  return run_command("group-info " + spec, [&](ReportDocument& doc) {
    auto g = build_group(spec, options);
    doc.group = group_block(*g);
    const IntPoly cat = catalan_poly(QCatalanSpec::from_degrees(g->degrees()));
    doc.result["catalan_coefficients"] = to_json(cat);
    doc.result["catalan_at_1"] = to_json(cat.eval(1));
    bool duality = true;
    for (unsigned i = 0; i < g->rank(); ++i) duality = duality && g->degrees()[i] + g->codegrees()[i] == g->coxeter_number();
    const auto reg = g->regular_numbers();
    const bool h_regular = std::find(reg.begin(), reg.end(), g->coxeter_number()) != reg.end();
    doc.result["duality"] = duality;
    doc.result["h_regular"] = h_regular;
    const CenterInfo z = g->center();
    doc.result["center_generator"] = z.generator.to_string();
    doc.result["coxeter_element"] = g->coxeter_element().to_string();
    doc.status = duality && h_regular ? Status::Pass : Status::Fail;
  });
}

ReportDocument cmd_csp_nc(const std::string& spec, unsigned m, const std::string& action, const CommandOptions& options) {
  return run_command("csp-nc " + spec + " --m " + std::to_string(m) + " --action " + action, [&](ReportDocument& doc) {
    if (action != "conj" && action != "kreweras" && action != "armstrong" && action != "bessis")
      throw ParseError("unknown action '" + action + "' (conj, kreweras, armstrong, bessis)");
    if ((action == "conj" || action == "kreweras") && m != 1) throw DomainError(action + " acts on NC(W); use --m 1");
    if (action == "armstrong" && m == 0) throw DomainError("armstrong needs m >= 1");
    auto g = build_group(spec, options);
    doc.group = group_block(*g);
    const NCPoset nc = enumerate_nc(g);
    const IntPoly cat1 = catalan_poly(QCatalanSpec::from_degrees(g->degrees()));
    const IntPoly poly = catalan_poly(QCatalanSpec::from_degrees(g->degrees(), m));
    const bool size_ok = mpz_class(nc.size()) == cat1.eval(1);
    const bool narayana_ok = palindromic(nc.rank_sizes());
    doc.result["nc_size"] = nc.size();
    doc.result["narayana"] = nc.rank_sizes();
    doc.result["nc_size_matches_catalan"] = size_ok;
    doc.result["narayana_palindromic"] = narayana_ok;
    bool lattice_ok = true;
    if (nc.has_order_matrix()) {
      const LatticeCheck lc = lattice_check(nc);
      lattice_ok = lc.passed;
      doc.result["lattice"] = lc.passed;
      if (!lc.passed) doc.result["lattice_diagnostics"] = lc.diagnostics;
    }

    CyclicActionInstance inst;
    std::size_t set_size = nc.size();
    if (action == "conj") {
      inst = conjugation_action(nc);
    } else if (action == "kreweras") {
      inst = kreweras_action(nc);
    } else {
      const NCMTuples tuples = enumerate_nc_m(nc, m);
      set_size = tuples.size();
      inst = action == "armstrong" ? armstrong_action(nc, tuples) : bessis_action(nc, tuples);
    }
    const CSPReport rep = csp_check(inst, poly);
    const bool conjecture = action != "conj";
    doc.result["action"] = action;
    doc.result["m"] = m;
    doc.result["label"] = inst.label;
    doc.result["claim"] = conjecture ? "conjecture" : "theorem";
    doc.result["set_size"] = set_size;
    doc.result["catalan_m_at_1"] = to_json(poly.eval(1));
    doc.result["csp"] = to_json(rep);
    const bool structure_ok = size_ok && narayana_ok && lattice_ok && mpz_class(set_size) == poly.eval(1);
    doc.status = structure_ok && rep.pass ? Status::Pass : Status::Fail;
    if (!structure_ok) doc.findings.push_back(g->name() + ": NC(W) structure check failed");
    if (!rep.pass && conjecture)
      doc.findings.push_back(inst.label + ": conjectured CSP fails (" + failing_powers(rep) + ")");
  });
}

ReportDocument cmd_csp_classical(unsigned n, const std::optional<BlockType>& type, const CommandOptions&) {
  std::string echo = "csp-classical " + std::to_string(n);
  if (type) echo += " --block-type " + type->to_string();
  return run_command(echo, [&](ReportDocument& doc) {
    if (n == 0) throw DomainError("csp-classical needs n >= 1");
    bool pass = true;
    if (!type) {
      const auto all = enumerate_ncn(n);
      const IntPoly cat = q_catalan(n);
      const CSPReport rep = csp_check(rotation_action(all, n), cat);
      doc.result["set_size"] = all.size();
      doc.result["catalan"] = to_json(cat.eval(1));
      doc.result["csp"] = to_json(rep);
      pass = rep.pass && mpz_class(all.size()) == cat.eval(1);
    } else {
      const CSPReport rep = refined_csp(n, *type);
      const mpz_class count = kreweras_count(n, *type);
      doc.result["block_type"] = type->to_string();
      doc.result["kreweras_count"] = to_json(count);
      doc.result["csp"] = to_json(rep);
      pass = rep.pass && mpz_class(rep.set_size) == count;
      Json sym = Json::array();
      const IntPoly poly = q_kreweras_poly(n, *type);
      for (unsigned d = 2; d <= n; ++d) {
        if (n % d != 0) continue;
        const mpz_class brute = symmetric_type_count(n, d, *type);
        const auto formula = type_b_count(n, d, *type);
        const RootEvaluation ev = eval_integer_at_root(poly, d);
        Json row;
        row["d"] = d;
        row["brute_force"] = to_json(brute);
        row["type_b_formula"] = formula ? to_json(*formula) : Json(nullptr);
        row["evaluation"] = ev.value ? to_json(*ev.value) : Json(ev.residue.to_string());
        const bool ok = (formula ? *formula : mpz_class(0)) == brute && ev.value && *ev.value == brute;
        row["agree"] = ok;
        pass = pass && ok;
        sym.push_back(std::move(row));
      }
      doc.result["symmetric_counts"] = sym;
    }
    doc.result["claim"] = "theorem";
    doc.status = pass ? Status::Pass : Status::Fail;
  });
}

ReportDocument cmd_csp_panyushev(const std::string& type, const CommandOptions& options) {
  return run_command("csp-panyushev " + type, [&](ReportDocument& doc) {
    const RootSystem rs = build_root_system(type);
    std::uint64_t order = 1;
    for (unsigned d : rs.degrees) order *= d;
    doc.group = Json{{"name", rs.name},         {"rank", rs.rank},     {"degrees", rs.degrees},
                     {"coxeter_number", rs.coxeter_number}, {"order", order}, {"positive_roots", rs.positive_roots.size()}};
    (void)options;
    const auto antichains = enumerate_antichains(rs);
    const IntPoly cat = catalan_poly(QCatalanSpec::from_degrees(rs.degrees));
    const CyclicActionInstance inst = panyushev_action(rs, antichains);
    inst.validate();
    const CSPReport rep = csp_check(inst, cat);
    const unsigned period = minimal_period(inst);
    const bool divides = (2 * rs.coxeter_number) % period == 0;
    doc.result["antichains"] = antichains.size();
    doc.result["catalan"] = to_json(cat.eval(1));
    doc.result["generator_order"] = period;
    doc.result["order_divides_2h"] = divides;
    doc.result["claim"] = "conjecture";
    doc.result["csp"] = to_json(rep);

    // The strict convention, recorded for comparison.
    const CyclicActionInstance strict = panyushev_action(rs, antichains, AboveConvention::Strict);
    std::vector<char> hit(strict.size(), 0);
    std::size_t fixed = 0;
    for (std::size_t i = 0; i < strict.size(); ++i) {
      hit[strict.generator[i]] = 1;
      if (strict.generator[i] == i) ++fixed;
    }
    doc.result["strict_convention"] = Json{{"bijection", std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; })},
                                           {"fixed_points", fixed}};

    const bool sizes_ok = mpz_class(antichains.size()) == cat.eval(1);
    doc.status = sizes_ok && rep.pass && divides ? Status::Pass : Status::Fail;
    if (!rep.pass) doc.findings.push_back(inst.label + ": conjectured CSP fails (" + failing_powers(rep) + ")");
    if (!divides)
      doc.findings.push_back(inst.label + ": generator order " + std::to_string(period) + " does not divide 2h");
  });
}

ReportDocument cmd_torus(const std::string& type, std::uint64_t p, const CommandOptions& options) {
  return run_command("torus " + type + " --p " + std::to_string(p), [&](ReportDocument& doc) {
    if (p == 0) throw DomainError("torus needs p >= 1");
    const RootSystem rs = build_root_system(type);
    const auto group = weyl_group(rs, options.max_group_size);
    doc.group = Json{{"name", rs.name}, {"rank", rs.rank}, {"degrees", rs.degrees}, {"coxeter_number", rs.coxeter_number},
                     {"order", group.size()}};
    Json table = Json::array();
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < group.size(); ++i) {
      const unsigned dim = fixed_space_dim(group[i]);
      const std::uint64_t fixed = torus_fixed_count(group[i], p);
      const std::uint64_t expected = checked_pow(p, dim);
      Json rows = Json::array();
      for (Eigen::Index r = 0; r < group[i].rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < group[i].cols(); ++c) row.push_back(group[i](r, c));
        rows.push_back(std::move(row));
      }
      table.push_back(Json{{"element", i}, {"matrix", rows}, {"dim_fixed_space", dim}, {"fixed", fixed},
                           {"p_power", expected}, {"match", fixed == expected}});
      if (fixed != expected) ++mismatches;
    }
    const std::uint64_t orbits = torus_orbit_count(group, p);
    const mpz_class cat = catalan_poly(QCatalanSpec::from_degrees(rs.degrees)).eval(1);
    doc.result["p"] = p;
    doc.result["gcd_p_h"] = std::gcd(p, static_cast<std::uint64_t>(rs.coxeter_number));
    doc.result["fixed_counts"] = table;
    doc.result["character_mismatches"] = mismatches;
    doc.result["orbit_count"] = orbits;
    doc.result["claim"] = "theorem";
    bool pass = mismatches == 0;
    if (p == rs.coxeter_number + 1u) {
      doc.result["catalan"] = to_json(cat);
      doc.result["orbits_match_catalan"] = mpz_class(static_cast<unsigned long>(orbits)) == cat;
      pass = pass && mpz_class(static_cast<unsigned long>(orbits)) == cat;
    }
    doc.status = pass ? Status::Pass : Status::Fail;
    if (mismatches > 0)
      doc.findings.push_back(rs.name + ", p = " + std::to_string(p) + ": |fixed points| != p^dim V^w for " +
                             std::to_string(mismatches) + " of " + std::to_string(group.size()) +
                             " elements (gcd(p, h) = " + std::to_string(std::gcd(p, static_cast<std::uint64_t>(rs.coxeter_number))) + ")");
  });
}

ReportDocument cmd_restriction(const std::string& spec, unsigned d, const CommandOptions& options) {
  return run_command("restriction " + spec + " --d " + std::to_string(d), [&](ReportDocument& doc) {
    auto g = build_group(spec, options);
    doc.group = group_block(*g);
    const unsigned h = g->coxeter_number();
    if (d != 0 && h % d != 0) throw DomainError("d = " + std::to_string(d) + " does not divide h = " + std::to_string(h));
    const NCPoset nc = enumerate_nc(g);
    bool pass = true;
    Json rows = Json::array();
    for (unsigned k = 1; k <= h; ++k)
      if (h % k == 0 && (d == 0 || k == d)) rows.push_back(restriction_result(g, nc, k, pass));
    doc.result["restrictions"] = rows;
    doc.result["claim"] = "theorem";
    doc.status = pass ? Status::Pass : Status::Fail;
  });
}

ReportDocument cmd_verify_all(const VerifyOptions& options) {
  std::string echo = "verify-all --max-rank " + std::to_string(options.max_rank) + " --max-group-size " +
                     std::to_string(options.max_group_size);
  return run_command(echo, [&](ReportDocument& doc) {
    const auto results = run_verification(verification_matrix(options), options);
    Json items = Json::array();
    std::size_t counts[3] = {0, 0, 0};
    bool proved_failure = false, any_error = false;
    for (const auto& r : results) {
      ++counts[static_cast<int>(r.outcome.status)];
      items.push_back(Json{{"key", r.key},
                           {"claim", r.claim},
                           {"kind", to_string(r.kind)},
                           {"status", to_string(r.outcome.status)},
                           {"detail", r.outcome.detail}});
      if (r.outcome.status == Status::Fail) {
        if (r.kind == ClaimKind::Conjecture)
          doc.findings.push_back(r.key + ": " + r.outcome.detail);
        else
          proved_failure = true;
      }
      if (r.outcome.status == Status::Error) any_error = true;
    }
    doc.result["items"] = items;
    doc.result["summary"] = Json{{"items", results.size()}, {"pass", counts[0]}, {"fail", counts[1]}, {"error", counts[2]},
                                 {"findings", doc.findings.size()}};
    doc.status = proved_failure ? Status::Fail : any_error ? Status::Error : Status::Pass;
  });
}

}  // namespace ncsieve
