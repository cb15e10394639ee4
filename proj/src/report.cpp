#include "ncsieve/report.hpp"

#include <limits>
#include <sstream>

namespace ncsieve {

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Error:
      return "error";
  }
  return "error";
}

int ReportDocument::exit_code() const {
  switch (status) {
    case Status::Pass:
      return 0;
    case Status::Fail:
      return 1;
    case Status::Error:
      return 2;
  }
  return 2;
}

Json ReportDocument::to_json(bool include_wall_time) const {
  Json j;
  j["version"] = kReportVersion;
  j["command"] = command;
  j["group"] = group;
  j["result"] = result;
  j["status"] = ncsieve::to_string(status);
  j["findings"] = findings;
  j["wall_ms"] = include_wall_time ? Json(static_cast<std::int64_t>(wall_ms + 0.5)) : Json(nullptr);
  return j;
}

namespace {

void text_lines(std::ostringstream& out, const Json& j, const std::string& indent) {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << indent << key << ":\n";
      text_lines(out, value, indent + "  ");
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << indent << key << ": " << value.size() << " entries\n";
      for (const auto& row : value) out << indent << "  - " << row.dump() << "\n";
    } else {
      out << indent << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
}

}  // namespace

std::string ReportDocument::to_text() const {
  std::ostringstream out;
  out << "command: " << command << "\n";
  out << "status: " << ncsieve::to_string(status) << "\n";
  if (!group.is_null()) {
    out << "group:\n";
    text_lines(out, group, "  ");
  }
  out << "result:\n";
  text_lines(out, result, "  ");
  for (const auto& f : findings) out << "FINDING: " << f << "\n";
  out << "wall_ms: " << static_cast<std::int64_t>(wall_ms + 0.5) << "\n";
  return out.str();
}

Json to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

Json to_json(const IntPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
  return arr;
}

Json to_json(const CSPReport& r) {
  Json j;
  j["declared_order"] = r.declared_order;
  j["set_size"] = r.set_size;
  j["polynomial"] = to_json(r.polynomial);
  j["order_valid"] = r.order_valid;
  j["subgroup_consistent"] = r.subgroup_consistent;
  j["pass"] = r.pass;
  Json orbits = Json::object();
  for (const auto& [size, count] : r.orbit_sizes) orbits[std::to_string(size)] = count;
  j["orbit_sizes"] = orbits;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json x;
    x["power"] = row.power;
    x["root_order"] = row.root_order;
    x["fixed"] = row.fixed;
    x["evaluation"] = row.evaluation.value ? to_json(*row.evaluation.value) : Json(row.evaluation.residue.to_string());
    x["match"] = row.match;
    rows.push_back(std::move(x));
  }
  j["rows"] = rows;
  Json f;
  f["minimal_period"] = r.faithfulness.minimal_period;
  f["kernel_order"] = r.faithfulness.kernel_order;
  f["quotient"] = r.faithfulness.quotient ? to_json(*r.faithfulness.quotient) : Json(nullptr);
  f["quotient_from_reduction"] = r.faithfulness.quotient_from_reduction;
  j["faithfulness"] = f;
  return j;
}

Json group_block(const ReflectionGroup& g) {
  Json j;
  j["name"] = g.name();
  j["rank"] = g.rank();
  j["degrees"] = g.degrees();
  j["codegrees"] = g.codegrees();
  j["coxeter_number"] = g.coxeter_number();
  j["order"] = g.order();
  j["reflections"] = g.reflections().size();
  j["regular_numbers"] = g.regular_numbers();
  j["center_order"] = g.center().order;
  j["conductor"] = g.conductor();
  return j;
}

}  // namespace ncsieve
