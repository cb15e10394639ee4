#pragma once

#include <gmpxx.h>

#include <json.hpp>
#include <string>
#include <vector>

#include "ncsieve/int_poly.hpp"
#include "ncsieve/reflection_group.hpp"
#include "ncsieve/sieving.hpp"

namespace ncsieve {

using Json = nlohmann::json;  // std::map-backed objects, so keys serialize sorted

inline constexpr const char* kReportVersion = "1.0.0";

enum class Status { Pass, Fail, Error };

const char* to_string(Status s);

/// Output of every command. Exit codes: pass 0, fail 1, error 2.
struct ReportDocument {
  std::string command;  // echo of the invocation
  Json group;           // null when the command has no group
  Json result = Json::object();
  Status status = Status::Pass;
  std::vector<std::string> findings;
  double wall_ms = 0;

  int exit_code() const;

  Json to_json(bool include_wall_time = true) const;
  std::string to_text() const;
};

/// Exact integers as JSON numbers when they fit in 64 bits, else strings.
Json to_json(const mpz_class& z);
Json to_json(const IntPoly& p);
Json to_json(const CSPReport& r);
/// degrees, codegrees, h, |W|, |R|, regular numbers, center order.
Json group_block(const ReflectionGroup& g);

}  // namespace ncsieve
