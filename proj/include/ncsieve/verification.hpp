#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ncsieve/report.hpp"

namespace ncsieve {

/// Proved results must pass; conjectures may fail (a counterexample is a
/// finding); oracle items check the engine itself and must pass.
enum class ClaimKind { Theorem, Conjecture, Oracle };

const char* to_string(ClaimKind k);

struct VerifyOptions {
  /// Items on groups of larger rank are skipped; 0 means no limit.
  unsigned max_rank = 0;
  /// Largest |W| an item may enumerate. Below 2 no nontrivial group fits,
  /// and every item reports a size error.
  std::uint64_t max_group_size = 1'000'000;
  /// Seconds; items starting after the budget is spent report an error. 0 = none.
  double time_budget = 0;
};

struct ItemOutcome {
  Status status = Status::Pass;
  std::string detail;
};

struct VerificationItem {
  std::string key;  // e.g. "main-csp/A3"
  std::string claim;
  ClaimKind kind = ClaimKind::Theorem;
  unsigned rank = 0;
  /// |W| the item enumerates, or 0 when it is arithmetic only.
  std::uint64_t enumerated_order = 0;
  std::function<ItemOutcome()> run;
};

/// Groups for the main CSP suite: A1-A6, B2-B5, D4, D5, I2(3..12), H3, F4,
/// and G(d,1,n), G(e,e,n) with d^n n! <= 10^5 (n >= 2, without G(2,2,2))
/// plus G(d,1,1) for d <= 12.
std::vector<std::string> main_suite_groups();

/// The full matrix of items over every in-scope result.
std::vector<VerificationItem> verification_matrix(const VerifyOptions& options);

struct ItemResult {
  std::string key;
  std::string claim;
  ClaimKind kind = ClaimKind::Theorem;
  ItemOutcome outcome;
  double wall_ms = 0;
};

/// Run the items (sorted by key) under the budgets. SizeError, DomainError,
/// ParseError and InternalError inside an item become Status::Error.
std::vector<ItemResult> run_verification(const std::vector<VerificationItem>& items, const VerifyOptions& options);

/// Exceptions thrown by an item body, mapped to an outcome.
ItemOutcome guarded(const std::function<ItemOutcome()>& body);

}  // namespace ncsieve
