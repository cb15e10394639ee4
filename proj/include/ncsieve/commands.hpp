#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "ncsieve/classical.hpp"
#include "ncsieve/report.hpp"
#include "ncsieve/verification.hpp"

namespace ncsieve {

struct CommandOptions {
  std::uint64_t max_group_size = 1'000'000;
  /// Extra catalog file or directory, layered over the shipped catalog.
  std::string catalog_path;
};

/// Shipped catalog plus the override path, if any.
const Catalog& catalog_for(const CommandOptions& options);

std::shared_ptr<const ReflectionGroup> build_group(const std::string& spec, const CommandOptions& options);

/// Every command catches its own errors: status error, message in result.error.
ReportDocument cmd_group_info(const std::string& spec, const CommandOptions& options = {});
/// action: conj | kreweras (m = 1 only), armstrong (m >= 1), bessis (m >= 0).
ReportDocument cmd_csp_nc(const std::string& spec, unsigned m, const std::string& action,
                          const CommandOptions& options = {});
/// Rotation CSP on NC(n) (no type) or on one block type, with the
/// d-fold-symmetric counts for every d | n.
ReportDocument cmd_csp_classical(unsigned n, const std::optional<BlockType>& type, const CommandOptions& options = {});
ReportDocument cmd_csp_panyushev(const std::string& type, const CommandOptions& options = {});
ReportDocument cmd_torus(const std::string& type, std::uint64_t p, const CommandOptions& options = {});
/// d = 0 runs every divisor of h.
ReportDocument cmd_restriction(const std::string& spec, unsigned d, const CommandOptions& options = {});
ReportDocument cmd_verify_all(const VerifyOptions& options);

}  // namespace ncsieve
