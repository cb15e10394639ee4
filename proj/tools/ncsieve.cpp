#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "ncsieve/commands.hpp"
#include "ncsieve/errors.hpp"

using namespace ncsieve;

int main(int argc, char** argv) {
  CLI::App app{"ncsieve: noncrossing partitions and cyclic sieving for reflection groups"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t max_group_size = 1'000'000;
  std::string format = "text";
  std::string catalog;
  app.add_option("--max-group-size", max_group_size, "Largest |W| to enumerate")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--catalog", catalog, "Extra catalog file or directory");

  std::string spec;
  unsigned m = 1, d = 0, max_rank = 0, n = 0;
  std::uint64_t p = 0;
  std::string action = "conj", block_type;
  double time_budget = 0;

  auto* group_info = app.add_subcommand("group-info", "Degrees, codegrees, Cat(W,q), regular numbers, center");
  group_info->add_option("spec", spec, "Group, e.g. A3, G(3,1,2), E8")->required();

  auto* csp_nc = app.add_subcommand("csp-nc", "CSP for a cyclic action on NC(W) or NC^m(W)");
  csp_nc->add_option("spec", spec)->required();
  csp_nc->add_option("--m", m, "Fuss parameter");
  csp_nc->add_option("--action", action, "conj | kreweras | armstrong | bessis")
      ->check(CLI::IsMember({"conj", "kreweras", "armstrong", "bessis"}));

  auto* csp_classical = app.add_subcommand("csp-classical", "Rotation CSP on noncrossing partitions of [n]");
  csp_classical->add_option("n", n)->required()->check(CLI::Range(1u, 14u));
  csp_classical->add_option("--block-type", block_type, "size:count pairs, e.g. 1:2,2:1");

  auto* csp_panyushev = app.add_subcommand("csp-panyushev", "Panyushev action on root poset antichains");
  csp_panyushev->add_option("spec", spec, "Weyl type, e.g. B3")->required();

  auto* torus = app.add_subcommand("torus", "W-action on the finite torus Q/pQ");
  torus->add_option("spec", spec, "Weyl type")->required();
  torus->add_option("--p", p)->required()->check(CLI::PositiveNumber);

  auto* restriction = app.add_subcommand("restriction", "Centralizer of c^(h/d) and NC(W) restricted to it");
  restriction->add_option("spec", spec)->required();
  restriction->add_option("--d", d, "Divisor of h; 0 for all divisors");

  auto* verify_all = app.add_subcommand("verify-all", "Run the full verification matrix");
  verify_all->add_option("--max-rank", max_rank, "Skip groups of larger rank (0 = no limit)");
  verify_all->add_option("--time-budget", time_budget, "Seconds (0 = none)")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  CommandOptions opts{max_group_size, catalog};
  ReportDocument doc;
  if (*group_info) {
    doc = cmd_group_info(spec, opts);
  } else if (*csp_nc) {
    doc = cmd_csp_nc(spec, m, action, opts);
  } else if (*csp_classical) {
    std::optional<BlockType> type;
    if (!block_type.empty()) {
      try {
        type = BlockType::parse(block_type);
      } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
      }
    }
    doc = cmd_csp_classical(n, type, opts);
  } else if (*csp_panyushev) {
    doc = cmd_csp_panyushev(spec, opts);
  } else if (*torus) {
    doc = cmd_torus(spec, p, opts);
  } else if (*restriction) {
    doc = cmd_restriction(spec, d, opts);
  } else {
    doc = cmd_verify_all(VerifyOptions{max_rank, max_group_size, time_budget});
  }

  if (format == "json")
    std::cout << doc.to_json().dump(2) << "\n";
  else
    std::cout << doc.to_text();
  return doc.exit_code();
}
