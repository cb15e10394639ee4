#include "ncsieve/group_spec.hpp"

#include <charconv>
#include <regex>

#include "ncsieve/errors.hpp"

namespace ncsieve {

unsigned GroupSpec::rank() const {
  if (const auto* g = std::get_if<MonomialG>(&family)) return g->d == 1 ? g->n - 1 : g->n;
  return std::get<WeylOrReal>(family).rank;
}

std::string monomial_label(const MonomialG& g) {
  return "G(" + std::to_string(g.d) + "," + std::to_string(g.e) + "," + std::to_string(g.n) + ")";
}

namespace {

unsigned to_unsigned(const std::string& s, std::string_view text) {
  unsigned v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw ParseError("group spec '" + std::string(text) + "': bad integer '" + s + "'");
  return v;
}

GroupSpec monomial(MonomialG g, std::string label, std::string_view text) {
  if (g.d == 0 || g.e == 0 || g.n == 0) throw DomainError("group spec '" + std::string(text) + "': parameters must be positive");
  if (g.d % g.e != 0) throw DomainError("group spec '" + std::string(text) + "': e must divide d");
  if (g.e != 1 && g.e != g.d)
    throw DomainError("group spec '" + std::string(text) +
                      "': G(d,e,n) with 1 < e < d is not well-generated; only G(d,1,n) and G(e,e,n) are admitted");
  if (g.d == 1 && g.n < 2) throw DomainError("group spec '" + std::string(text) + "': G(1,1,n) needs n >= 2");
  if (g.e == g.d && g.d > 1 && g.n < 2) throw DomainError("group spec '" + std::string(text) + "': G(e,e,1) is trivial");
  if (g.e == g.d && g.d == 2 && g.n == 2)
    throw DomainError("group spec '" + std::string(text) + "': G(2,2,2) is reducible (A1 x A1)");
  return GroupSpec{g, label.empty() ? monomial_label(g) : std::move(label)};
}

}  // namespace

GroupSpec parse_spec(std::string_view text) {
  static const std::regex letter_re(R"(^([ABD])(\d+)$)");
  static const std::regex exceptional_re(R"(^(H3|H4|F4|E6|E7|E8)$)");
  static const std::regex dihedral_re(R"(^I2\((\d+)\)$)");
  static const std::regex monomial_re(R"(^G\((\d+),(\d+),(\d+)\)$)");
  std::string s;
  for (char c : text)
    if (c != ' ') s.push_back(c);
  std::smatch m;
  if (std::regex_match(s, m, letter_re)) {
    const unsigned k = to_unsigned(m[2], text);
    switch (m[1].str()[0]) {
      case 'A':
        if (k < 1) throw DomainError("group spec '" + s + "': A needs rank >= 1");
        return monomial({1, 1, k + 1}, s, text);
      case 'B':
        if (k < 2) throw DomainError("group spec '" + s + "': B needs rank >= 2");
        return monomial({2, 1, k}, s, text);
      default:
        if (k < 3) throw DomainError("group spec '" + s + "': D needs rank >= 3");
        return monomial({2, 2, k}, s, text);
    }
  }
  if (std::regex_match(s, m, exceptional_re)) {
    return GroupSpec{WeylOrReal{s[0], static_cast<unsigned>(s[1] - '0')}, s};
  }
  if (std::regex_match(s, m, dihedral_re)) {
    const unsigned k = to_unsigned(m[1], text);
    if (k < 3) throw DomainError("group spec '" + s + "': I2(m) needs m >= 3");
    return monomial({k, k, 2}, s, text);
  }
  if (std::regex_match(s, m, monomial_re)) {
    return monomial({to_unsigned(m[1], text), to_unsigned(m[2], text), to_unsigned(m[3], text)}, "", text);
  }
  throw ParseError("group spec '" + std::string(text) +
                   "' does not match A<k>|B<k>|D<k>|H3|H4|F4|E6|E7|E8|I2(<m>)|G(<d>,<e>,<n>)");
}

}  // namespace ncsieve
