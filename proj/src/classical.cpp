#include "ncsieve/classical.hpp"

#include <algorithm>
#include <charconv>

#include "ncsieve/errors.hpp"
#include "ncsieve/qanalog.hpp"

namespace ncsieve {

SetPartition SetPartition::from_blocks(unsigned n, std::vector<std::vector<unsigned>> blocks) {
  std::vector<char> seen(n + 1, 0);
  for (auto& b : blocks) {
    if (b.empty()) throw DomainError("set partition has an empty block");
    std::sort(b.begin(), b.end());
    for (unsigned x : b) {
      if (x < 1 || x > n || seen[x]) throw DomainError("set partition blocks must be disjoint subsets of [n]");
      seen[x] = 1;
    }
  }
  if (std::count(seen.begin() + 1, seen.end(), 1) != static_cast<long>(n)) throw DomainError("set partition does not cover [n]");
  std::sort(blocks.begin(), blocks.end());
  return SetPartition{n, std::move(blocks)};
}

bool SetPartition::is_noncrossing() const {
  std::vector<std::size_t> block_of(n + 1);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (unsigned x : blocks[b]) block_of[x] = b;
  for (unsigned a = 1; a <= n; ++a)
    for (unsigned b = a + 1; b <= n; ++b) {
      if (block_of[b] == block_of[a]) continue;
      for (unsigned c = b + 1; c <= n; ++c) {
        if (block_of[c] != block_of[a]) continue;
        for (unsigned d = c + 1; d <= n; ++d)
          if (block_of[d] == block_of[b]) return false;
      }
    }
  return true;
}

std::string SetPartition::to_string() const {
  std::string s;
  for (const auto& b : blocks) {
    if (!s.empty()) s += "|";
    s += "{";
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
    s += "}";
  }
  return s;
}

BlockType BlockType::of(const SetPartition& p) {
  BlockType t;
  for (const auto& b : p.blocks) ++t.multiplicity[static_cast<unsigned>(b.size())];
  return t;
}

BlockType BlockType::parse(std::string_view text) {
  BlockType t;
  std::size_t pos = 0;
  auto number = [&](std::string_view part) {
    unsigned v = 0;
    auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || p != part.data() + part.size() || part.empty())
      throw ParseError("block type '" + std::string(text) + "': expected size:count pairs");
    return v;
  };
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos) throw ParseError("block type '" + std::string(text) + "': expected size:count pairs");
    const unsigned size = number(item.substr(0, colon));
    const unsigned count = number(item.substr(colon + 1));
    if (size == 0) throw ParseError("block type '" + std::string(text) + "': block size 0");
    if (t.multiplicity.count(size)) throw ParseError("block type '" + std::string(text) + "': repeated size");
    if (count > 0) t.multiplicity[size] = count;
    pos = comma + 1;
  }
  return t;
}

unsigned BlockType::blocks() const {
  unsigned k = 0;
  for (const auto& [size, m] : multiplicity) k += m;
  return k;
}

unsigned BlockType::total() const {
  unsigned n = 0;
  for (const auto& [size, m] : multiplicity) n += size * m;
  return n;
}

std::string BlockType::to_string() const {
  std::string s;
  for (const auto& [size, m] : multiplicity) s += (s.empty() ? "" : ",") + std::to_string(size) + ":" + std::to_string(m);
  return s;
}

std::vector<BlockType> all_block_types(unsigned n) {
  std::vector<BlockType> out;
  BlockType current;
  auto split = [&](auto&& self, unsigned remaining, unsigned largest) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (unsigned s = std::min(remaining, largest); s >= 1; --s) {
      ++current.multiplicity[s];
      self(self, remaining - s, s);
      if (--current.multiplicity[s] == 0) current.multiplicity.erase(s);
    }
  };
  split(split, n, n);
  return out;
}

std::vector<SetPartition> enumerate_ncn(unsigned n, unsigned max_n) {
  if (n > max_n) throw SizeError("enumerate_ncn: n = " + std::to_string(n) + " exceeds " + std::to_string(max_n));
  // Element i either opens a block or joins an open block, closing every
  // block opened after that block's last element.
  std::vector<SetPartition> out;
  std::vector<std::vector<unsigned>> blocks;
  std::vector<std::size_t> open;
  auto place = [&](auto&& self, unsigned i) -> void {
    if (i > n) {
      out.push_back(SetPartition::from_blocks(n, blocks));
      return;
    }
    for (std::size_t depth = 0; depth < open.size(); ++depth) {
      const std::size_t b = open[depth];
      const std::vector<std::size_t> saved(open.begin() + static_cast<long>(depth) + 1, open.end());
      open.resize(depth + 1);
      blocks[b].push_back(i);
      self(self, i + 1);
      blocks[b].pop_back();
      open.insert(open.end(), saved.begin(), saved.end());
    }
    blocks.push_back({i});
    open.push_back(blocks.size() - 1);
    self(self, i + 1);
    open.pop_back();
    blocks.pop_back();
  };
  if (n == 0) return {SetPartition{0, {}}};
  place(place, 1);
  return out;
}

SetPartition rotate(const SetPartition& p) {
  auto blocks = p.blocks;
  for (auto& b : blocks)
    for (unsigned& x : b) x = x % p.n + 1;
  return SetPartition::from_blocks(p.n, std::move(blocks));
}

CyclicActionInstance rotation_action(const std::vector<SetPartition>& partitions, unsigned n) {
  std::map<SetPartition, std::uint32_t> index;
  for (std::size_t i = 0; i < partitions.size(); ++i) index.emplace(partitions[i], static_cast<std::uint32_t>(i));
  CyclicActionInstance inst;
  inst.label = "rotation on noncrossing partitions of [" + std::to_string(n) + "]";
  inst.declared_order = n;
  for (const auto& p : partitions) {
    auto it = index.find(rotate(p));
    if (it == index.end()) throw InternalError("rotation leaves the partition list");
    inst.generator.push_back(it->second);
  }
  return inst;
}

SetPartition perm_to_partition(const GroupElement& w) {
  if (!w.is_monomial() || std::any_of(w.weights().begin(), w.weights().end(), [](auto x) { return x != 0; }))
    throw DomainError("perm_to_partition: not a permutation");
  const auto n = static_cast<unsigned>(w.size());
  std::vector<std::vector<unsigned>> blocks;
  for (const auto& cy : cycles(w.perm())) {
    if (!std::is_sorted(cy.begin(), cy.end()))
      throw DomainError("perm_to_partition: " + w.to_string() + " has a cycle that is not cyclically increasing");
    std::vector<unsigned> b;
    for (auto x : cy) b.push_back(x + 1u);
    blocks.push_back(std::move(b));
  }
  SetPartition p = SetPartition::from_blocks(n, std::move(blocks));
  if (!p.is_noncrossing()) throw DomainError("perm_to_partition: cycles of " + w.to_string() + " cross");
  return p;
}

namespace {

void check_type(unsigned n, const BlockType& type) {
  if (type.total() != n || type.blocks() == 0)
    throw DomainError("block type " + type.to_string() + " does not partition n = " + std::to_string(n));
}

mpz_class factorial(unsigned m) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), m);
  return f;
}

}  // namespace

mpz_class kreweras_count(unsigned n, const BlockType& type) {
  check_type(n, type);
  const unsigned k = type.blocks();
  mpz_class num = 1, den = 1;
  for (unsigned i = 0; i + 1 < k; ++i) num *= n - i;
  for (const auto& [size, m] : type.multiplicity) den *= factorial(m);
  if (num % den != 0) throw InternalError("kreweras_count: non-integral quotient");
  return num / den;
}

IntPoly q_kreweras_poly(unsigned n, const BlockType& type) {
  check_type(n, type);
  const unsigned k = type.blocks();
  IntPoly num{1}, den{1};
  for (unsigned i = 0; i + 1 < k; ++i) num *= q_int(n - i);
  for (const auto& [size, m] : type.multiplicity) den *= q_factorial(m);
  return exact_quotient(num, den, "q_kreweras_poly");
}

IntPoly q_catalan(unsigned n) { return exact_quotient(q_binomial(2 * n, n), q_int(n + 1), "q_catalan"); }

mpz_class symmetric_type_count(unsigned n, unsigned d, const BlockType& type) {
  check_type(n, type);
  if (d < 2 || n % d != 0) throw DomainError("symmetric_type_count: need d >= 2 dividing n");
  mpz_class count = 0;
  for (const auto& p : enumerate_ncn(n)) {
    if (BlockType::of(p) != type) continue;
    SetPartition r = p;
    for (unsigned i = 0; i < n / d; ++i) r = rotate(r);
    if (r == p) ++count;
  }
  return count;
}

std::optional<mpz_class> type_b_count(unsigned n, unsigned d, const BlockType& type) {
  check_type(n, type);
  if (d < 2 || n % d != 0) throw DomainError("type_b_count: need d >= 2 dividing n");
  unsigned residual = 0;
  for (const auto& [size, m] : type.multiplicity) {
    if (m % d == 0) continue;
    if (m % d != 1 || size % d != 0 || ++residual > 1) return std::nullopt;
  }
  const unsigned np = n / d, kp = type.blocks() / d;
  mpz_class num = 1, den = 1;
  for (unsigned i = 0; i < kp; ++i) num *= np - i;
  for (const auto& [size, m] : type.multiplicity) den *= factorial(m / d);
  if (num % den != 0) throw InternalError("type_b_count: non-integral quotient");
  return num / den;
}

CSPReport refined_csp(unsigned n, const BlockType& type) {
  const IntPoly poly = q_kreweras_poly(n, type);
  std::vector<SetPartition> members;
  for (auto& p : enumerate_ncn(n))
    if (BlockType::of(p) == type) members.push_back(std::move(p));
  auto inst = rotation_action(members, n);
  inst.label = "rotation on noncrossing partitions of [" + std::to_string(n) + "] of type " + type.to_string();
  return csp_check(inst, poly);
}

}  // namespace ncsieve
