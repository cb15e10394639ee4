#include "ncsieve/root_system.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <regex>
#include <unordered_set>

#include "ncsieve/errors.hpp"
#include "ncsieve/linalg.hpp"

namespace ncsieve {

namespace {

// Symmetric Gram matrix (entries are twice the inner products for the
// shortest roots of norm 2) of the simple roots of a Dynkin type.
IntMatrix gram_matrix(char type, unsigned n) {
  IntMatrix g = IntMatrix::Zero(n, n);
  auto link = [&](unsigned i, unsigned j, long long v) { g(i, j) = g(j, i) = v; };
  for (unsigned i = 0; i < n; ++i) g(i, i) = 2;
  switch (type) {
    case 'A':
      for (unsigned i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'B':  // short root last
      for (unsigned i = 0; i + 1 < n; ++i) {
        g(i, i) = 4;
        link(i, i + 1, -2);
      }
      break;
    case 'C':  // long root last
      for (unsigned i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      g(n - 1, n - 1) = 4;
      link(n - 2, n - 1, -2);
      break;
    case 'D':
      for (unsigned i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case 'E':  // Bourbaki labels: chain 1-3-4-...-n, with 2 attached to 4
      link(0, 2, -1);
      link(1, 3, -1);
      for (unsigned i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'F':
      g(0, 0) = g(1, 1) = 4;
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case 'G':
      g(1, 1) = 6;
      link(0, 1, -3);
      break;
    default:
      throw InternalError(std::string("gram_matrix: unknown type ") + type);
  }
  return g;
}

std::vector<unsigned> weyl_degrees(char type, unsigned n) {
  std::vector<unsigned> d;
  switch (type) {
    case 'A':
      for (unsigned i = 2; i <= n + 1; ++i) d.push_back(i);
      break;
    case 'B':
    case 'C':
      for (unsigned i = 1; i <= n; ++i) d.push_back(2 * i);
      break;
    case 'D':
      for (unsigned i = 1; i < n; ++i) d.push_back(2 * i);
      d.push_back(n);
      break;
    case 'E':
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case 'F':
      d = {2, 6, 8, 12};
      break;
    case 'G':
      d = {2, 6};
      break;
  }
  std::sort(d.begin(), d.end());
  return d;
}

unsigned parse_rank(const std::string& s, std::string_view text) {
  unsigned v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw ParseError("root system '" + std::string(text) + "': bad rank");
  return v;
}

std::pair<char, unsigned> parse_type(std::string_view text) {
  static const std::regex letter_re(R"(^([A-HI])(\d+)$)");
  static const std::regex dihedral_re(R"(^I2\((\d+)\)$)");
  std::string s;
  for (char c : text)
    if (c != ' ') s.push_back(c);
  std::smatch m;
  if (std::regex_match(s, m, dihedral_re)) {
    switch (parse_rank(m[1], text)) {
      case 3:
        return {'A', 2};
      case 4:
        return {'B', 2};
      case 6:
        return {'G', 2};
      default:
        throw DomainError("root system '" + s + "': I2(m) is crystallographic only for m = 3, 4, 6");
    }
  }
  if (!std::regex_match(s, m, letter_re)) throw ParseError("root system '" + std::string(text) + "' is not a Dynkin type");
  const char t = m[1].str()[0];
  const unsigned n = parse_rank(m[2], text);
  auto bad = [&] { return DomainError("root system '" + s + "' is not a crystallographic irreducible type"); };
  switch (t) {
    case 'A':
      if (n < 1) throw bad();
      break;
    case 'B':
    case 'C':
      if (n < 2) throw bad();
      break;
    case 'D':
      if (n < 3) throw bad();
      break;
    case 'E':
      if (n < 6 || n > 8) throw bad();
      break;
    case 'F':
      if (n != 4) throw bad();
      break;
    case 'G':
      if (n != 2) throw bad();
      break;
    default:  // H3, H4 and anything else
      throw bad();
  }
  return {t, n};
}

bool root_less(const RootVector& a, const RootVector& b) {
  const int ha = std::accumulate(a.begin(), a.end(), 0), hb = std::accumulate(b.begin(), b.end(), 0);
  if (ha != hb) return ha < hb;
  return a > b;  // simple root e_0 before e_1
}

std::string matrix_key(const IntMatrix& m) {
  return std::string(reinterpret_cast<const char*>(m.data()), static_cast<std::size_t>(m.size()) * sizeof(long long));
}

long long checked_mul(long long a, long long b) {
  long long r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw InternalError("smith_invariants: 64-bit overflow");
  return r;
}

long long checked_sub(long long a, long long b) {
  long long r = 0;
  if (__builtin_sub_overflow(a, b, &r)) throw InternalError("smith_invariants: 64-bit overflow");
  return r;
}

}  // namespace

std::optional<std::size_t> RootSystem::index_of(const RootVector& r) const {
  auto it = std::lower_bound(positive_roots.begin(), positive_roots.end(), r, root_less);
  if (it == positive_roots.end() || *it != r) return std::nullopt;
  return static_cast<std::size_t>(it - positive_roots.begin());
}

RootSystem build_root_system(std::string_view text) {
  const auto [type, n] = parse_type(text);
  RootSystem rs;
  rs.type = type;
  rs.rank = n;
  rs.name = std::string(1, type) + std::to_string(n);
  const IntMatrix g = gram_matrix(type, n);
  rs.cartan = IntMatrix(n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      if ((2 * g(i, j)) % g(i, i) != 0) throw InternalError(rs.name + ": non-integral Cartan entry");
      rs.cartan(i, j) = 2 * g(i, j) / g(i, i);
    }
  for (unsigned i = 0; i < n; ++i) {
    IntMatrix s = IntMatrix::Identity(n, n);
    for (unsigned j = 0; j < n; ++j) s(i, j) -= rs.cartan(i, j);
    rs.simple_reflections.push_back(std::move(s));
  }
  rs.degrees = weyl_degrees(type, n);
  rs.coxeter_number = rs.degrees.back();

  // Closure of the simple roots under the simple reflections, keeping the
  // positive images (s_i permutes the positive roots other than a_i).
  std::vector<RootVector> roots;
  std::unordered_set<std::string> seen;
  auto key = [](const RootVector& r) { return std::string(reinterpret_cast<const char*>(r.data()), r.size() * sizeof(int)); };
  for (unsigned i = 0; i < n; ++i) {
    RootVector e(n, 0);
    e[i] = 1;
    seen.insert(key(e));
    roots.push_back(std::move(e));
  }
  for (std::size_t k = 0; k < roots.size(); ++k)
    for (unsigned i = 0; i < n; ++i) {
      long long pairing = 0;
      for (unsigned j = 0; j < n; ++j) pairing += rs.cartan(i, j) * roots[k][j];
      RootVector img = roots[k];
      img[i] -= static_cast<int>(pairing);
      if (std::any_of(img.begin(), img.end(), [](int x) { return x < 0; })) continue;
      if (seen.insert(key(img)).second) roots.push_back(std::move(img));
    }
  std::sort(roots.begin(), roots.end(), root_less);
  rs.positive_roots = std::move(roots);
  if (rs.positive_roots.size() * 2 != static_cast<std::size_t>(n) * rs.coxeter_number)
    throw InternalError(rs.name + ": " + std::to_string(rs.positive_roots.size()) + " positive roots, expected n h / 2");
  return rs;
}

bool root_le(const RootVector& alpha, const RootVector& beta) {
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (beta[i] < alpha[i]) return false;
  return true;
}

bool is_antichain(const RootSystem& rs, const Antichain& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (i != j && root_le(rs.positive_roots[a[i]], rs.positive_roots[a[j]])) return false;
  return true;
}

std::vector<Antichain> enumerate_antichains(const RootSystem& rs, std::size_t max_count) {
  const std::size_t N = rs.positive_roots.size();
  std::vector<std::vector<char>> comparable(N, std::vector<char>(N, 0));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      comparable[i][j] = root_le(rs.positive_roots[i], rs.positive_roots[j]) || root_le(rs.positive_roots[j], rs.positive_roots[i]);

  std::vector<Antichain> out;
  Antichain current;
  auto extend = [&](auto&& self, std::size_t start) -> void {
    out.push_back(current);
    if (out.size() > max_count)
      throw SizeError("antichains of " + rs.name + " exceed " + std::to_string(max_count));
    for (std::size_t i = start; i < N; ++i) {
      if (std::any_of(current.begin(), current.end(), [&](std::uint32_t a) { return comparable[a][i]; })) continue;
      current.push_back(static_cast<std::uint32_t>(i));
      self(self, i + 1);
      current.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

Antichain panyushev_step(const RootSystem& rs, const Antichain& a, AboveConvention above) {
  const auto& roots = rs.positive_roots;
  std::vector<std::uint32_t> candidates;
  for (std::uint32_t b = 0; b < roots.size(); ++b) {
    const bool covered = std::any_of(a.begin(), a.end(), [&](std::uint32_t x) {
      if (above == AboveConvention::Strict && x == b) return false;
      return root_le(roots[x], roots[b]);
    });
    if (!covered) candidates.push_back(b);
  }
  Antichain out;
  for (std::uint32_t b : candidates) {
    const bool dominated = std::any_of(candidates.begin(), candidates.end(),
                                       [&](std::uint32_t c) { return c != b && root_le(roots[b], roots[c]); });
    if (!dominated) out.push_back(b);
  }
  return out;
}

CyclicActionInstance panyushev_action(const RootSystem& rs, const std::vector<Antichain>& antichains,
                                      AboveConvention above) {
  std::map<Antichain, std::uint32_t> index;
  for (std::size_t i = 0; i < antichains.size(); ++i) index.emplace(antichains[i], static_cast<std::uint32_t>(i));
  CyclicActionInstance inst;
  inst.label = std::string("Panyushev map on antichains of ") + rs.name + (above == AboveConvention::Strict ? " (strict)" : "");
  inst.declared_order = 2 * rs.coxeter_number;
  for (const auto& a : antichains) {
    auto it = index.find(panyushev_step(rs, a, above));
    if (it == index.end()) throw InternalError("Panyushev image is not in the antichain list");
    inst.generator.push_back(it->second);
  }
  return inst;
}

std::vector<IntMatrix> weyl_group(const RootSystem& rs, std::size_t max_size) {
  std::vector<IntMatrix> out{IntMatrix::Identity(rs.rank, rs.rank)};
  std::unordered_set<std::string> seen{matrix_key(out.front())};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& s : rs.simple_reflections) {
      IntMatrix w = out[k] * s;
      if (!seen.insert(matrix_key(w)).second) continue;
      out.push_back(std::move(w));
      if (out.size() > max_size)
        throw SizeError("Weyl group of " + rs.name + " exceeds " + std::to_string(max_size) + " elements");
    }
  return out;
}

std::vector<long long> smith_invariants(IntMatrix a) {
  const Eigen::Index R = a.rows(), C = a.cols(), K = std::min(R, C);
  for (Eigen::Index t = 0; t < K; ++t) {
    for (;;) {
      Eigen::Index pr = -1, pc = -1;
      for (Eigen::Index i = t; i < R; ++i)
        for (Eigen::Index j = t; j < C; ++j)
          if (a(i, j) != 0 && (pr < 0 || std::llabs(a(i, j)) < std::llabs(a(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr < 0) break;
      a.row(pr).swap(a.row(t));
      a.col(pc).swap(a.col(t));
      bool clean = true;
      for (Eigen::Index i = t + 1; i < R; ++i) {
        const long long q = a(i, t) / a(t, t);
        for (Eigen::Index j = t; j < C; ++j) a(i, j) = checked_sub(a(i, j), checked_mul(q, a(t, j)));
        clean = clean && a(i, t) == 0;
      }
      for (Eigen::Index j = t + 1; j < C; ++j) {
        const long long q = a(t, j) / a(t, t);
        for (Eigen::Index i = t; i < R; ++i) a(i, j) = checked_sub(a(i, j), checked_mul(q, a(i, t)));
        clean = clean && a(t, j) == 0;
      }
      if (clean) break;
    }
  }
  std::vector<long long> d(static_cast<std::size_t>(K));
  for (Eigen::Index t = 0; t < K; ++t) d[static_cast<std::size_t>(t)] = std::llabs(a(t, t));
  // diag(x, y) is equivalent to diag(gcd, lcm); this sorts zeros last.
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const long long g = std::gcd(d[i], d[j]);
      if (g == 0) continue;
      const long long l = checked_mul(d[i] / g, d[j]);
      d[i] = g;
      d[j] = l;
    }
  return d;
}

unsigned fixed_space_dim(const IntMatrix& w) {
  CycloMatrix m(w.rows(), w.cols());
  for (Eigen::Index i = 0; i < w.rows(); ++i)
    for (Eigen::Index j = 0; j < w.cols(); ++j) m(i, j) = CycloElem(mpq_class(mpz_class(static_cast<long>(w(i, j) - (i == j)))));
  return static_cast<unsigned>(w.cols() - ncsieve::rank<CycloElem>(std::move(m)));
}

std::uint64_t checked_pow(std::uint64_t p, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i)
    if (__builtin_mul_overflow(r, p, &r)) throw SizeError("p^" + std::to_string(e) + " overflows 64 bits");
  return r;
}

std::uint64_t torus_fixed_count(const IntMatrix& w, std::uint64_t p) {
  if (p == 0) throw DomainError("torus_fixed_count: p must be positive");
  const IntMatrix a = w - IntMatrix::Identity(w.rows(), w.cols());
  std::uint64_t count = 1;
  for (long long s : smith_invariants(a)) {
    const std::uint64_t f = s == 0 ? p : std::gcd(p, static_cast<std::uint64_t>(s));
    if (__builtin_mul_overflow(count, f, &count)) throw SizeError("torus_fixed_count overflows 64 bits");
  }
  return count;
}

TorusCharacterCheck torus_character_check(const std::vector<IntMatrix>& group, std::uint64_t p) {
  TorusCharacterCheck out;
  out.p = p;
  out.elements = group.size();
  for (std::size_t i = 0; i < group.size(); ++i)
    if (torus_fixed_count(group[i], p) != checked_pow(p, fixed_space_dim(group[i]))) {
      ++out.mismatches;
      if (!out.first_mismatch) out.first_mismatch = i;
    }
  return out;
}

std::uint64_t torus_orbit_count(const std::vector<IntMatrix>& group, std::uint64_t p) {
  if (group.empty()) throw DomainError("torus_orbit_count: empty group");
  std::uint64_t sum = 0;
  for (const auto& w : group)
    if (__builtin_add_overflow(sum, torus_fixed_count(w, p), &sum)) throw SizeError("Burnside sum overflows 64 bits");
  if (sum % group.size() != 0) throw InternalError("Burnside sum is not divisible by |W|");
  return sum / group.size();
}

}  // namespace ncsieve
