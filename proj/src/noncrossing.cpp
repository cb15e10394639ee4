#include "ncsieve/noncrossing.hpp"

#include <bit>

#include "ncsieve/errors.hpp"

namespace ncsieve {

bool below(const GroupView& group, const GroupElement& x, const GroupElement& z) {
  const GroupElement y = x.inverse() * z;
  const unsigned dx = group.fixed_space_dim(x);
  const unsigned dy = group.fixed_space_dim(y);
  const unsigned dz = group.fixed_space_dim(z);
  // V^x cap V^y is always inside V^z = V^(xy), so equal dimensions mean equality.
  const unsigned dxy = group.common_fixed_dim(x, y);
  return dxy == dz && dx + dy - dxy == group.rank();
}

std::optional<std::size_t> NCPoset::index_of(const GroupElement& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool NCPoset::le(std::size_t i, std::size_t j) const {
  if (!up_.empty()) return (up_[i][j / 64] >> (j % 64)) & 1U;
  if (rank_[i] > rank_[j]) return false;
  return below(*group_, elements_[i], elements_[j]);
}

NCPoset enumerate_nc(std::shared_ptr<const GroupView> group, const NCOptions& options) {
  NCPoset p;
  p.group_ = group;
  const GroupView& g = *group;
  const unsigned n = g.rank();
  p.c_ = g.coxeter_element();
  const auto& refl = g.reflections();

  std::vector<GroupElement> level{g.identity()};
  auto append = [&](const GroupElement& w, unsigned r) {
    p.index_.emplace(w, p.elements_.size());
    p.elements_.push_back(w);
    p.rank_.push_back(r);
  };
  append(level.front(), 0);
  p.rank_sizes_.push_back(1);
  for (unsigned k = 0; k < n; ++k) {
    std::vector<GroupElement> next;
    std::unordered_set<GroupElement> seen;
    for (const auto& w : level)
      for (const auto& r : refl) {
        GroupElement x = options.left_multiplication ? r * w : w * r;
        if (!seen.insert(x).second) continue;
        if (g.fixed_space_dim(x) + k + 1 != n) continue;
        if (!below(g, x, p.c_)) continue;
        append(x, k + 1);
        next.push_back(std::move(x));
        if (p.elements_.size() > options.max_elements)
          throw SizeError("NC(" + g.name() + ") exceeds " + std::to_string(options.max_elements) + " elements");
      }
    p.rank_sizes_.push_back(next.size());
    level = std::move(next);
  }
  if (level.size() != 1 || level.front() != p.c_)
    throw InternalError("NC(" + g.name() + "): top rank is not {c}");

  const std::size_t N = p.elements_.size();
  if (N <= options.order_matrix_limit) {
    const std::size_t words = (N + 63) / 64;
    p.up_.assign(N, std::vector<std::uint64_t>(words, 0));
    for (std::size_t i = 0; i < N; ++i) {
      p.up_[i][i / 64] |= std::uint64_t{1} << (i % 64);
      for (std::size_t j = 0; j < N; ++j)
        if (p.rank_[j] > p.rank_[i] && below(g, p.elements_[i], p.elements_[j]))
          p.up_[i][j / 64] |= std::uint64_t{1} << (j % 64);
    }
  }
  return p;
}

std::unordered_set<GroupElement> nc_by_length(const GroupView& group, const LengthTable& lengths) {
  std::unordered_set<GroupElement> out;
  const GroupElement& c = group.coxeter_element();
  const unsigned n = group.rank();
  for (const auto& w : group.elements())
    if (lengths(w) + lengths(w.inverse() * c) == n) out.insert(w);
  return out;
}

LatticeCheck lattice_check(const NCPoset& poset) {
  LatticeCheck out;
  if (!poset.has_order_matrix()) throw SizeError("lattice_check needs the materialized order relation");
  const std::size_t N = poset.size();
  const std::size_t words = (N + 63) / 64;
  std::vector<std::vector<std::uint64_t>> down(N, std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (poset.le(i, j)) down[j][i / 64] |= std::uint64_t{1} << (i % 64);

  auto subset = [&](const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    for (std::size_t w = 0; w < words; ++w)
      if (a[w] & ~b[w]) return false;
    return true;
  };
  std::vector<std::uint64_t> common(words);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) {
      // Elements are sorted by rank, so the lowest common upper bound by
      // index has minimal rank; it is the join iff it lies below all others.
      std::optional<std::size_t> first;
      for (std::size_t w = 0; w < words; ++w) {
        common[w] = poset.up_set(i)[w] & poset.up_set(j)[w];
        if (!first && common[w]) first = w * 64 + static_cast<std::size_t>(std::countr_zero(common[w]));
      }
      if (!first || !subset(common, poset.up_set(*first))) {
        out.diagnostics = "no join for elements " + std::to_string(i) + " and " + std::to_string(j);
        return out;
      }
      std::optional<std::size_t> last;
      for (std::size_t w = words; w-- > 0;) {
        common[w] = down[i][w] & down[j][w];
        if (!last && common[w]) last = w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(common[w]));
      }
      if (!last || !subset(common, down[*last])) {
        out.diagnostics = "no meet for elements " + std::to_string(i) + " and " + std::to_string(j);
        return out;
      }
    }
  out.passed = true;
  return out;
}

namespace {

std::uint32_t locate(const NCPoset& poset, const GroupElement& w, const char* what) {
  auto idx = poset.index_of(w);
  if (!idx) throw InternalError(std::string(what) + ": image leaves NC(" + poset.group().name() + ")");
  return static_cast<std::uint32_t>(*idx);
}

std::string tuple_key(const std::vector<std::uint32_t>& t) {
  return std::string(reinterpret_cast<const char*>(t.data()), t.size() * sizeof(std::uint32_t));
}

}  // namespace

CyclicActionInstance conjugation_action(const NCPoset& poset) {
  CyclicActionInstance a;
  a.label = "conjugation on NC(" + poset.group().name() + ")";
  a.declared_order = poset.group().coxeter_number();
  const GroupElement& c = poset.coxeter();
  const GroupElement ci = c.inverse();
  for (const auto& w : poset.elements()) a.generator.push_back(locate(poset, c * w * ci, "conjugation"));
  return a;
}

CyclicActionInstance kreweras_action(const NCPoset& poset) {
  CyclicActionInstance a;
  a.label = "Kreweras complement on NC(" + poset.group().name() + ")";
  a.declared_order = 2 * poset.group().coxeter_number();
  const GroupElement& c = poset.coxeter();
  for (const auto& w : poset.elements()) a.generator.push_back(locate(poset, c * w.inverse(), "Kreweras"));
  return a;
}

std::optional<std::uint32_t> NCMTuples::find(const std::vector<std::uint32_t>& t) const {
  auto it = lookup.find(tuple_key(t));
  if (it == lookup.end()) return std::nullopt;
  return it->second;
}

NCMTuples enumerate_nc_m(const NCPoset& poset, unsigned m, std::size_t max_tuples) {
  if (!poset.has_order_matrix()) throw SizeError("enumerate_nc_m needs the materialized order relation");
  NCMTuples out;
  out.m = m;
  const std::size_t N = poset.size();
  const GroupElement& c = poset.coxeter();
  std::vector<std::size_t> chain(m + 1, poset.bottom());  // chain[0] = e
  std::vector<GroupElement> inv(N);
  for (std::size_t i = 0; i < N; ++i) inv[i] = poset.element(i).inverse();

  auto emit = [&] {
    std::vector<std::uint32_t> t(m + 1);
    t[0] = locate(poset, c * inv[chain[m]], "NC^m");
    for (unsigned i = 1; i <= m; ++i) t[i] = locate(poset, inv[chain[i - 1]] * poset.element(chain[i]), "NC^m");
    out.lookup.emplace(tuple_key(t), static_cast<std::uint32_t>(out.tuples.size()));
    out.tuples.push_back(std::move(t));
    if (out.tuples.size() > max_tuples)
      throw SizeError("NC^" + std::to_string(m) + " exceeds " + std::to_string(max_tuples) + " tuples");
  };
  auto extend = [&](auto&& self, unsigned level) -> void {
    if (level > m) {
      emit();
      return;
    }
    const std::size_t prev = chain[level - 1];
    for (std::size_t j = prev; j < N; ++j)
      if (poset.le(prev, j)) {
        chain[level] = j;
        self(self, level + 1);
      }
  };
  extend(extend, 1);
  return out;
}

CyclicActionInstance armstrong_action(const NCPoset& poset, const NCMTuples& tuples) {
  const unsigned m = tuples.m;
  if (m == 0) throw DomainError("armstrong_action needs m >= 1");
  CyclicActionInstance a;
  a.label = "Armstrong rotation on NC^" + std::to_string(m) + "(" + poset.group().name() + ")";
  a.declared_order = m * poset.group().coxeter_number();
  const GroupElement& c = poset.coxeter();
  const GroupElement ci = c.inverse();
  for (const auto& t : tuples.tuples) {
    const GroupElement u = c * poset.element(t[m]) * ci;
    std::vector<std::uint32_t> img(m + 1);
    img[0] = locate(poset, u * poset.element(t[0]) * u.inverse(), "Armstrong");
    img[1] = locate(poset, u, "Armstrong");
    for (unsigned i = 2; i <= m; ++i) img[i] = t[i - 1];
    auto idx = tuples.find(img);
    if (!idx) throw InternalError("Armstrong: image leaves NC^m");
    a.generator.push_back(*idx);
  }
  return a;
}

CyclicActionInstance bessis_action(const NCPoset& poset, const NCMTuples& tuples) {
  const unsigned m = tuples.m;
  CyclicActionInstance a;
  a.label = "Bessis rotation on NC^" + std::to_string(m) + "(" + poset.group().name() + ")";
  a.declared_order = (m + 1) * poset.group().coxeter_number();
  const GroupElement& c = poset.coxeter();
  const GroupElement ci = c.inverse();
  for (const auto& t : tuples.tuples) {
    std::vector<std::uint32_t> img(m + 1);
    img[0] = locate(poset, c * poset.element(t[m]) * ci, "Bessis");
    for (unsigned i = 1; i <= m; ++i) img[i] = t[i - 1];
    auto idx = tuples.find(img);
    if (!idx) throw InternalError("Bessis: image leaves NC^m");
    a.generator.push_back(*idx);
  }
  return a;
}

}  // namespace ncsieve
