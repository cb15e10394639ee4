#include "ncsieve/reflection_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_set>

#include "ncsieve/errors.hpp"
#include "ncsieve/linalg.hpp"

namespace ncsieve {

using Index = GroupElement::Index;

std::uint64_t GroupView::order() const {
  std::uint64_t o = 1;
  for (unsigned d : degrees()) o *= d;
  return o;
}

// ---------------------------------------------------------------------------
// Monomial fixed spaces

namespace {

// Union-find with potentials: v_i = zeta^pot[i] * v_root(i).
struct VoltageForest {
  std::vector<Index> parent;
  std::vector<unsigned> pot;
  std::vector<bool> unbalanced;
  unsigned modulus;

  VoltageForest(std::size_t n, unsigned m) : parent(n), pot(n, 0), unbalanced(n, false), modulus(m) {
    std::iota(parent.begin(), parent.end(), Index{0});
  }

  Index find(Index i) const {
    while (parent[i] != i) i = parent[i];
    return i;
  }

  // Constraint v_j = zeta^a v_i.
  void link(Index i, Index j, unsigned a) {
    const Index ri = find(i), rj = find(j);
    const unsigned pi = pot_to_root(i), pj = pot_to_root(j);
    if (ri == rj) {
      if ((pi + a) % modulus != pj) unbalanced[ri] = true;
      return;
    }
    // zeta^pj v_rj = zeta^(a + pi) v_ri
    parent[rj] = ri;
    pot[rj] = (a + pi + modulus - pj) % modulus;
    unbalanced[ri] = unbalanced[ri] || unbalanced[rj];
  }

  unsigned pot_to_root(Index i) const {
    unsigned acc = 0;
    while (parent[i] != i) {
      acc = (acc + pot[i]) % modulus;
      i = parent[i];
    }
    return acc;
  }

  unsigned balanced_components() {
    unsigned count = 0;
    for (std::size_t i = 0; i < parent.size(); ++i)
      if (parent[i] == i && !unbalanced[i]) ++count;
    return count;
  }
};

std::string join(const std::vector<unsigned>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::vector<unsigned> units_mod(unsigned h) {
  std::vector<unsigned> out;
  for (unsigned j = 1; j <= h; ++j)
    if (std::gcd(j, h) == 1) out.push_back(j % h);
  return out;
}

}  // namespace

unsigned monomial_fixed_dim(const GroupElement& w) {
  unsigned count = 0;
  for (const auto& cyc : cycles(w.perm())) {
    unsigned s = 0;
    for (Index i : cyc) s = (s + w.weights()[i]) % w.modulus();
    if (s == 0) ++count;
  }
  return count;
}

unsigned monomial_common_fixed_dim(std::span<const GroupElement* const> elems) {
  if (elems.empty()) throw DomainError("monomial_common_fixed_dim: no elements");
  const auto n = elems.front()->size();
  VoltageForest f(n, elems.front()->modulus());
  for (const GroupElement* g : elems) {
    if (!g->is_monomial() || g->size() != n || g->modulus() != f.modulus)
      throw DomainError("monomial_common_fixed_dim: incompatible elements");
    for (std::size_t i = 0; i < n; ++i) f.link(static_cast<Index>(i), g->perm()[i], g->weights()[i]);
  }
  return f.balanced_components();
}

// ---------------------------------------------------------------------------
// Construction

std::shared_ptr<const ReflectionGroup> ReflectionGroup::build(std::string_view spec_text, GroupOptions options) {
  return build(parse_spec(spec_text), Catalog::shipped(), options);
}

std::shared_ptr<const ReflectionGroup> ReflectionGroup::build(const GroupSpec& spec, const Catalog& catalog,
                                                              GroupOptions options) {
  if (options.max_group_size == 0) throw DomainError("enumeration bound must be positive");
  std::shared_ptr<ReflectionGroup> g(new ReflectionGroup());
  g->spec_ = spec;
  g->options_ = options;
  if (const auto* m = std::get_if<MonomialG>(&spec.family)) {
    g->init_monomial(*m);
  } else {
    const CatalogEntry* e = catalog.find(spec.label);
    if (!e) throw DomainError("catalog entry missing for " + spec.label);
    g->init_catalog(*e);
  }
  g->validate_build();
  return g;
}

void ReflectionGroup::init_monomial(const MonomialG& g) {
  monomial_ = g;
  const unsigned d = g.d, n = g.n;
  ambient_ = n;
  conductor_ = d;
  if (d == 1) {
    rank_ = n - 1;
    for (unsigned k = 2; k <= n; ++k) degrees_.push_back(k);
    for (unsigned k = n - 1; k-- > 0;) codegrees_.push_back(k);
  } else {
    rank_ = n;
    for (unsigned k = 1; k < n; ++k) degrees_.push_back(k * d);
    degrees_.push_back(n * d / g.e);
    std::sort(degrees_.begin(), degrees_.end());
    // Codegrees: 0, d, ..., (n-2)d, then (n-1)d for e = 1 or (n-1)d - n for e = d.
    for (unsigned k = 0; k + 1 < n; ++k) codegrees_.push_back(k * d);
    codegrees_.push_back(g.e == 1 ? (n - 1) * d : (n - 1) * d - n);
    std::sort(codegrees_.rbegin(), codegrees_.rend());
  }
  auto transposition = [&](unsigned i, unsigned j, unsigned a) {
    std::vector<Index> perm(n), w(n, 0);
    std::iota(perm.begin(), perm.end(), Index{0});
    std::swap(perm[i], perm[j]);
    w[i] = static_cast<Index>(a % d);
    w[j] = static_cast<Index>((d - a % d) % d);
    return GroupElement::monomial(std::move(perm), std::move(w), d);
  };
  if (d > 1 && g.e == 1) {
    auto t = GroupElement::monomial_identity(n, d);
    std::vector<Index> w(n, 0);
    w[0] = 1;
    generators_.push_back(GroupElement::monomial(t.perm(), w, d));
  } else if (d > 1) {
    generators_.push_back(transposition(0, 1, 1));
  }
  for (unsigned i = 0; i + 1 < n; ++i) generators_.push_back(transposition(i, i + 1, 0));
}

std::string ReflectionGroup::root_key(const CycloVector& v) const {
  std::string key;
  for (Eigen::Index i = 0; i < v.size(); ++i) key += v(i).embed(conductor_).to_string() + ";";
  return key;
}

void ReflectionGroup::init_catalog(const CatalogEntry& e) {
  rank_ = e.rank;
  degrees_ = e.degrees;
  conductor_ = e.conductor;
  if (e.codegrees.empty()) {
    throw DomainError("catalog entry " + e.name + " lacks codegrees");
  }
  codegrees_ = e.codegrees;
  const auto n = static_cast<Eigen::Index>(rank_);
  const CycloMatrix id = identity_matrix<CycloElem>(n);

  // Root vector of each generator: first nonzero column of (g - I), scaled
  // so its first nonzero coordinate is 1.
  std::deque<std::size_t> queue;
  auto add_root = [&](CycloVector v) -> std::size_t {
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = v(i).embed(conductor_);
    const std::string key = root_key(v);
    auto it = root_lookup_.find(key);
    if (it != root_lookup_.end()) return it->second;
    roots_.push_back(v);
    root_lookup_.emplace(key, roots_.size() - 1);
    queue.push_back(roots_.size() - 1);
    if (roots_.size() > 0xFFFF) throw SizeError(e.name + ": root orbit too large");
    return roots_.size() - 1;
  };
  for (const auto& g : e.generators) {
    const CycloMatrix diff = g - id;
    Eigen::Index col = -1;
    for (Eigen::Index c = 0; c < n && col < 0; ++c)
      for (Eigen::Index r = 0; r < n; ++r)
        if (!diff(r, c).is_zero()) {
          col = c;
          break;
        }
    if (col < 0) throw DomainError(e.name + ": a generator is the identity");
    CycloVector v = diff.col(col);
    CycloElem lead;
    for (Eigen::Index r = 0; r < n; ++r)
      if (!v(r).is_zero()) {
        lead = v(r).inverse();
        break;
      }
    for (Eigen::Index r = 0; r < n; ++r) v(r) = v(r) * lead;
    add_root(v);
  }
  while (!queue.empty()) {
    const std::size_t k = queue.front();
    queue.pop_front();
    for (const auto& g : e.generators) add_root(ncsieve::multiply<CycloElem>(g, roots_[k]));
  }
  ambient_ = roots_.size();

  // Greedy basis of independent orbit vectors.
  CycloMatrix acc(n, 0);
  for (std::size_t k = 0; k < roots_.size() && basis_index_.size() < rank_; ++k) {
    CycloMatrix trial(n, acc.cols() + 1);
    trial << acc, roots_[k];
    if (ncsieve::rank<CycloElem>(trial) == trial.cols()) {
      acc = trial;
      basis_index_.push_back(k);
    }
  }
  if (basis_index_.size() != rank_) throw DomainError(e.name + ": root orbit does not span V");
  basis_ = acc;
  basis_inverse_ = invert<CycloElem>(basis_);
  for (const auto& r : roots_) root_coords_.push_back(ncsieve::multiply<CycloElem>(basis_inverse_, r));

  for (const auto& g : e.generators) {
    std::vector<Index> perm(roots_.size());
    for (std::size_t k = 0; k < roots_.size(); ++k) {
      CycloVector img = ncsieve::multiply<CycloElem>(g, roots_[k]);
      for (Eigen::Index i = 0; i < img.size(); ++i) img(i) = img(i).embed(conductor_);
      auto it = root_lookup_.find(root_key(img));
      if (it == root_lookup_.end()) throw InternalError(e.name + ": root orbit not closed");
      perm[k] = static_cast<Index>(it->second);
    }
    generators_.push_back(GroupElement::root_permutation(std::move(perm)));
  }
}

void ReflectionGroup::validate_build() const {
  const unsigned h = coxeter_number();
  if (degrees_.size() != rank_ || codegrees_.size() != rank_) throw InternalError(name() + ": degree data has wrong length");
  for (unsigned i = 0; i < rank_; ++i)
    if (degrees_[i] + codegrees_[i] != h)
      throw InternalError(name() + ": duality d_i + d_i^* = h fails; degrees {" + join(degrees_) + "}, codegrees {" +
                          join(codegrees_) + "}");
  unsigned expected_reflections = 0;
  for (unsigned d : degrees_) expected_reflections += d - 1;
  if (reflections().size() != expected_reflections)
    throw InternalError(name() + ": found " + std::to_string(reflections().size()) + " reflections, expected " +
                        std::to_string(expected_reflections));
  for (const auto& g : generators_)
    if (fixed_space_dim(g) + 1 != rank_) throw InternalError(name() + ": a generator is not a reflection");
  (void)coxeter_element();
  const CenterInfo z = center();
  if (z.generator.order() != z.order) throw InternalError(name() + ": center generator has the wrong order");
}

// ---------------------------------------------------------------------------
// Arithmetic and linear algebra

GroupElement ReflectionGroup::identity() const {
  return is_monomial() ? GroupElement::monomial_identity(ambient_, conductor_)
                       : GroupElement::root_permutation_identity(ambient_);
}

unsigned ReflectionGroup::fixed_space_dim(const GroupElement& w) const {
  if (is_monomial()) return monomial_fixed_dim(w) - (monomial_->d == 1 ? 1 : 0);
  if (w.is_monomial() || w.size() != ambient_) throw DomainError(name() + ": element from another group");
  // dim V^w = (1/o) sum_k tr(w^k), o the order of w.
  const unsigned o = w.order();
  CycloElem sum(0);
  GroupElement p = identity();
  for (unsigned k = 0; k < o; ++k) {
    for (std::size_t j = 0; j < rank_; ++j) sum += root_coords_[p.perm()[basis_index_[j]]](static_cast<Eigen::Index>(j));
    p = p * w;
  }
  const auto avg = (sum * CycloElem(mpq_class(1, o))).as_rational();
  if (!avg || avg->get_den() != 1) throw InternalError(name() + ": character average is not an integer");
  return static_cast<unsigned>(avg->get_num().get_ui());
}

unsigned ReflectionGroup::common_fixed_dim(const GroupElement& x, const GroupElement& y) const {
  if (is_monomial()) {
    const GroupElement* both[] = {&x, &y};
    return monomial_common_fixed_dim(both) - (monomial_->d == 1 ? 1 : 0);
  }
  const auto n = static_cast<Eigen::Index>(rank_);
  const CycloMatrix id = identity_matrix<CycloElem>(n);
  CycloMatrix stacked(2 * n, n);
  stacked << basis_matrix(x) - id, basis_matrix(y) - id;
  return rank_ - static_cast<unsigned>(ncsieve::rank<CycloElem>(stacked));
}

CycloMatrix ReflectionGroup::fixed_space_basis(const GroupElement& w) const {
  const CycloMatrix m = as_matrix(w);
  return kernel_basis<CycloElem>(m - identity_matrix<CycloElem>(m.rows()));
}

CycloMatrix ReflectionGroup::basis_matrix(const GroupElement& w) const {
  if (is_monomial()) return as_matrix(w);
  if (w.is_monomial() || w.size() != ambient_) throw DomainError(name() + ": element from another group");
  const auto n = static_cast<Eigen::Index>(rank_);
  CycloMatrix m(n, n);
  for (Eigen::Index j = 0; j < n; ++j) m.col(j) = root_coords_[w.perm()[basis_index_[static_cast<std::size_t>(j)]]];
  return m;
}

CycloMatrix ReflectionGroup::as_matrix(const GroupElement& w) const {
  if (!is_monomial()) {
    if (w.is_monomial() || w.size() != ambient_) throw DomainError(name() + ": element from another group");
    const auto n = static_cast<Eigen::Index>(rank_);
    CycloMatrix img(n, n);
    for (Eigen::Index j = 0; j < n; ++j) img.col(j) = roots_[w.perm()[basis_index_[static_cast<std::size_t>(j)]]];
    return ncsieve::multiply<CycloElem>(img, basis_inverse_);
  }
  if (!w.is_monomial() || w.size() != ambient_ || w.modulus() != conductor_)
    throw DomainError(name() + ": element from another group");
  const auto N = static_cast<Eigen::Index>(ambient_);
  if (monomial_->d > 1) {
    CycloMatrix m = CycloMatrix::Constant(N, N, CycloElem(0));
    for (Eigen::Index i = 0; i < N; ++i)
      m(w.perm()[static_cast<std::size_t>(i)], i) = CycloElem::root_of_unity(conductor_, w.weights()[static_cast<std::size_t>(i)]);
    return m;
  }
  // Sum-zero hyperplane in the basis e_j - e_{j+1}: coordinate k of x is x_0 + ... + x_k.
  CycloMatrix m(N - 1, N - 1);
  for (Eigen::Index j = 0; j + 1 < N; ++j) {
    std::vector<int> x(static_cast<std::size_t>(N), 0);
    x[w.perm()[static_cast<std::size_t>(j)]] += 1;
    x[w.perm()[static_cast<std::size_t>(j + 1)]] -= 1;
    int partial = 0;
    for (Eigen::Index k = 0; k + 1 < N; ++k) {
      partial += x[static_cast<std::size_t>(k)];
      m(k, j) = CycloElem(partial);
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Enumeration

const std::vector<GroupElement>& ReflectionGroup::elements() const {
  if (!enumerable())
    throw SizeError(name() + " has order " + std::to_string(order()) + ", above the enumeration bound " +
                    std::to_string(options_.max_group_size));
  std::call_once(elements_once_, [&] {
    std::vector<GroupElement> out{identity()};
    std::unordered_map<GroupElement, std::size_t> index{{out.front(), 0}};
    for (std::size_t k = 0; k < out.size(); ++k) {
      for (const auto& g : generators_) {
        GroupElement next = out[k] * g;
        if (index.emplace(next, out.size()).second) {
          out.push_back(std::move(next));
          if (out.size() > order()) throw InternalError(name() + ": generators produce more than prod(d_i) elements");
        }
      }
    }
    if (out.size() != order())
      throw InternalError(name() + ": enumerated " + std::to_string(out.size()) + " elements, expected " +
                          std::to_string(order()));
    elements_ = std::move(out);
    element_index_ = std::move(index);
  });
  return elements_;
}

std::optional<std::size_t> ReflectionGroup::index_of(const GroupElement& w) const {
  (void)elements();
  auto it = element_index_.find(w);
  if (it == element_index_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------
// Reflections

const std::vector<GroupElement>& ReflectionGroup::reflections() const {
  std::call_once(reflections_once_, [&] {
    // The filter needs every element; it stays available as a cross-check.
    reflections_ = is_monomial() ? reflections_combinatorial() : reflections_by_conjugation();
  });
  return reflections_;
}

std::vector<GroupElement> ReflectionGroup::reflections_combinatorial() const {
  if (!is_monomial()) throw DomainError(name() + ": combinatorial reflections need a monomial group");
  const unsigned d = monomial_->d;
  const auto N = static_cast<unsigned>(ambient_);
  std::vector<GroupElement> out;
  for (unsigned i = 0; i < N; ++i)
    for (unsigned j = i + 1; j < N; ++j)
      for (unsigned a = 0; a < d; ++a) {
        std::vector<Index> perm(N), w(N, 0);
        std::iota(perm.begin(), perm.end(), Index{0});
        std::swap(perm[i], perm[j]);
        w[i] = static_cast<Index>(a);
        w[j] = static_cast<Index>((d - a) % d);
        out.push_back(GroupElement::monomial(std::move(perm), std::move(w), d));
      }
  if (monomial_->e == 1 && d > 1)
    for (unsigned i = 0; i < N; ++i)
      for (unsigned a = 1; a < d; ++a) {
        std::vector<Index> w(N, 0);
        w[i] = static_cast<Index>(a);
        out.push_back(GroupElement::monomial(identity().perm(), std::move(w), d));
      }
  return out;
}

std::vector<GroupElement> ReflectionGroup::reflections_by_filter() const {
  std::vector<GroupElement> out;
  for (const auto& w : elements())
    if (!w.is_identity() && fixed_space_dim(w) + 1 == rank_) out.push_back(w);
  return out;
}

std::vector<GroupElement> ReflectionGroup::reflections_by_conjugation() const {
  std::vector<GroupElement> out;
  std::unordered_set<GroupElement> seen;
  auto add = [&](const GroupElement& r) {
    if (seen.insert(r).second) out.push_back(r);
  };
  for (const auto& g : generators_) {
    const unsigned ord = g.order();
    for (unsigned k = 1; k < ord; ++k) add(g.pow(k));
  }
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& g : generators_) add(g * out[k] * g.inverse());
  return out;
}

// ---------------------------------------------------------------------------
// Coxeter elements

const GroupElement& ReflectionGroup::coxeter_element() const {
  std::call_once(coxeter_once_, [&] {
    GroupElement candidate;
    if (is_monomial() && monomial_->e == 1) {
      const unsigned n = static_cast<unsigned>(ambient_);
      std::vector<Index> perm(n), w(n, 0);
      for (unsigned i = 0; i < n; ++i) perm[i] = static_cast<Index>((i + 1) % n);
      if (monomial_->d > 1) w[n - 1] = 1;
      candidate = GroupElement::monomial(std::move(perm), std::move(w), conductor_);
    } else {
      candidate = identity();
      for (const auto& g : generators_) candidate = candidate * g;
    }
    CoxeterCheck check = validate_coxeter(candidate);
    if (!check.passed()) {
      auto found = find_coxeter();
      if (!found) throw InternalError(name() + ": no Coxeter element passes validation (" + check.diagnostics + ")");
      candidate = *found;
      check = validate_coxeter(candidate);
    }
    coxeter_ = candidate;
    zeta_exponent_ = *check.zeta_exponent;
  });
  return coxeter_;
}

unsigned ReflectionGroup::zeta_exponent() const {
  (void)coxeter_element();
  return zeta_exponent_;
}

std::optional<GroupElement> ReflectionGroup::find_coxeter() const {
  if (!enumerable()) return std::nullopt;
  const unsigned h = coxeter_number();
  for (const auto& w : elements())
    if (w.order() == h && validate_coxeter(w).passed()) return w;
  return std::nullopt;
}

CoxeterCheck ReflectionGroup::validate_coxeter(const GroupElement& c) const {
  return is_monomial() ? validate_coxeter_monomial(c) : validate_coxeter_by_matrix(c);
}

CoxeterCheck ReflectionGroup::validate_coxeter_monomial(const GroupElement& c) const {
  CoxeterCheck out;
  const unsigned h = coxeter_number();
  const unsigned d = monomial_->d;
  out.order = c.order();
  out.order_ok = out.order == h;
  if (!out.order_ok) out.diagnostics = "order " + std::to_string(out.order) + " != h = " + std::to_string(h);

  // Eigenvalues as exponents of zeta_L: a cycle of length l and weight sum s
  // contributes the l roots of lambda^l = zeta_d^s.
  const auto cyc = cycles(c.perm());
  unsigned long L = h;
  for (const auto& cy : cyc) L = std::lcm(L, static_cast<unsigned long>(d) * cy.size());
  std::vector<unsigned long> sums;
  std::vector<unsigned long> eig;
  for (const auto& cy : cyc) {
    unsigned long s = 0;
    for (Index i : cy) s = (s + c.weights()[i]) % d;
    sums.push_back(s);
    const unsigned long step = L / (d * cy.size());
    for (unsigned long k = 0; k < cy.size(); ++k) eig.push_back(((s + d * k) * step) % L);
  }
  if (d == 1) eig.erase(std::find(eig.begin(), eig.end(), 0UL));
  std::sort(eig.begin(), eig.end());

  std::optional<unsigned> eigen_j;
  for (unsigned j : units_mod(h)) {
    std::vector<unsigned long> expected;
    for (unsigned di : degrees_) {
      const long long e = (static_cast<long long>(j) * (1 - static_cast<long long>(di))) % static_cast<long long>(h);
      expected.push_back(static_cast<unsigned long>((e + h) % h) * (L / h));
    }
    std::sort(expected.begin(), expected.end());
    if (expected != eig) continue;
    if (!eigen_j) eigen_j = j;

    // Basis of the zeta_L^lam eigenspace: one vector per cycle carrying lam,
    // entries stored as exponents (nullopt = 0).
    const unsigned long lam = static_cast<unsigned long>(j) * (L / h) % L;
    std::vector<std::vector<std::optional<unsigned long>>> basis;
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (lam * cyc[k].size() % L != sums[k] * (L / d) % L) continue;
      std::vector<std::optional<unsigned long>> v(ambient_);
      unsigned long ex = 0;
      Index i = cyc[k].front();
      for (std::size_t step = 0; step < cyc[k].size(); ++step) {
        v[i] = ex;
        ex = (ex + c.weights()[i] * (L / d) + L - lam) % L;
        i = c.perm()[i];
      }
      basis.push_back(std::move(v));
    }
    bool regular = !basis.empty();
    for (const auto& r : reflections()) {
      bool fixes_all = true;
      for (const auto& v : basis) {
        for (std::size_t i = 0; i < ambient_ && fixes_all; ++i) {
          const auto& src = v[i];
          const auto& dst = v[r.perm()[i]];
          if (src.has_value() != dst.has_value()) fixes_all = false;
          else if (src && (*src + r.weights()[i] * (L / d)) % L != *dst) fixes_all = false;
        }
        if (!fixes_all) break;
      }
      if (fixes_all) {
        regular = false;
        break;
      }
    }
    if (regular) {
      out.eigenvalues_ok = out.regular_ok = true;
      out.zeta_exponent = j;
      return out;
    }
  }
  out.eigenvalues_ok = eigen_j.has_value();
  if (!out.eigenvalues_ok)
    out.diagnostics += (out.diagnostics.empty() ? "" : "; ") + std::string("eigenvalues differ from {zeta_h^(j(1-d_i))}");
  else
    out.diagnostics += (out.diagnostics.empty() ? "" : "; ") + std::string("no regular eigenvector");
  return out;
}

CoxeterCheck ReflectionGroup::validate_coxeter_by_matrix(const GroupElement& c) const {
  return validate_coxeter_generic(*this, c);
}

CoxeterCheck validate_coxeter_generic(const GroupView& group, const GroupElement& c) {
  CoxeterCheck out;
  const unsigned h = group.coxeter_number();
  const auto& degrees = group.degrees();
  out.order = c.order();
  out.order_ok = out.order == h;
  if (!out.order_ok) out.diagnostics = "order " + std::to_string(out.order) + " != h = " + std::to_string(h);
  const CycloMatrix raw = group.as_matrix(c);
  unsigned field = h;
  for (Eigen::Index i = 0; i < raw.rows(); ++i)
    for (Eigen::Index k = 0; k < raw.cols(); ++k) field = std::lcm(field, raw(i, k).conductor());
  const CycloMatrix m = embed(raw, field);
  const auto n = m.rows();
  const CycloMatrix id = identity_matrix<CycloElem>(n);
  std::map<unsigned, unsigned> kernel_dim;  // eigenvalue exponent mod h -> dim
  auto dim_at = [&](unsigned e) {
    auto it = kernel_dim.find(e);
    if (it != kernel_dim.end()) return it->second;
    const CycloMatrix shifted = m - CycloElem::root_of_unity(h, e).embed(field) * id;
    const auto dim = static_cast<unsigned>(n - ncsieve::rank<CycloElem>(shifted));
    kernel_dim.emplace(e, dim);
    return dim;
  };
  std::vector<CycloMatrix> reflection_mats;
  std::optional<unsigned> eigen_j;
  for (unsigned j : units_mod(h)) {
    std::map<unsigned, unsigned> expected;
    for (unsigned di : degrees) {
      const long long e = (static_cast<long long>(j) * (1 - static_cast<long long>(di))) % static_cast<long long>(h);
      ++expected[static_cast<unsigned>((e + h) % h)];
    }
    bool match = true;
    for (const auto& [e, mult] : expected)
      if (dim_at(e) != mult) {
        match = false;
        break;
      }
    if (!match) continue;
    if (!eigen_j) eigen_j = j;
    const CycloMatrix eigenspace = kernel_basis<CycloElem>(m - CycloElem::root_of_unity(h, j).embed(field) * id);
    if (reflection_mats.empty())
      for (const auto& r : group.reflections()) reflection_mats.push_back(embed(group.as_matrix(r), field) - id);
    bool regular = eigenspace.cols() > 0;
    for (const auto& rm : reflection_mats) {
      bool fixes_all = true;
      const CycloMatrix img = ncsieve::multiply<CycloElem>(rm, eigenspace);
      for (Eigen::Index i = 0; i < img.rows() && fixes_all; ++i)
        for (Eigen::Index k = 0; k < img.cols(); ++k)
          if (!img(i, k).is_zero()) {
            fixes_all = false;
            break;
          }
      if (fixes_all) {
        regular = false;
        break;
      }
    }
    if (regular) {
      out.eigenvalues_ok = out.regular_ok = true;
      out.zeta_exponent = j;
      return out;
    }
  }
  out.eigenvalues_ok = eigen_j.has_value();
  out.diagnostics += (out.diagnostics.empty() ? "" : "; ") +
                     std::string(out.eigenvalues_ok ? "no regular eigenvector"
                                                    : "eigenvalues differ from {zeta_h^(j(1-d_i))}");
  return out;
}

// ---------------------------------------------------------------------------
// Degree data

std::vector<unsigned> ReflectionGroup::regular_numbers() const {
  std::vector<unsigned> out;
  const unsigned h = coxeter_number();
  for (unsigned d = 1; d <= h; ++d) {
    const auto deg = std::count_if(degrees_.begin(), degrees_.end(), [&](unsigned x) { return x % d == 0; });
    const auto codeg = std::count_if(codegrees_.begin(), codegrees_.end(), [&](unsigned x) { return x % d == 0; });
    if (deg == codeg) out.push_back(d);
  }
  return out;
}

CenterInfo ReflectionGroup::center() const {
  CenterInfo out;
  out.order = 0;
  for (unsigned d : degrees_) out.order = std::gcd(out.order, d);
  out.generator = coxeter_element().pow(coxeter_number() / out.order);
  for (const auto& g : generators_)
    if (g * out.generator != out.generator * g)
      throw InternalError(name() + ": c^(h/" + std::to_string(out.order) + ") is not central");
  return out;
}

// ---------------------------------------------------------------------------
// Absolute length

LengthTable::LengthTable(const GroupView& group) {
  std::size_t total = 0;
  try {
    total = group.elements().size();
  } catch (const SizeError& e) {
    throw SizeError(std::string(e.what()) + "; use the fixed-space order test instead of absolute lengths");
  }
  const auto& refl = group.reflections();
  std::vector<GroupElement> frontier{group.identity()};
  length_.emplace(frontier.front(), 0);
  for (unsigned level = 1; !frontier.empty(); ++level) {
    std::vector<GroupElement> next;
    for (const auto& w : frontier)
      for (const auto& r : refl) {
        GroupElement x = w * r;
        if (length_.emplace(x, level).second) next.push_back(std::move(x));
      }
    frontier = std::move(next);
  }
  if (length_.size() != total) throw InternalError("reflections do not generate " + group.name());
}

unsigned LengthTable::operator()(const GroupElement& w) const {
  auto it = length_.find(w);
  if (it == length_.end()) throw DomainError("absolute_length: element not in the group");
  return it->second;
}

unsigned absolute_length(const GroupView& group, const GroupElement& w) { return LengthTable(group)(w); }

}  // namespace ncsieve
