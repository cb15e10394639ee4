#include "ncsieve/restricted_group.hpp"

#include <numeric>

#include "ncsieve/errors.hpp"
#include "ncsieve/linalg.hpp"

namespace ncsieve {

using Index = GroupElement::Index;

std::shared_ptr<const RestrictedGroup> RestrictedGroup::build(std::shared_ptr<const ReflectionGroup> parent,
                                                              unsigned d) {
  const unsigned h = parent->coxeter_number();
  if (d == 0 || h % d != 0) throw DomainError("restrict_centralizer: d = " + std::to_string(d) + " does not divide h = " + std::to_string(h));
  std::shared_ptr<RestrictedGroup> g(new RestrictedGroup());
  g->parent_ = parent;
  g->d_ = d;
  g->power_ = parent->coxeter_element().pow(h / d);
  std::uint64_t expected_order = 1;
  for (unsigned deg : parent->degrees())
    if (deg % d == 0) {
      g->degrees_.push_back(deg);
      expected_order *= deg;
    }

  for (const auto& w : parent->elements())
    if (w * g->power_ == g->power_ * w) g->elements_.push_back(w);
  if (g->elements_.size() != expected_order)
    throw InternalError(g->name() + ": centralizer has " + std::to_string(g->elements_.size()) +
                        " elements, expected " + std::to_string(expected_order));
  g->members_.insert(g->elements_.begin(), g->elements_.end());

  if (g->elements_.size() == parent->elements().size()) {
    g->form_ = Form::Identity;
    g->dim_ = parent->rank();
  } else if (parent->is_monomial()) {
    g->form_ = Form::Monomial;
    g->init_monomial();
  } else {
    g->form_ = Form::Matrix;
    g->init_matrix();
  }
  if (g->dim_ != g->degrees_.size())
    throw InternalError(g->name() + ": dim V' = " + std::to_string(g->dim_) + ", expected " +
                        std::to_string(g->degrees_.size()));
  return g;
}

std::string RestrictedGroup::name() const { return parent_->name() + "'[d=" + std::to_string(d_) + "]"; }

void RestrictedGroup::init_monomial() {
  const unsigned h = parent_->coxeter_number();
  const unsigned dp = parent_->conductor();
  const auto cyc = cycles(power_.perm());
  unsigned long M = std::lcm(dp, h);
  for (const auto& cy : cyc) M = std::lcm(M, static_cast<unsigned long>(dp) * cy.size());
  if (M > 0xFFFF) throw SizeError(name() + ": eigenvector conductor too large");
  modulus_ = static_cast<unsigned>(M);
  const unsigned long lam = (static_cast<unsigned long>(parent_->zeta_exponent()) * (h / d_) % h) * (M / h);
  const unsigned long step = M / dp;
  cycle_of_.assign(power_.size(), -1);
  for (const auto& cy : cyc) {
    unsigned long s = 0;
    for (Index i : cy) s = (s + power_.weights()[i]) % dp;
    if (lam * cy.size() % M != s * step % M) continue;
    std::vector<std::optional<unsigned>> v(power_.size());
    unsigned long ex = 0;
    Index i = cy.front();
    for (std::size_t k = 0; k < cy.size(); ++k) {
      v[i] = static_cast<unsigned>(ex);
      cycle_of_[i] = static_cast<int>(eigvecs_.size());
      ex = (ex + power_.weights()[i] * step + M - lam) % M;
      i = power_.perm()[i];
    }
    eigvecs_.push_back(std::move(v));
  }
  dim_ = static_cast<unsigned>(eigvecs_.size());

  // Every element of W' must map each basis eigenvector onto a multiple of another.
  std::unordered_set<GroupElement> images;
  for (const auto& w : elements_) {
    const GroupElement f = monomial_form(w);
    for (std::size_t t = 0; t < eigvecs_.size(); ++t) {
      const auto target = static_cast<std::size_t>(f.perm()[t]);
      for (std::size_t i = 0; i < power_.size(); ++i) {
        if (!eigvecs_[t][i]) continue;
        const Index j = w.perm()[i];
        const auto& dst = eigvecs_[target][j];
        if (!dst || (w.weights()[i] * step + *eigvecs_[t][i]) % M != (f.weights()[t] + *dst) % M)
          throw InternalError(name() + ": W' does not preserve V'");
      }
    }
    images.insert(f);
  }
  if (images.size() != elements_.size()) throw InternalError(name() + ": restriction to V' is not injective");
}

GroupElement RestrictedGroup::monomial_form(const GroupElement& w) const {
  if (form_ != Form::Monomial) throw DomainError(name() + ": no monomial form");
  const unsigned long M = modulus_;
  const unsigned long step = M / parent_->conductor();
  std::vector<Index> perm(dim_), weights(dim_);
  for (std::size_t t = 0; t < eigvecs_.size(); ++t) {
    std::size_t i0 = 0;
    while (!eigvecs_[t][i0]) ++i0;
    const Index j = w.perm()[i0];
    const int target = cycle_of_[j];
    if (target < 0) throw DomainError(name() + ": element does not preserve V'");
    perm[t] = static_cast<Index>(target);
    weights[t] = static_cast<Index>((w.weights()[i0] * step + *eigvecs_[t][i0] + M - *eigvecs_[static_cast<std::size_t>(target)][j]) % M);
  }
  return GroupElement::monomial(std::move(perm), std::move(weights), modulus_);
}

void RestrictedGroup::init_matrix() {
  const unsigned h = parent_->coxeter_number();
  field_ = std::lcm(parent_->conductor(), h);
  const unsigned lam = parent_->zeta_exponent() * (h / d_) % h;
  const CycloMatrix mx = embed(parent_->basis_matrix(power_), field_);
  const CycloMatrix id = identity_matrix<CycloElem>(mx.rows());
  basis_ = kernel_basis<CycloElem>(mx - CycloElem::root_of_unity(h, lam).embed(field_) * id);
  dim_ = static_cast<unsigned>(basis_.cols());
  // Left inverse through an invertible square block of rows.
  const auto ech = row_reduce<CycloElem>(basis_.transpose());
  if (ech.pivots.size() != dim_) throw InternalError(name() + ": eigenspace basis is degenerate");
  CycloMatrix select = CycloMatrix::Constant(dim_, basis_.rows(), CycloElem(0));
  for (unsigned t = 0; t < dim_; ++t) select(t, ech.pivots[t]) = CycloElem(1);
  left_inverse_ = ncsieve::multiply<CycloElem>(invert<CycloElem>(ncsieve::multiply<CycloElem>(select, basis_)), select);

  std::unordered_set<std::string> images;
  for (const auto& w : elements_) {
    const CycloMatrix mw = embed(parent_->basis_matrix(w), field_);
    const CycloMatrix image = ncsieve::multiply<CycloElem>(mw, basis_);
    CycloMatrix x = ncsieve::multiply<CycloElem>(left_inverse_, image);
    if (!equal<CycloElem>(ncsieve::multiply<CycloElem>(basis_, x), image))
      throw InternalError(name() + ": W' does not preserve V'");
    std::string key;
    for (Eigen::Index i = 0; i < x.rows(); ++i)
      for (Eigen::Index k = 0; k < x.cols(); ++k) key += x(i, k).embed(field_).to_string() + ";";
    images.insert(std::move(key));
    restricted_.emplace(w, std::move(x));
  }
  if (images.size() != elements_.size()) throw InternalError(name() + ": restriction to V' is not injective");
}

CycloMatrix RestrictedGroup::eigenspace_basis() const {
  switch (form_) {
    case Form::Identity:
      return identity_matrix<CycloElem>(dim_);
    case Form::Matrix:
      return ncsieve::multiply<CycloElem>(parent_->change_of_basis(), basis_);
    case Form::Monomial:
      break;
  }
  const auto N = static_cast<Eigen::Index>(power_.size());
  CycloMatrix amb = CycloMatrix::Constant(N, dim_, CycloElem(0));
  for (std::size_t t = 0; t < eigvecs_.size(); ++t)
    for (Eigen::Index i = 0; i < N; ++i)
      if (const auto& e = eigvecs_[t][static_cast<std::size_t>(i)]) amb(i, static_cast<Eigen::Index>(t)) = CycloElem::root_of_unity(modulus_, *e);
  if (parent_->monomial_params()->d > 1) return amb;
  // Type A: coordinates in the basis e_j - e_{j+1} are partial sums.
  CycloMatrix out(N - 1, dim_);
  for (Eigen::Index t = 0; t < dim_; ++t) {
    CycloElem partial(0);
    for (Eigen::Index k = 0; k + 1 < N; ++k) {
      partial += amb(k, t);
      out(k, t) = partial;
    }
  }
  return out;
}

unsigned RestrictedGroup::fixed_space_dim(const GroupElement& w) const {
  switch (form_) {
    case Form::Identity:
      return parent_->fixed_space_dim(w);
    case Form::Monomial:
      return monomial_fixed_dim(monomial_form(w));
    case Form::Matrix:
      break;
  }
  const CycloMatrix x = as_matrix(w);
  return dim_ - static_cast<unsigned>(ncsieve::rank<CycloElem>(x - identity_matrix<CycloElem>(dim_)));
}

unsigned RestrictedGroup::common_fixed_dim(const GroupElement& x, const GroupElement& y) const {
  switch (form_) {
    case Form::Identity:
      return parent_->common_fixed_dim(x, y);
    case Form::Monomial: {
      const GroupElement fx = monomial_form(x), fy = monomial_form(y);
      const GroupElement* both[] = {&fx, &fy};
      return monomial_common_fixed_dim(both);
    }
    case Form::Matrix:
      break;
  }
  const CycloMatrix id = identity_matrix<CycloElem>(dim_);
  CycloMatrix stacked(2 * dim_, dim_);
  stacked << as_matrix(x) - id, as_matrix(y) - id;
  return dim_ - static_cast<unsigned>(ncsieve::rank<CycloElem>(stacked));
}

CycloMatrix RestrictedGroup::as_matrix(const GroupElement& w) const {
  switch (form_) {
    case Form::Identity:
      return parent_->as_matrix(w);
    case Form::Monomial: {
      const GroupElement f = monomial_form(w);
      CycloMatrix m = CycloMatrix::Constant(dim_, dim_, CycloElem(0));
      for (unsigned t = 0; t < dim_; ++t) m(f.perm()[t], t) = CycloElem::root_of_unity(modulus_, f.weights()[t]);
      return m;
    }
    case Form::Matrix:
      break;
  }
  auto it = restricted_.find(w);
  if (it == restricted_.end()) throw DomainError(name() + ": element is not in the centralizer");
  return it->second;
}

const std::vector<GroupElement>& RestrictedGroup::reflections() const {
  std::call_once(reflections_once_, [&] {
    if (form_ == Form::Identity) {
      reflections_ = parent_->reflections();
      return;
    }
    for (const auto& w : elements_)
      if (!w.is_identity() && fixed_space_dim(w) + 1 == dim_) reflections_.push_back(w);
  });
  return reflections_;
}

bool RestrictedGroup::reflections_generate() const {
  std::vector<GroupElement> reached{identity()};
  std::unordered_set<GroupElement> seen{identity()};
  std::vector<GroupElement> gens;
  for (const auto& r : reflections()) {
    if (seen.count(r)) continue;
    gens.push_back(r);
    for (std::size_t k = 0; k < reached.size(); ++k)
      for (const auto& g : gens) {
        GroupElement next = reached[k] * g;
        if (seen.insert(next).second) reached.push_back(std::move(next));
      }
    if (reached.size() == elements_.size()) break;
  }
  return reached.size() == elements_.size();
}

}  // namespace ncsieve
