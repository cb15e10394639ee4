#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ncsieve/reflection_group.hpp"

namespace ncsieve {

/// The centralizer W' = Cent_W(c^(h/d)) acting on V', the eigenspace of
/// c^(h/d) for the eigenvalue it takes on the regular eigenvector of c.
/// Elements are the parent's elements; fixed spaces are taken inside V'.
///
/// Three internal forms of the restriction map: the identity when
/// c^(h/d) is central (then V' = V); for monomial parents a monomial form
/// in the basis of cycle-supported eigenvectors; otherwise exact matrices
/// X_w with w B' = B' X_w for a basis B' of V'.
class RestrictedGroup : public GroupView {
 public:
  enum class Form { Identity, Monomial, Matrix };

  /// Requires d | h and an enumerable parent. Asserts |W'| = prod of the
  /// parent degrees divisible by d, dim V' = their number, that W' preserves
  /// V', and that the restriction map is injective.
  static std::shared_ptr<const RestrictedGroup> build(std::shared_ptr<const ReflectionGroup> parent, unsigned d);

  RestrictedGroup(const RestrictedGroup&) = delete;
  RestrictedGroup& operator=(const RestrictedGroup&) = delete;

  const ReflectionGroup& parent() const { return *parent_; }
  unsigned divisor() const { return d_; }
  Form form() const { return form_; }
  /// c^(h/d).
  const GroupElement& central_power() const { return power_; }
  /// Columns span V' in the parent's as_matrix coordinates.
  CycloMatrix eigenspace_basis() const;

  std::string name() const override;
  unsigned rank() const override { return dim_; }
  const std::vector<unsigned>& degrees() const override { return degrees_; }
  GroupElement identity() const override { return parent_->identity(); }
  unsigned fixed_space_dim(const GroupElement& w) const override;
  unsigned common_fixed_dim(const GroupElement& x, const GroupElement& y) const override;
  /// Elements of W' whose fixed space in V' has codimension one.
  const std::vector<GroupElement>& reflections() const override;
  /// The parent Coxeter element; it lies in W' and acts on V' as c|V'.
  const GroupElement& coxeter_element() const override { return parent_->coxeter_element(); }
  const std::vector<GroupElement>& elements() const override { return elements_; }
  /// Matrix of w|V' in the chosen basis of V'.
  CycloMatrix as_matrix(const GroupElement& w) const override;
  /// Monomial form of w|V' (monomial parents with a non-central c^(h/d)).
  GroupElement monomial_form(const GroupElement& w) const;

  bool contains(const GroupElement& w) const { return members_.count(w) > 0; }
  /// Whether R' generates W' (incremental closure).
  bool reflections_generate() const;

 private:
  RestrictedGroup() = default;
  void init_monomial();
  void init_matrix();

  std::shared_ptr<const ReflectionGroup> parent_;
  unsigned d_ = 1;
  Form form_ = Form::Identity;
  GroupElement power_;
  unsigned dim_ = 0;
  std::vector<unsigned> degrees_;
  std::vector<GroupElement> elements_;
  std::unordered_set<GroupElement> members_;

  // Monomial form: eigenvector entries as exponents of zeta_M (nullopt = 0).
  unsigned modulus_ = 1;
  std::vector<std::vector<std::optional<unsigned>>> eigvecs_;
  std::vector<int> cycle_of_;  // coordinate -> basis vector index, or -1

  // Matrix form, in the parent's basis_matrix coordinates.
  unsigned field_ = 1;
  CycloMatrix basis_;
  CycloMatrix left_inverse_;
  std::unordered_map<GroupElement, CycloMatrix> restricted_;

  mutable std::once_flag reflections_once_;
  mutable std::vector<GroupElement> reflections_;
};

}  // namespace ncsieve
