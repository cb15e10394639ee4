#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ncsieve/catalog.hpp"
#include "ncsieve/cyclo.hpp"
#include "ncsieve/group_element.hpp"
#include "ncsieve/group_spec.hpp"

namespace ncsieve {

struct GroupOptions {
  /// Largest |W| that may be enumerated element by element.
  std::uint64_t max_group_size = 1'000'000;
};

/// What NC(W) construction needs from a group: arithmetic, fixed-space
/// dimensions on the acting space, reflections and a Coxeter element.
/// Implemented by ReflectionGroup and by the centralizer subgroup acting on
/// an eigenspace (RestrictedGroup), whose elements are parent elements.
class GroupView {
 public:
  virtual ~GroupView() = default;

  virtual std::string name() const = 0;
  virtual unsigned rank() const = 0;
  virtual const std::vector<unsigned>& degrees() const = 0;
  unsigned coxeter_number() const { return degrees().back(); }
  /// Product of the degrees.
  std::uint64_t order() const;

  virtual GroupElement identity() const = 0;
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const { return a * b; }
  GroupElement inverse(const GroupElement& a) const { return a.inverse(); }

  virtual unsigned fixed_space_dim(const GroupElement& w) const = 0;
  /// dim(V^x cap V^y).
  virtual unsigned common_fixed_dim(const GroupElement& x, const GroupElement& y) const = 0;
  virtual const std::vector<GroupElement>& reflections() const = 0;
  virtual const GroupElement& coxeter_element() const = 0;
  /// Every element, in discovery order; SizeError beyond the enumeration bound.
  virtual const std::vector<GroupElement>& elements() const = 0;
  /// The element acting on V (or V').
  virtual CycloMatrix as_matrix(const GroupElement& w) const = 0;
};

/// Outcome of validate_coxeter.
struct CoxeterCheck {
  unsigned order = 0;
  bool order_ok = false;
  bool eigenvalues_ok = false;
  bool regular_ok = false;
  /// j such that the eigenvalues are {zeta_h^(j(1-d_i))} and the zeta_h^j
  /// eigenspace holds a regular vector; zeta_h = exp(2 pi i / h).
  std::optional<unsigned> zeta_exponent;
  std::string diagnostics;

  bool passed() const { return order_ok && eigenvalues_ok && regular_ok; }
};

struct CenterInfo {
  unsigned order = 1;
  GroupElement generator;
};

/// The matrix-route Coxeter test on any group view: order h, eigenvalue
/// multiset via kernel dimensions, and a regular vector in the zeta_h^j eigenspace.
CoxeterCheck validate_coxeter_generic(const GroupView& group, const GroupElement& c);

/// dim of the common fixed space on C^N of monomial elements with equal
/// modulus: the number of balanced components of their combined voltage graph.
unsigned monomial_common_fixed_dim(std::span<const GroupElement* const> elems);
/// Same, for one element: the number of cycles with weight sum 0.
unsigned monomial_fixed_dim(const GroupElement& w);

/// A well-generated irreducible reflection group, immutable once built.
/// Lazily computed members (elements, reflections, Coxeter element) are
/// computed once under std::call_once.
class ReflectionGroup : public GroupView {
 public:
  /// Build and validate (|R| = sum(d_i - 1), center order = gcd(d_i),
  /// duality d_i + d_i^* = h, and a validated Coxeter element).
  static std::shared_ptr<const ReflectionGroup> build(const GroupSpec& spec, const Catalog& catalog = Catalog::shipped(),
                                                      GroupOptions options = {});
  static std::shared_ptr<const ReflectionGroup> build(std::string_view spec_text, GroupOptions options = {});

  ReflectionGroup(const ReflectionGroup&) = delete;
  ReflectionGroup& operator=(const ReflectionGroup&) = delete;

  const GroupSpec& spec() const { return spec_; }
  std::string name() const override { return spec_.label; }
  unsigned rank() const override { return rank_; }
  const std::vector<unsigned>& degrees() const override { return degrees_; }
  /// Descending, d_1^* >= ... >= d_n^* = 0.
  const std::vector<unsigned>& codegrees() const { return codegrees_; }
  /// Conductor of the smallest cyclotomic field holding all matrix entries.
  unsigned conductor() const { return conductor_; }
  const GroupOptions& options() const { return options_; }

  bool is_monomial() const { return monomial_.has_value(); }
  const std::optional<MonomialG>& monomial_params() const { return monomial_; }
  /// Size of the monomial matrices (n, or n+1 for G(1,1,n+1)); the root count for matrix groups.
  std::size_t ambient_size() const { return ambient_; }
  /// Matrix groups: columns are the orbit vectors used as the basis_matrix
  /// basis, in as_matrix coordinates. Empty for monomial groups.
  const CycloMatrix& change_of_basis() const { return basis_; }

  const std::vector<GroupElement>& generators() const { return generators_; }
  GroupElement identity() const override;

  unsigned fixed_space_dim(const GroupElement& w) const override;
  unsigned common_fixed_dim(const GroupElement& x, const GroupElement& y) const override;
  /// Columns span V^w (coordinates of as_matrix).
  CycloMatrix fixed_space_basis(const GroupElement& w) const;

  /// Monomial groups: on V (the sum-zero hyperplane for G(1,1,n)).
  /// Matrix groups: in the coordinates of the catalog generators.
  CycloMatrix as_matrix(const GroupElement& w) const override;
  /// Matrix of w in the basis of independent orbit vectors; same fixed-space
  /// and eigenvalue data as as_matrix, cheaper to form.
  CycloMatrix basis_matrix(const GroupElement& w) const;

  bool enumerable() const { return order() <= options_.max_group_size; }
  const std::vector<GroupElement>& elements() const override;
  std::optional<std::size_t> index_of(const GroupElement& w) const;

  const std::vector<GroupElement>& reflections() const override;
  /// Transposition-like and diagonal reflections, monomial groups only.
  std::vector<GroupElement> reflections_combinatorial() const;
  /// Elements with fixed-space dimension n - 1; requires enumeration.
  std::vector<GroupElement> reflections_by_filter() const;
  /// Closure of the generators under conjugation and powers.
  std::vector<GroupElement> reflections_by_conjugation() const;

  const GroupElement& coxeter_element() const override;
  /// The j of validate_coxeter for coxeter_element().
  unsigned zeta_exponent() const;
  CoxeterCheck validate_coxeter(const GroupElement& c) const;
  /// Exact linear algebra route regardless of representation (for cross-checks).
  CoxeterCheck validate_coxeter_by_matrix(const GroupElement& c) const;

  /// {d : #{i : d | d_i} = #{i : d | d_i^*}}, with 0 divisible by every d.
  std::vector<unsigned> regular_numbers() const;
  /// Order gcd(d_i), generated by c^(h/order); checked against all generators.
  CenterInfo center() const;

 private:
  ReflectionGroup() = default;
  void init_monomial(const MonomialG& g);
  void init_catalog(const CatalogEntry& e);
  void validate_build() const;
  CoxeterCheck validate_coxeter_monomial(const GroupElement& c) const;
  std::optional<GroupElement> find_coxeter() const;
  std::string root_key(const CycloVector& v) const;

  GroupSpec spec_;
  GroupOptions options_;
  unsigned rank_ = 0;
  std::vector<unsigned> degrees_;
  std::vector<unsigned> codegrees_;
  unsigned conductor_ = 1;
  std::optional<MonomialG> monomial_;
  std::size_t ambient_ = 0;
  std::vector<GroupElement> generators_;

  // Matrix groups: the orbit of the generators' root vectors.
  std::vector<CycloVector> roots_;         // catalog coordinates
  std::vector<CycloVector> root_coords_;   // coordinates in basis_
  std::vector<std::size_t> basis_index_;   // rank_ independent orbit vectors
  CycloMatrix basis_;                      // their columns
  CycloMatrix basis_inverse_;
  std::unordered_map<std::string, std::size_t> root_lookup_;

  mutable std::once_flag elements_once_;
  mutable std::vector<GroupElement> elements_;
  mutable std::unordered_map<GroupElement, std::size_t> element_index_;
  mutable std::once_flag reflections_once_;
  mutable std::vector<GroupElement> reflections_;
  mutable std::once_flag coxeter_once_;
  mutable GroupElement coxeter_;
  mutable unsigned zeta_exponent_ = 1;
};

/// l_R(w) for every element, by breadth-first search over products of
/// reflections. Requires an enumerable group.
class LengthTable {
 public:
  explicit LengthTable(const GroupView& group);
  unsigned operator()(const GroupElement& w) const;
  std::size_t size() const { return length_.size(); }

 private:
  std::unordered_map<GroupElement, unsigned> length_;
};

/// One-off absolute length; builds a LengthTable.
unsigned absolute_length(const GroupView& group, const GroupElement& w);

}  // namespace ncsieve
