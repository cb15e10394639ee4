#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ncsieve {

/// A reflection group element in one of two compact, canonical forms.
///
/// Monomial: the n x n matrix whose column i has the single nonzero entry
/// zeta_modulus^weights[i] in row perm[i] (0-based). Composition is
/// (a*b).perm = a.perm o b.perm and (a*b).weights[i] = b.weights[i] +
/// a.weights[b.perm[i]] mod modulus.
///
/// RootPermutation: the permutation an element induces on a finite spanning
/// set of vectors (the root orbit of the generators). Faithful for every
/// group acting on such a set; the owning group converts it to a matrix.
class GroupElement {
 public:
  using Index = std::uint16_t;
  enum class Kind : std::uint8_t { Monomial, RootPermutation };

  GroupElement() = default;

  static GroupElement monomial(std::vector<Index> perm, std::vector<Index> weights, unsigned modulus);
  static GroupElement monomial_identity(std::size_t n, unsigned modulus);
  static GroupElement root_permutation(std::vector<Index> perm);
  static GroupElement root_permutation_identity(std::size_t size);

  Kind kind() const { return kind_; }
  bool is_monomial() const { return kind_ == Kind::Monomial; }
  unsigned modulus() const { return modulus_; }
  const std::vector<Index>& perm() const { return perm_; }
  const std::vector<Index>& weights() const { return weights_; }
  std::size_t size() const { return perm_.size(); }

  bool is_identity() const;
  /// Sum of weights modulo the modulus (the determinant exponent for monomials).
  unsigned weight_sum() const;

  /// Group law; throws DomainError when the operands have different forms.
  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  GroupElement inverse() const;
  GroupElement pow(long long k) const;
  /// Multiplicative order.
  unsigned order() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  /// Lexicographic order on (kind, modulus, perm, weights); used for deterministic output.
  friend bool operator<(const GroupElement& a, const GroupElement& b);

  std::size_t hash() const;
  /// Monomial: "[perm 1-based | weights]"; root permutation: cycle notation on root indices.
  std::string to_string() const;

 private:
  Kind kind_ = Kind::Monomial;
  unsigned modulus_ = 1;
  std::vector<Index> perm_;
  std::vector<Index> weights_;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const { return g.hash(); }
};

/// Cycles of a permutation (0-based), each starting at its least element,
/// listed by increasing least element.
std::vector<std::vector<GroupElement::Index>> cycles(const std::vector<GroupElement::Index>& perm);

}  // namespace ncsieve

template <>
struct std::hash<ncsieve::GroupElement> {
  std::size_t operator()(const ncsieve::GroupElement& g) const { return g.hash(); }
};
