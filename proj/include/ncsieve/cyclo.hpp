#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncsieve/int_poly.hpp"

namespace ncsieve {

/// Euler's totient.
unsigned euler_phi(unsigned m);

/// The d-th cyclotomic polynomial, by recursive exact division of q^d - 1.
/// Results are memoized; safe to call concurrently.
const IntPoly& cyclotomic_poly(unsigned d);

/// Arithmetic context for Q(zeta_m) = Q[z]/(Phi_m(z)).
struct CyclotomicField {
  unsigned conductor = 1;
  unsigned degree = 1;  // phi(conductor)
  /// zeta^k reduced modulo Phi_m, for 0 <= k < max(m, 2*degree - 1).
  std::vector<std::vector<mpz_class>> powers;

  /// Shared, immutable context for conductor m.
  static const CyclotomicField& get(unsigned m);
};

/// Exact element of the cyclotomic field Q(zeta_m), stored as the unique
/// reduced residue sum_k c_k zeta_m^k, 0 <= k < phi(m).
///
/// Binary operations on elements with different conductors first embed
/// both operands into Q(zeta_lcm); the result keeps the lcm conductor.
class CycloElem {
 public:
  CycloElem() : coeffs_(1) {}
  CycloElem(int v) : coeffs_{mpq_class(v)} {}  // NOLINT: implicit so Eigen can build 0 and 1
  CycloElem(const mpq_class& v) : coeffs_{v} {}  // NOLINT
  CycloElem(unsigned conductor, std::vector<mpq_class> coeffs);

  /// zeta_m^k, with k taken modulo m.
  static CycloElem root_of_unity(unsigned m, long long k);

  unsigned conductor() const { return m_; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  /// Image under the embedding Q(zeta_m) -> Q(zeta_target), zeta_m -> zeta_target^(target/m).
  CycloElem embed(unsigned target) const;

  bool is_zero() const;
  bool is_one() const;
  /// The rational value when the element lies in Q.
  std::optional<mpq_class> as_rational() const;

  CycloElem inverse() const;

  CycloElem& operator+=(const CycloElem& o);
  CycloElem& operator-=(const CycloElem& o);
  CycloElem& operator*=(const CycloElem& o);
  CycloElem& operator/=(const CycloElem& o) { return *this *= o.inverse(); }

  friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
  friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
  friend CycloElem operator*(const CycloElem& a, const CycloElem& b);
  friend CycloElem operator/(CycloElem a, const CycloElem& b) { return a /= b; }
  friend CycloElem operator-(CycloElem a);
  friend bool operator==(const CycloElem& a, const CycloElem& b);
  friend bool operator!=(const CycloElem& a, const CycloElem& b) { return !(a == b); }

  /// e.g. "[5] 1 - z^2 + 1/2*z^3"; conductor-1 and -2 elements print as plain rationals.
  std::string to_string() const;

 private:
  unsigned m_ = 1;
  std::vector<mpq_class> coeffs_;
};

inline bool is_zero(const CycloElem& x) { return x.is_zero(); }
inline CycloElem inverse(const CycloElem& x) { return x.inverse(); }

/// Residue of an integer polynomial modulo Phi_d, read as P(zeta_d).
CycloElem reduce_at_root(const IntPoly& p, unsigned d);

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using CycloMatrix = Matrix<CycloElem>;
using CycloVector = Vector<CycloElem>;

/// Embed every entry of a matrix into Q(zeta_target).
CycloMatrix embed(const CycloMatrix& m, unsigned target);

}  // namespace ncsieve

namespace Eigen {
template <>
struct NumTraits<ncsieve::CycloElem> : GenericNumTraits<ncsieve::CycloElem> {
  using Real = ncsieve::CycloElem;
  using NonInteger = ncsieve::CycloElem;
  using Nested = ncsieve::CycloElem;
  using Literal = ncsieve::CycloElem;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 64
  };
};
}  // namespace Eigen
