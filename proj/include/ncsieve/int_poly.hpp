#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace ncsieve {

/// Polynomial in q with arbitrary-precision integer coefficients.
///
/// Coefficients are stored in ascending degree order and kept canonical:
/// the last stored coefficient is nonzero, and the zero polynomial has no
/// coefficients at all.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const mpz_class& c);
  static IntPoly monomial(const mpz_class& c, std::size_t degree);

  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  mpz_class coeff(std::size_t i) const;

  mpz_class eval(const mpz_class& q) const;

  /// True when every coefficient is >= 0.
  bool nonnegative() const;
  /// True when c_i = c_{deg-i} for all i. The zero polynomial is palindromic.
  bool is_palindromic() const;

  /// Reduce exponents modulo n, i.e. the residue of P modulo q^n - 1.
  IntPoly fold(std::size_t n) const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(IntPoly a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

 private:
  void normalize();
  std::vector<mpz_class> coeffs_;
};

/// Quotient and remainder of a by b over Z[q]. Every step of the long
/// division must divide exactly by the leading coefficient of b (always the
/// case for monic b); otherwise DomainError.
std::pair<IntPoly, IntPoly> divmod(const IntPoly& a, const IntPoly& b);

/// a / b, throwing InternalError when the remainder is nonzero.
IntPoly exact_quotient(const IntPoly& a, const IntPoly& b, const char* what);

}  // namespace ncsieve
