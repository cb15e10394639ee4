#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "ncsieve/cyclo.hpp"
#include "ncsieve/int_poly.hpp"

namespace ncsieve {

/// [n]_q = 1 + q + ... + q^(n-1); [0]_q = 0.
IntPoly q_int(unsigned n);
/// prod [n_i]_q, each factor applied as a running window sum.
IntPoly q_int_product(const std::vector<unsigned long>& factors);
/// [n]!_q = [n]_q [n-1]_q ... [1]_q.
IntPoly q_factorial(unsigned n);
/// Gaussian binomial, by exact division of q-factorials.
IntPoly q_binomial(unsigned n, unsigned k);

/// P(zeta_d) as an element of Q(zeta_d): the residue of P modulo Phi_d.
CycloElem eval_at_root(const IntPoly& p, unsigned d);

/// Outcome of evaluating an integer polynomial at a primitive d-th root of
/// unity when an integer is expected.
struct RootEvaluation {
  unsigned order = 1;
  std::optional<mpz_class> value;  // set when the residue is an integer
  CycloElem residue;               // always set; the full residue mod Phi_d

  bool is_integer() const { return value.has_value(); }
};

/// The residue is constant exactly when P agrees at all primitive d-th roots;
/// a non-constant (or non-integral) residue is reported as NotInteger.
RootEvaluation eval_integer_at_root(const IntPoly& p, unsigned d);

/// lim_{q -> zeta_d} [m']_q / [m]_q for m' = m (mod d): m'/m when d | m, else 1.
mpq_class limit_ratio(unsigned long m_prime, unsigned long m, unsigned long d);

enum class CatalanVariant { Standard, Positive };

/// Degree data for a (Fuss) q-Catalan number.
struct QCatalanSpec {
  std::vector<unsigned> degrees;  // sorted ascending
  unsigned h = 0;                 // max degree
  unsigned m = 1;                 // Fuss parameter
  CatalanVariant variant = CatalanVariant::Standard;

  static QCatalanSpec from_degrees(std::vector<unsigned> degrees, unsigned m = 1,
                                   CatalanVariant variant = CatalanVariant::Standard);
  void validate() const;
};

/// prod [m h + d_i]_q / prod [d_i]_q (standard) or with codegrees h - d_i in
/// the numerator (positive). Full products then one exact long division.
IntPoly catalan_poly(const QCatalanSpec& spec);

/// Cat^m(W, zeta_d) by pairing numerator and denominator factors that are
/// congruent mod d, through limit_ratio; independent of catalan_poly.
/// Throws DomainError when no such pairing exists.
mpq_class catalan_limit_product(const QCatalanSpec& spec, unsigned d);

}  // namespace ncsieve
