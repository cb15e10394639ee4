#include "ncsieve/int_poly.hpp"

#include <sstream>

#include "ncsieve/errors.hpp"

namespace ncsieve {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly(std::vector<mpz_class>{c}); }

IntPoly IntPoly::monomial(const mpz_class& c, std::size_t degree) {
  std::vector<mpz_class> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpz_class(0); }

mpz_class IntPoly::eval(const mpz_class& q) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

bool IntPoly::nonnegative() const {
  for (const auto& c : coeffs_)
    if (c < 0) return false;
  return true;
}

bool IntPoly::is_palindromic() const {
  for (std::size_t i = 0, j = coeffs_.size(); i < j; ++i) {
    --j;
    if (coeffs_[i] != coeffs_[j]) return false;
  }
  return true;
}

IntPoly IntPoly::fold(std::size_t n) const {
  if (n == 0) throw DomainError("IntPoly::fold: modulus must be positive");
  if (coeffs_.size() <= n) return *this;
  std::vector<mpz_class> r(n);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i % n] += coeffs_[i];
  return IntPoly(std::move(r));
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(r));
}

IntPoly operator-(IntPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) {
      if (mag != 1) os << "*";
      os << "q";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<IntPoly, IntPoly> divmod(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DomainError("divmod: division by the zero polynomial");
  std::vector<mpz_class> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  if (rem.size() < bc.size()) return {IntPoly{}, a};
  std::vector<mpz_class> quot(rem.size() - db);
  const mpz_class& lead = bc.back();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    if (!mpz_divisible_p(rem[k].get_mpz_t(), lead.get_mpz_t()))
      throw DomainError("divmod: quotient is not in Z[q]");
    mpz_class t = rem[k] / lead;
    quot[k - db] = t;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= t * bc[j];
  }
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

IntPoly exact_quotient(const IntPoly& a, const IntPoly& b, const char* what) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InternalError(std::string(what) + ": nonzero remainder " + r.to_string());
  return q;
}

}  // namespace ncsieve
