#include "ncsieve/qanalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ncsieve/errors.hpp"

namespace ncsieve {

IntPoly q_int(unsigned n) { return IntPoly(std::vector<mpz_class>(n, mpz_class(1))); }

IntPoly q_int_product(const std::vector<unsigned long>& factors) {
  std::vector<mpz_class> c{1};
  for (unsigned long n : factors) {
    if (n == 0) return {};
    std::vector<mpz_class> r(c.size() + n - 1);
    mpz_class window = 0;
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (k < c.size()) window += c[k];
      if (k >= n) window -= c[k - n];
      r[k] = window;
    }
    c = std::move(r);
  }
  return IntPoly(std::move(c));
}

IntPoly q_factorial(unsigned n) {
  std::vector<unsigned long> f;
  for (unsigned k = 2; k <= n; ++k) f.push_back(k);
  return q_int_product(f);
}

IntPoly q_binomial(unsigned n, unsigned k) {
  if (k > n) throw DomainError("q_binomial: k must not exceed n");
  return exact_quotient(q_factorial(n), q_factorial(k) * q_factorial(n - k), "q_binomial");
}

CycloElem eval_at_root(const IntPoly& p, unsigned d) {
  if (d == 0) throw DomainError("eval_at_root: root order must be positive");
  return reduce_at_root(p, d);
}

RootEvaluation eval_integer_at_root(const IntPoly& p, unsigned d) {
  RootEvaluation r;
  r.order = d;
  r.residue = eval_at_root(p, d);
  if (auto q = r.residue.as_rational(); q && q->get_den() == 1) r.value = q->get_num();
  return r;
}

mpq_class limit_ratio(unsigned long m_prime, unsigned long m, unsigned long d) {
  if (m == 0 || m_prime == 0 || d == 0) throw DomainError("limit_ratio: arguments must be positive");
  if (m_prime % d != m % d) throw DomainError("limit_ratio: requires m' = m (mod d)");
  if (m % d == 0) {
    mpq_class r(static_cast<long>(m_prime), static_cast<long>(m));
    r.canonicalize();
    return r;
  }
  return 1;
}

QCatalanSpec QCatalanSpec::from_degrees(std::vector<unsigned> degrees, unsigned m, CatalanVariant variant) {
  std::sort(degrees.begin(), degrees.end());
  QCatalanSpec s;
  s.h = degrees.empty() ? 0 : degrees.back();
  s.degrees = std::move(degrees);
  s.m = m;
  s.variant = variant;
  s.validate();
  return s;
}

void QCatalanSpec::validate() const {
  if (degrees.empty()) throw DomainError("QCatalanSpec: empty degree list");
  if (!std::is_sorted(degrees.begin(), degrees.end())) throw DomainError("QCatalanSpec: degrees must be sorted");
  if (degrees.front() == 0) throw DomainError("QCatalanSpec: degrees must be positive");
  if (h != degrees.back()) throw DomainError("QCatalanSpec: h must equal the largest degree");
}

namespace {

std::vector<unsigned long> numerator_factors(const QCatalanSpec& spec) {
  std::vector<unsigned long> f;
  for (unsigned d : spec.degrees) {
    const unsigned long top = spec.variant == CatalanVariant::Standard ? d : spec.h - d;
    f.push_back(static_cast<unsigned long>(spec.m) * spec.h + top);
  }
  return f;
}

}  // namespace

IntPoly catalan_poly(const QCatalanSpec& spec) {
  spec.validate();
  const IntPoly num = q_int_product(numerator_factors(spec));
  const IntPoly den = q_int_product({spec.degrees.begin(), spec.degrees.end()});
  return exact_quotient(num, den, "catalan_poly");
}

mpq_class catalan_limit_product(const QCatalanSpec& spec, unsigned d) {
  spec.validate();
  if (d == 0) throw DomainError("catalan_limit_product: d must be positive");
  // Pair each numerator factor [a]_q with a denominator factor [b]_q in the
  // same residue class mod d; each pair then has limit_ratio(a, b, d).
  std::map<unsigned long, std::vector<unsigned long>> num, den;
  for (unsigned di : spec.degrees) {
    const unsigned long top = static_cast<unsigned long>(spec.m) * spec.h +
                              (spec.variant == CatalanVariant::Standard ? di : spec.h - di);
    num[top % d].push_back(top);
    den[di % d].push_back(di);
  }
  mpq_class r = 1;
  for (auto& [res, tops] : num) {
    auto it = den.find(res);
    if (it == den.end() || it->second.size() != tops.size())
      throw DomainError("catalan_limit_product: factors do not pair up modulo " + std::to_string(d));
    for (std::size_t i = 0; i < tops.size(); ++i) {
      if (tops[i] == 0) throw DomainError("catalan_limit_product: zero numerator factor");
      r *= limit_ratio(tops[i], it->second[i], d);
    }
  }
  return r;
}

}  // namespace ncsieve
