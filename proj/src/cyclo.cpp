#include "ncsieve/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "ncsieve/errors.hpp"

namespace ncsieve {

unsigned euler_phi(unsigned m) {
  if (m == 0) throw DomainError("euler_phi: argument must be positive");
  unsigned result = m;
  unsigned n = m;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const IntPoly& cyclotomic_poly(unsigned d) {
  if (d == 0) throw DomainError("cyclotomic_poly: index must be positive");
  static std::mutex mu;
  static std::map<unsigned, IntPoly> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
  }
  // q^d - 1 divided by every Phi_k with k a proper divisor of d.
  IntPoly p = IntPoly::monomial(1, d) - IntPoly{1};
  for (unsigned k = 1; k < d; ++k)
    if (d % k == 0) p = exact_quotient(p, cyclotomic_poly(k), "cyclotomic_poly");
  std::lock_guard lock(mu);
  return cache.emplace(d, std::move(p)).first->second;
}

const CyclotomicField& CyclotomicField::get(unsigned m) {
  if (m == 0) throw DomainError("CyclotomicField: conductor must be positive");
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<CyclotomicField>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return *it->second;
  }
  auto f = std::make_unique<CyclotomicField>();
  f->conductor = m;
  const IntPoly& phi = cyclotomic_poly(m);
  f->degree = static_cast<unsigned>(phi.degree());
  const unsigned deg = f->degree;
  const unsigned count = std::max<unsigned>(m, 2 * deg - 1);
  std::vector<mpz_class> cur(deg);
  cur[0] = 1;
  f->powers.reserve(count);
  for (unsigned k = 0; k < count; ++k) {
    f->powers.push_back(cur);
    // multiply by z and fold z^deg = -(phi_0 + ... + phi_{deg-1} z^{deg-1})
    mpz_class top = cur[deg - 1];
    for (unsigned i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (unsigned i = 0; i < deg; ++i) cur[i] -= top * phi.coeff(i);
  }
  std::lock_guard lock(mu);
  return *cache.emplace(m, std::move(f)).first->second;
}

CycloElem::CycloElem(unsigned conductor, std::vector<mpq_class> coeffs) : m_(conductor), coeffs_(std::move(coeffs)) {
  const unsigned deg = CyclotomicField::get(m_).degree;
  if (coeffs_.size() > deg) {
    // accept an unreduced representative and reduce it
    const auto& f = CyclotomicField::get(m_);
    std::vector<mpq_class> r(deg);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k] == 0) continue;
      const auto& p = f.powers[k % m_];
      for (unsigned i = 0; i < deg; ++i)
        if (p[i] != 0) r[i] += coeffs_[k] * p[i];
    }
    coeffs_ = std::move(r);
  }
  coeffs_.resize(deg);
}

CycloElem CycloElem::root_of_unity(unsigned m, long long k) {
  const auto& f = CyclotomicField::get(m);
  long long e = k % static_cast<long long>(m);
  if (e < 0) e += m;
  const auto& p = f.powers[static_cast<std::size_t>(e)];
  std::vector<mpq_class> c(p.begin(), p.end());
  return CycloElem(m, std::move(c));
}

CycloElem CycloElem::embed(unsigned target) const {
  if (target == m_) return *this;
  if (target % m_ != 0) throw DomainError("CycloElem::embed: target conductor must be a multiple");
  const auto& f = CyclotomicField::get(target);
  std::vector<mpq_class> r(f.degree);
  const unsigned step = target / m_;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    const auto& p = f.powers[(k * step) % target];
    for (unsigned i = 0; i < f.degree; ++i)
      if (p[i] != 0) r[i] += coeffs_[k] * p[i];
  }
  CycloElem out;
  out.m_ = target;
  out.coeffs_ = std::move(r);
  return out;
}

bool CycloElem::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycloElem::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

std::optional<mpq_class> CycloElem::as_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return std::nullopt;
  return coeffs_[0];
}

namespace {

unsigned common_conductor(unsigned a, unsigned b) { return std::lcm(a, b); }

}  // namespace

CycloElem& CycloElem::operator+=(const CycloElem& o) {
  if (o.coeffs_.size() == 1) {
    coeffs_[0] += o.coeffs_[0];
    return *this;
  }
  if (coeffs_.size() == 1) {
    mpq_class v = coeffs_[0];
    *this = o;
    coeffs_[0] += v;
    return *this;
  }
  if (m_ != o.m_) {
    const unsigned l = common_conductor(m_, o.m_);
    CycloElem a = embed(l);
    a += o.embed(l);
    return *this = std::move(a);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& o) { return *this += -o; }

CycloElem operator-(CycloElem a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

CycloElem& CycloElem::operator*=(const CycloElem& o) { return *this = *this * o; }

CycloElem operator*(const CycloElem& a, const CycloElem& b) {
  // Q is embedded in every Q(zeta_m) as constants; conductors 1 and 2 are both Q.
  if (b.coeffs_.size() == 1) {
    CycloElem r = a;
    for (auto& c : r.coeffs_) c *= b.coeffs_[0];
    return r;
  }
  if (a.coeffs_.size() == 1) {
    CycloElem r = b;
    for (auto& c : r.coeffs_) c *= a.coeffs_[0];
    return r;
  }
  if (a.m_ != b.m_) {
    const unsigned l = common_conductor(a.m_, b.m_);
    return a.embed(l) * b.embed(l);
  }
  const auto& f = CyclotomicField::get(a.m_);
  const unsigned deg = f.degree;
  std::vector<mpq_class> conv(2 * deg - 1);
  for (unsigned i = 0; i < deg; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (unsigned j = 0; j < deg; ++j)
      if (b.coeffs_[j] != 0) conv[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  CycloElem r;
  r.m_ = a.m_;
  r.coeffs_.assign(conv.begin(), conv.begin() + deg);
  for (unsigned k = deg; k < conv.size(); ++k) {
    if (conv[k] == 0) continue;
    const auto& p = f.powers[k];
    for (unsigned i = 0; i < deg; ++i)
      if (p[i] != 0) r.coeffs_[i] += conv[k] * p[i];
  }
  return r;
}

bool operator==(const CycloElem& a, const CycloElem& b) {
  if (a.m_ == b.m_) return a.coeffs_ == b.coeffs_;
  if (a.coeffs_.size() == 1 || b.coeffs_.size() == 1) {
    auto ra = a.as_rational();
    auto rb = b.as_rational();
    return ra && rb && *ra == *rb;
  }
  const unsigned l = common_conductor(a.m_, b.m_);
  return a.embed(l).coeffs_ == b.embed(l).coeffs_;
}

CycloElem CycloElem::inverse() const {
  if (is_zero()) throw DomainError("CycloElem::inverse: zero has no inverse");
  const std::size_t deg = coeffs_.size();
  if (deg == 1) return CycloElem(m_, {1 / coeffs_[0]});
  // Solve (multiplication-by-this) * y = 1 over Q.
  std::vector<std::vector<mpq_class>> a(deg, std::vector<mpq_class>(deg + 1));
  CycloElem col = *this;
  const CycloElem z = root_of_unity(m_, 1);
  for (std::size_t j = 0; j < deg; ++j) {
    for (std::size_t i = 0; i < deg; ++i) a[i][j] = col.coeffs_[i];
    col = col * z;
  }
  a[0][deg] = 1;
  for (std::size_t c = 0; c < deg; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;  // nonsingular: a field element is invertible
    std::swap(a[p], a[c]);
    const mpq_class inv = 1 / a[c][c];
    for (std::size_t k = c; k <= deg; ++k) a[c][k] *= inv;
    for (std::size_t r = 0; r < deg; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const mpq_class t = a[r][c];
      for (std::size_t k = c; k <= deg; ++k) a[r][k] -= t * a[c][k];
    }
  }
  std::vector<mpq_class> y(deg);
  for (std::size_t i = 0; i < deg; ++i) y[i] = a[i][deg];
  return CycloElem(m_, std::move(y));
}

std::string CycloElem::to_string() const {
  std::ostringstream os;
  if (coeffs_.size() > 1) os << "[" << m_ << "] ";
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const mpq_class& c = coeffs_[i];
    if (c == 0) continue;
    mpq_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) {
      if (mag != 1) os << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

CycloElem reduce_at_root(const IntPoly& p, unsigned d) {
  IntPoly folded = p.fold(d);
  IntPoly rem = divmod(folded, cyclotomic_poly(d)).second;
  const unsigned deg = CyclotomicField::get(d).degree;
  std::vector<mpq_class> c(deg);
  for (unsigned i = 0; i < deg; ++i) c[i] = rem.coeff(i);
  return CycloElem(d, std::move(c));
}

CycloMatrix embed(const CycloMatrix& m, unsigned target) {
  CycloMatrix r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).embed(target);
  return r;
}

}  // namespace ncsieve
