#include "ncsieve/group_element.hpp"

#include <numeric>
#include <sstream>

#include "ncsieve/errors.hpp"

namespace ncsieve {

GroupElement GroupElement::monomial(std::vector<Index> perm, std::vector<Index> weights, unsigned modulus) {
  if (modulus == 0 || modulus > 0xFFFF) throw DomainError("monomial element: modulus out of range");
  if (perm.size() != weights.size()) throw DomainError("monomial element: perm and weights differ in length");
  std::vector<bool> seen(perm.size());
  for (Index p : perm) {
    if (p >= perm.size() || seen[p]) throw DomainError("monomial element: perm is not a bijection");
    seen[p] = true;
  }
  GroupElement g;
  g.kind_ = Kind::Monomial;
  g.modulus_ = modulus;
  g.perm_ = std::move(perm);
  g.weights_ = std::move(weights);
  for (Index& w : g.weights_) w = static_cast<Index>(w % modulus);
  return g;
}

GroupElement GroupElement::monomial_identity(std::size_t n, unsigned modulus) {
  std::vector<Index> perm(n);
  std::iota(perm.begin(), perm.end(), Index{0});
  return monomial(std::move(perm), std::vector<Index>(n, 0), modulus);
}

GroupElement GroupElement::root_permutation(std::vector<Index> perm) {
  std::vector<bool> seen(perm.size());
  for (Index p : perm) {
    if (p >= perm.size() || seen[p]) throw DomainError("root permutation: not a bijection");
    seen[p] = true;
  }
  GroupElement g;
  g.kind_ = Kind::RootPermutation;
  g.modulus_ = 1;
  g.perm_ = std::move(perm);
  return g;
}

GroupElement GroupElement::root_permutation_identity(std::size_t size) {
  std::vector<Index> perm(size);
  std::iota(perm.begin(), perm.end(), Index{0});
  return root_permutation(std::move(perm));
}

bool GroupElement::is_identity() const {
  for (std::size_t i = 0; i < perm_.size(); ++i)
    if (perm_[i] != i) return false;
  for (Index w : weights_)
    if (w != 0) return false;
  return true;
}

unsigned GroupElement::weight_sum() const {
  unsigned s = 0;
  for (Index w : weights_) s = (s + w) % modulus_;
  return s;
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (a.kind_ != b.kind_ || a.modulus_ != b.modulus_ || a.perm_.size() != b.perm_.size())
    throw DomainError("multiply: elements belong to different groups");
  GroupElement r;
  r.kind_ = a.kind_;
  r.modulus_ = a.modulus_;
  const std::size_t n = a.perm_.size();
  r.perm_.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.perm_[i] = a.perm_[b.perm_[i]];
  if (a.kind_ == GroupElement::Kind::Monomial) {
    r.weights_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      r.weights_[i] = static_cast<GroupElement::Index>((b.weights_[i] + a.weights_[b.perm_[i]]) % a.modulus_);
  }
  return r;
}

GroupElement GroupElement::inverse() const {
  GroupElement r = *this;
  const std::size_t n = perm_.size();
  for (std::size_t i = 0; i < n; ++i) r.perm_[perm_[i]] = static_cast<Index>(i);
  if (kind_ == Kind::Monomial)
    for (std::size_t i = 0; i < n; ++i)
      r.weights_[perm_[i]] = static_cast<Index>((modulus_ - weights_[i]) % modulus_);
  return r;
}

GroupElement GroupElement::pow(long long k) const {
  GroupElement base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  GroupElement result = *this;
  std::iota(result.perm_.begin(), result.perm_.end(), Index{0});
  std::fill(result.weights_.begin(), result.weights_.end(), Index{0});
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

unsigned GroupElement::order() const {
  // lcm over cycles of (cycle length * order of the cycle's weight sum).
  unsigned long long ord = 1;
  for (const auto& cyc : cycles(perm_)) {
    unsigned long long len = cyc.size();
    if (kind_ == Kind::Monomial) {
      unsigned s = 0;
      for (Index i : cyc) s = (s + weights_[i]) % modulus_;
      len *= modulus_ / std::gcd(modulus_, s);
    }
    ord = std::lcm(ord, len);
  }
  return static_cast<unsigned>(ord);
}

bool operator<(const GroupElement& a, const GroupElement& b) {
  if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
  if (a.modulus_ != b.modulus_) return a.modulus_ < b.modulus_;
  if (a.perm_ != b.perm_) return a.perm_ < b.perm_;
  return a.weights_ < b.weights_;
}

std::size_t GroupElement::hash() const {
  std::size_t h = 1469598103934665603ULL ^ (static_cast<std::size_t>(kind_) << 20) ^ modulus_;
  for (Index p : perm_) h = (h ^ p) * 1099511628211ULL;
  for (Index w : weights_) h = (h ^ (w + 0x9e37u)) * 1099511628211ULL;
  return h;
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  if (kind_ == Kind::Monomial) {
    os << '[';
    for (std::size_t i = 0; i < perm_.size(); ++i) os << (i ? " " : "") << perm_[i] + 1;
    os << " |";
    for (Index w : weights_) os << ' ' << w;
    os << ']';
    return os.str();
  }
  bool any = false;
  for (const auto& cyc : cycles(perm_)) {
    if (cyc.size() < 2) continue;
    any = true;
    os << '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) os << (i ? " " : "") << cyc[i];
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

std::vector<std::vector<GroupElement::Index>> cycles(const std::vector<GroupElement::Index>& perm) {
  std::vector<std::vector<GroupElement::Index>> out;
  std::vector<bool> seen(perm.size());
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    std::vector<GroupElement::Index> cyc;
    for (std::size_t i = s; !seen[i]; i = perm[i]) {
      seen[i] = true;
      cyc.push_back(static_cast<GroupElement::Index>(i));
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

}  // namespace ncsieve
