#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ncsieve/reflection_group.hpp"
#include "ncsieve/sieving.hpp"

namespace ncsieve {

/// x <= z in absolute order by the fixed-space test: with y = x^-1 z,
/// dim(V^x cap V^y) = dim V^z and dim(V^x + V^y) = n.
bool below(const GroupView& group, const GroupElement& x, const GroupElement& z);

struct NCOptions {
  /// Materialize the order relation as a bit matrix up to this many elements.
  std::size_t order_matrix_limit = 30000;
  /// Abort enumeration beyond this many elements (SizeError).
  std::size_t max_elements = 200000;
  /// Build levels as r * w instead of w * r.
  bool left_multiplication = false;
};

/// The interval [e, c] of the absolute order, indexed by rank then discovery.
class NCPoset {
 public:
  const GroupView& group() const { return *group_; }
  const GroupElement& coxeter() const { return c_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const GroupElement& element(std::size_t i) const { return elements_[i]; }
  unsigned rank_of(std::size_t i) const { return rank_[i]; }
  /// Narayana vector: number of elements of each rank 0..n.
  const std::vector<std::size_t>& rank_sizes() const { return rank_sizes_; }
  std::optional<std::size_t> index_of(const GroupElement& w) const;
  std::size_t bottom() const { return 0; }
  std::size_t top() const { return elements_.size() - 1; }

  /// elements(i) <= elements(j); bit matrix lookup or on-demand `below`.
  bool le(std::size_t i, std::size_t j) const;
  bool has_order_matrix() const { return !up_.empty(); }
  /// Words of the up-set bitset of i (requires the order matrix).
  const std::vector<std::uint64_t>& up_set(std::size_t i) const { return up_[i]; }

 private:
  friend NCPoset enumerate_nc(std::shared_ptr<const GroupView> group, const NCOptions& options);
  std::shared_ptr<const GroupView> group_;
  GroupElement c_;
  std::vector<GroupElement> elements_;
  std::vector<unsigned> rank_;
  std::vector<std::size_t> rank_sizes_;
  std::unordered_map<GroupElement, std::size_t> index_;
  std::vector<std::vector<std::uint64_t>> up_;
};

/// Level-synchronous search from e: L_(k+1) = {w r : w in L_k, r in R,
/// dim V^(wr) = n-k-1, wr <= c}. Ends with L_n = {c}.
NCPoset enumerate_nc(std::shared_ptr<const GroupView> group, const NCOptions& options = {});

/// NC(W) by the length definition l(w) + l(w^-1 c) = n, over all of W.
std::unordered_set<GroupElement> nc_by_length(const GroupView& group, const LengthTable& lengths);

struct LatticeCheck {
  bool passed = false;
  std::string diagnostics;
};

/// Every pair has a least upper bound and a greatest lower bound.
LatticeCheck lattice_check(const NCPoset& poset);

/// w -> c w c^-1, declared order h.
CyclicActionInstance conjugation_action(const NCPoset& poset);
/// w -> c w^-1, declared order 2h.
CyclicActionInstance kreweras_action(const NCPoset& poset);

/// NC^m(W): factorizations c = w_0 w_1 ... w_m with additive lengths, each
/// w_i stored as its index in the poset.
struct NCMTuples {
  unsigned m = 1;
  std::vector<std::vector<std::uint32_t>> tuples;
  std::unordered_map<std::string, std::uint32_t> lookup;

  std::size_t size() const { return tuples.size(); }
  std::optional<std::uint32_t> find(const std::vector<std::uint32_t>& t) const;
};

/// From multichains e <= u_1 <= ... <= u_m <= c: w_i = u_(i-1)^-1 u_i and
/// w_0 = c u_m^-1.
NCMTuples enumerate_nc_m(const NCPoset& poset, unsigned m, std::size_t max_tuples = 2'000'000);

/// (w_0, ..., w_m) -> (v, c w_m c^-1, w_1, ..., w_(m-1)) with
/// v = (c w_m c^-1) w_0 (c w_m c^-1)^-1; declared order m h.
CyclicActionInstance armstrong_action(const NCPoset& poset, const NCMTuples& tuples);
/// (w_0, ..., w_m) -> (c w_m c^-1, w_0, ..., w_(m-1)); declared order (m+1) h.
CyclicActionInstance bessis_action(const NCPoset& poset, const NCMTuples& tuples);

}  // namespace ncsieve
