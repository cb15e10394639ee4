#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncsieve/cyclo.hpp"
#include "ncsieve/sieving.hpp"

namespace ncsieve {

using IntMatrix = Matrix<long long>;
/// Coordinates in the simple-root basis.
using RootVector = std::vector<int>;

/// A crystallographic root system of type A_n, B_n, C_n, D_n, E6-8, F4 or G2.
struct RootSystem {
  char type = 'A';
  unsigned rank = 0;
  std::string name;
  /// cartan(i, j) = 2 (a_i, a_j) / (a_i, a_i), so s_i(a_j) = a_j - cartan(i, j) a_i.
  IntMatrix cartan;
  /// Sorted by height, then lexicographically; the simple roots come first.
  std::vector<RootVector> positive_roots;
  /// s_i acting on root coordinates.
  std::vector<IntMatrix> simple_reflections;
  std::vector<unsigned> degrees;
  unsigned coxeter_number = 0;

  std::optional<std::size_t> index_of(const RootVector& r) const;
};

/// Accepts A<n>, B<n>, C<n>, D<n>, E6, E7, E8, F4, G2, and I2(3|4|6) as
/// A2, B2, G2. Other types, including H3, H4 and I2(m) for other m, are
/// rejected with DomainError (non-crystallographic) or ParseError.
RootSystem build_root_system(std::string_view type);

/// beta - alpha has all coordinates >= 0.
bool root_le(const RootVector& alpha, const RootVector& beta);

/// Sorted indices into RootSystem::positive_roots.
using Antichain = std::vector<std::uint32_t>;

bool is_antichain(const RootSystem& rs, const Antichain& a);

/// Every antichain of the root poset, in lexicographic order of index sets
/// (so the empty antichain is first). SizeError beyond max_count.
std::vector<Antichain> enumerate_antichains(const RootSystem& rs, std::size_t max_count = 2'000'000);

enum class AboveConvention {
  Weak,    // beta lies above alpha when alpha <= beta, including beta = alpha
  Strict,  // only alpha < beta
};

/// Maximal elements of the roots lying above no element of A.
Antichain panyushev_step(const RootSystem& rs, const Antichain& a, AboveConvention above = AboveConvention::Weak);

/// The Panyushev map on the given antichain list, with declared order 2h.
/// Throws InternalError if an image is missing from the list.
CyclicActionInstance panyushev_action(const RootSystem& rs, const std::vector<Antichain>& antichains,
                                      AboveConvention above = AboveConvention::Weak);

/// All elements of the Weyl group in the root-basis representation, by
/// closure under the simple reflections (identity first). SizeError beyond
/// max_size.
std::vector<IntMatrix> weyl_group(const RootSystem& rs, std::size_t max_size = 1'000'000);

/// Diagonal of the Smith normal form of an integer matrix: min(rows, cols)
/// nonnegative entries, each dividing the next, zeros last. Throws
/// InternalError on 64-bit overflow.
std::vector<long long> smith_invariants(IntMatrix m);

/// dim over Q of the kernel of w - I.
unsigned fixed_space_dim(const IntMatrix& w);

/// Number of x in (Z/p)^n with (w - I) x = 0 mod p, as the product of
/// gcd(p, s_i) over the Smith invariants of w - I (a zero invariant
/// contributes p).
std::uint64_t torus_fixed_count(const IntMatrix& w, std::uint64_t p);

/// Outcome of comparing torus_fixed_count(w, p) with p^(dim V^w) over a
/// whole Weyl group.
struct TorusCharacterCheck {
  std::uint64_t p = 1;
  std::size_t elements = 0;
  std::size_t mismatches = 0;
  /// Index into the element list of the first mismatch.
  std::optional<std::size_t> first_mismatch;
  bool holds() const { return mismatches == 0; }
};

TorusCharacterCheck torus_character_check(const std::vector<IntMatrix>& group, std::uint64_t p);

/// |W \ Q/pQ| by Burnside over the given group elements.
std::uint64_t torus_orbit_count(const std::vector<IntMatrix>& group, std::uint64_t p);

/// p^e with an overflow check.
std::uint64_t checked_pow(std::uint64_t p, unsigned e);

}  // namespace ncsieve
