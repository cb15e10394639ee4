#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncsieve/group_element.hpp"
#include "ncsieve/int_poly.hpp"
#include "ncsieve/sieving.hpp"

namespace ncsieve {

/// A set partition of {1, ..., n}, kept canonical: blocks sorted by their
/// minimum, elements ascending.
struct SetPartition {
  unsigned n = 0;
  std::vector<std::vector<unsigned>> blocks;

  /// Sorts into canonical form; throws DomainError unless the blocks are
  /// disjoint, nonempty and cover {1..n}.
  static SetPartition from_blocks(unsigned n, std::vector<std::vector<unsigned>> blocks);

  /// No a < b < c < d with a, c in one block and b, d in another.
  bool is_noncrossing() const;
  std::string to_string() const;  // e.g. "{1,2}|{3}|{4}"

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;
};

/// Block type: size -> multiplicity (sizes with multiplicity 0 omitted).
struct BlockType {
  std::map<unsigned, unsigned> multiplicity;

  static BlockType of(const SetPartition& p);
  /// "1:a,2:b,..."; ParseError on malformed text.
  static BlockType parse(std::string_view text);

  /// k, the number of blocks.
  unsigned blocks() const;
  /// sum of i * m_i.
  unsigned total() const;
  std::string to_string() const;

  friend bool operator==(const BlockType&, const BlockType&) = default;
  friend auto operator<=>(const BlockType&, const BlockType&) = default;
};

/// Every block type with total n (the partitions of the integer n).
std::vector<BlockType> all_block_types(unsigned n);

/// All noncrossing partitions of [n] (n <= max_n, else SizeError), in
/// depth-first order of a stack construction.
std::vector<SetPartition> enumerate_ncn(unsigned n, unsigned max_n = 14);

/// Relabel i -> i + 1 mod n.
SetPartition rotate(const SetPartition& p);

/// Rotation on the given list, declared order n. InternalError if the list
/// is not closed under rotation.
CyclicActionInstance rotation_action(const std::vector<SetPartition>& partitions, unsigned n);

/// Cycles of a permutation of {0..n-1} as blocks of [n]. The element must
/// lie below the long cycle 1 -> 2 -> ... -> n: each cycle increases
/// cyclically from its minimum and the blocks do not cross; DomainError
/// otherwise.
SetPartition perm_to_partition(const GroupElement& w);

/// n(n-1)...(n-k+2) / prod m_i! (k-1 descending factors).
mpz_class kreweras_count(unsigned n, const BlockType& type);

/// [n]_q [n-1]_q ... [n-k+2]_q / prod [m_i]!_q, dividing exactly.
IntPoly q_kreweras_poly(unsigned n, const BlockType& type);

/// C_n(q) = [2n choose n]_q / [n+1]_q.
IntPoly q_catalan(unsigned n);

/// Noncrossing partitions of [n] of the given type invariant under rotation
/// by n/d, by brute force over enumerate_ncn.
mpz_class symmetric_type_count(unsigned n, unsigned d, const BlockType& type);

/// n'(n'-1)...(n'-k'+1) / prod m'_i! with n' = n/d, k' = floor(k/d),
/// m'_i = floor(m_i/d). Empty unless all m_i are divisible by d except at
/// most one m_j = 1 mod d with d | j; in that case the symmetric count is 0.
std::optional<mpz_class> type_b_count(unsigned n, unsigned d, const BlockType& type);

/// Rotation CSP on the noncrossing partitions of [n] of the given type,
/// against q_kreweras_poly.
CSPReport refined_csp(unsigned n, const BlockType& type);

}  // namespace ncsieve
