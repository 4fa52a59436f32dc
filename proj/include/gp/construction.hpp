#pragma once

#include <cstdint>

#include "gp/lattice.hpp"

namespace gp {

/// Decomposition of an index i in [2^(2^(n-1))] into blocks of length
/// 2^(2^(n-2)): i = p * 2^(2^(n-2)) + r with 0 <= p < 2^(2^(n-2)) and
/// r in {1, ..., 2^(2^(n-2))}. Note r is 1-based; when i is a multiple of the
/// block size, r equals the block size and p = i / blocksize - 1.
struct BlockIndex {
  std::uint64_t p = 0;
  std::uint64_t r = 0;

  bool operator==(const BlockIndex& other) const = default;
};

/// 2^(2^(n-1)), the cardinality of the extremal set in dimension n.
/// Supported for n in [1, 6]; n >= 7 would overflow 64-bit coordinates.
std::uint64_t extremal_set_size(int n);

/// 2^(2^(n-2)), the block length used by the recursion (n >= 2).
std::uint64_t construction_block_size(int n);

BlockIndex block_decompose(std::uint64_t i, int n);  // n >= 3, i in [2^(2^(n-1))]

/// The extremal general position set X^(n): 2^(2^(n-1)) points indexed so
/// that point i has first coordinate i, and every coordinate column is a
/// permutation of [2^(2^(n-1))].
struct ExtremalSet {
  int n = 0;
  PointSet points;  // points[i-1] is the point with first coordinate i
};

/// Build X^(n) for n in [1, 5]. Base cases: X^(1) = {(1), (2)} and
/// X^(2) = {(1,2), (2,1), (3,4), (4,3)}; for n >= 3 point i = p*B + r
/// (B the block size) has
///   coordinate 1:          i
///   coordinate j (1<j<n):  (X^(n-1)[p+1][j] - 1) * B + X^(n-1)[r][j]
///   coordinate n:          X^(n-1)[p+1][n-1] * B - X^(n-1)[r][n-1] + 1
/// n = 6 is construction-only via construct_streaming (2^32 points do not
/// fit in memory as a list).
ExtremalSet construct(int n);

/// Point i of X^(n) computed directly by recursive block decomposition,
/// without materializing the set. Valid for n in [1, 6].
Point construct_streaming(int n, std::uint64_t i);

/// Within every block, the (n-1)-th and n-th coordinate columns are
/// anti-ordered: for same-block i != j,
/// x_{i,n-1} < x_{j,n-1} exactly when x_{i,n} > x_{j,n}.
/// Ties (possible only in corrupted sets) must pair with ties.
bool check_claim_a(const ExtremalSet& x);  // n >= 3

// Structural invariants, exhaustive. These carry the verification load for
// n = 5, where the full triple scan is out of reach.
bool columns_are_permutations(const ExtremalSet& x);
/// For i, j in different blocks the last two coordinate columns are
/// co-ordered: x_{i,n-1} < x_{j,n-1} exactly when x_{i,n} < x_{j,n}.
bool check_cross_block_order(const ExtremalSet& x, unsigned threads = 1);  // n >= 3

}  // namespace gp
