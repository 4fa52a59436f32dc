#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gp/lattice.hpp"

namespace gp {

enum class SolveMode { OneWitness, CountAll };

struct SolveOptions {
  SolveMode mode = SolveMode::OneWitness;
  std::uint64_t vertex_cap = 4096;
  // Deterministic forces the sequential scan order, making witness_sets
  // reproducible bit-for-bit. Parallel search (threads > 1, deterministic
  // off) still returns the same gp and count, but may return a different
  // maximum set.
  bool deterministic = true;
  unsigned threads = 1;
  // Additionally count maximum sets up to the box's automorphism group
  // (coordinate reversals and permutations of equal-length sides).
  // Box grids only.
  bool count_up_to_symmetry = false;
};

struct SolveResult {
  std::size_t gp = 0;
  std::vector<PointSet> witness_sets;  // one, or all maximum sets when counting
  std::optional<std::uint64_t> count_maximum;
  std::optional<std::uint64_t> count_maximum_up_to_symmetry;
  std::uint64_t nodes_explored = 0;
  std::chrono::duration<double> elapsed{};
};

/// Exact gp number of a finite box or torus product by branch and bound over
/// vertices in lexicographic coordinate order. A candidate vertex is pruned
/// when adding it creates a geodesic triple (only triples through the new
/// vertex need checking); a branch is pruned when the current set plus all
/// remaining vertices cannot beat the incumbent. The incumbent is seeded
/// with the largest extremal construction that embeds in the grid.
/// CountAll mode enumerates every maximum set; counts are raw vertex-subset
/// counts, no symmetry reduction.
SolveResult max_gp(const GridSpec& grid, const SolveOptions& options = {});

/// gp(P_r x P_s) together with the number of maximum general position sets,
/// by exhaustive branch-and-bound enumeration. Requires r, s >= 2 and
/// r*s <= 400.
std::pair<std::size_t, std::uint64_t> count_max_gp_grid_2d(Coord r, Coord s);

/// Embed the extremal set X^(n) (shifted to 0-based residues) into the torus
/// C_{sides_1} x ... x C_{sides_n} and check it is in general position under
/// the cyclic metric. Requires n in {2, 3} and every side >= 2^(2^(n-1)+1),
/// the threshold at which the torus contains the needed grid isometrically.
bool verify_torus_lower_bound(int n, const std::vector<Coord>& sides);

/// gp(G x H) >= gp(G) + gp(H) - 2, as a sanity predicate on computed values.
inline bool check_product_inequality(std::size_t gp_a, std::size_t gp_b, std::size_t gp_ab) {
  return gp_ab + 2 >= gp_a + gp_b;
}

}  // namespace gp
