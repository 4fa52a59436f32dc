#pragma once

#include <cstddef>
#include <vector>

#include "gp/lattice.hpp"

namespace gp {

enum class Direction { Increasing, Decreasing };

/// A monotone (non-strict) subsequence of a source sequence, stored as
/// strictly increasing positions into it.
struct MonotoneChain {
  std::vector<std::size_t> indices;
  Direction direction = Direction::Increasing;
};

/// Longest non-strict monotone subsequence of seq. When the longest
/// increasing and decreasing lengths tie, the increasing one is returned.
/// Among chains of the winning direction, returns the lexicographically
/// smallest index set reachable through the patience backpointers.
/// Guarantee: |seq| >= (m-1)^2 + 1 implies a result of length >= m.
MonotoneChain longest_monotone_subsequence(const std::vector<Coord>& seq);

/// A sequence of length (m-1)^2 whose longest monotone subsequence has
/// length exactly m - 1: m - 1 descending runs of m - 1 values, runs
/// ascending. Shows the Erdos-Szekeres bound is tight.
std::vector<Coord> monotone_tightness_witness(std::size_t m);

/// Keep `target` points of `points` (preserving list order) whose coordinate
/// `coord` (0-based) values are monotone. Earlier coordinates, if monotone
/// along the list order on entry, stay monotone, since a subsequence of a
/// monotone sequence is monotone. Requires |points| >= (target-1)^2 + 1 so
/// the Erdos-Szekeres guarantee applies; the result is the first `target`
/// entries of the extracted chain.
PointSet reduce_by_coordinate(const PointSet& points, std::size_t coord, std::size_t target);

/// One coordinate stage of the reduction pipeline, for tracing: the indices
/// (into `points`) that survive.
std::vector<std::size_t> reduce_indices_by_coordinate(const PointSet& points, std::size_t coord,
                                                      std::size_t target);

struct WitnessSearch {
  WitnessTriple triple;
  // stages[0]: input indices sorted by coordinate 1 (ties broken by the
  // remaining coordinates); stages[j-1] for j in 2..n: original indices
  // surviving the coordinate-j reduction, in list order.
  std::vector<std::vector<std::size_t>> stages;
};

/// Extract a geodesic triple from any set of at least 2^(2^(n-1)) + 1 points
/// of Z^n: sort by first coordinate, then for j = 2..n reduce to
/// 2^(2^(n-j)) + 1 points monotone in coordinate j. The three survivors are
/// monotone in every coordinate simultaneously, so the middle one lies
/// between the outer two. Throws if the cardinality bound is not met.
WitnessSearch witness_triple_traced(const PointSet& points);
WitnessTriple witness_triple(const PointSet& points);

/// Minimum cardinality for witness_triple in dimension n: 2^(2^(n-1)) + 1.
std::uint64_t witness_threshold(std::size_t dimension);

}  // namespace gp
