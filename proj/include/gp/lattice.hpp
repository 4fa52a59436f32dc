#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gp {

using Coord = std::int64_t;

/// A vertex of the n-dimensional integer lattice Z^n (n >= 1).
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Coord> coords);
  Point(std::initializer_list<Coord> coords);

  std::size_t dimension() const { return coords_.size(); }
  Coord operator[](std::size_t j) const { return coords_[j]; }
  const std::vector<Coord>& coords() const { return coords_; }

  bool operator==(const Point& other) const = default;
  auto operator<=>(const Point& other) const = default;

  std::string to_string() const;

 private:
  std::vector<Coord> coords_;
};

/// Ordered collection of pairwise distinct points of a common dimension.
/// Duplicates and dimension mixes are rejected at construction; this keeps
/// index-based witness reporting unambiguous.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> points);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  std::size_t dimension() const;
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }

  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  bool operator==(const PointSet& other) const = default;

 private:
  std::vector<Point> points_;
};

enum class GridKind { InfiniteLattice, Box, Torus };

/// Ambient graph: the infinite lattice P_inf^n, a box product P_{i_1} x ... x P_{i_n}
/// (vertices 1-based, coordinate j in {1,...,i_j}), or a torus product
/// C_{i_1} x ... x C_{i_n} (vertices 0-based residues, coordinate j in {0,...,i_j-1}).
class GridSpec {
 public:
  static GridSpec infinite(std::size_t dimension);
  static GridSpec box(std::vector<Coord> sides);    // every side >= 2
  static GridSpec torus(std::vector<Coord> sides);  // every side >= 3

  GridKind kind() const { return kind_; }
  std::size_t dimension() const { return dimension_; }
  const std::vector<Coord>& sides() const { return sides_; }

  bool contains(const Point& p) const;
  /// Number of vertices; throws for the infinite lattice.
  std::uint64_t vertex_count() const;

  std::string describe() const;  // e.g. "box:4x4", "torus:8x8", "lattice:3"

 private:
  GridSpec(GridKind kind, std::size_t dimension, std::vector<Coord> sides);

  GridKind kind_ = GridKind::InfiniteLattice;
  std::size_t dimension_ = 0;
  std::vector<Coord> sides_;
};

/// Certificate that a set is not in general position: w lies on a u,v-geodesic,
/// i.e. d(u,w) + d(w,v) = d(u,v) with u, v, w pairwise distinct.
struct WitnessTriple {
  Point u;
  Point v;
  Point w;  // the middle point

  bool operator==(const WitnessTriple& other) const = default;
};

/// L1 distance on Z^n: sum_i |u_i - v_i|. Throws on dimension mismatch
/// and on (absurdly large) sum overflow.
std::uint64_t l1_distance(const Point& u, const Point& v);

/// Distance on a torus product: per coordinate the shorter cyclic arc,
/// min(|u_j - v_j|, i_j - |u_j - v_j|), summed. Coordinates must already be
/// residues in [0, i_j).
std::uint64_t torus_distance(const Point& u, const Point& v, const std::vector<Coord>& sides);

/// Shortest-path distance in the given grid. Box products are isometric in the
/// lattice, so box and lattice both use the L1 formula.
std::uint64_t grid_distance(const Point& u, const Point& v, const GridSpec& grid);

/// Coordinatewise betweenness in the infinite lattice: w lies on a shortest
/// u,v-path iff min(u_i, v_i) <= w_i <= max(u_i, v_i) for every coordinate i.
bool lies_between(const Point& u, const Point& w, const Point& v);

/// Metric betweenness: d(u,w) + d(w,v) == d(u,v) under the grid's metric.
/// Agrees with lies_between on the infinite lattice.
bool lies_between_metric(const Point& u, const Point& w, const Point& v, const GridSpec& grid);

struct ScanOptions {
  // With deterministic set, the result is the first hit of the sequential
  // lexicographic scan regardless of thread count; otherwise any valid
  // witness may be returned.
  bool deterministic = true;
  unsigned threads = 1;
};

/// Search for three pairwise distinct points of s on a common geodesic.
/// Scans index triples a < b < c lexicographically and tries each of the
/// three points as the middle, in index order. Returns the witness or
/// nullopt when s is a general position set of the grid.
std::optional<WitnessTriple> find_violating_triple(const PointSet& s, const GridSpec& grid,
                                                   const ScanOptions& options = {});

inline bool is_general_position(const PointSet& s, const GridSpec& grid,
                                const ScanOptions& options = {}) {
  return !find_violating_triple(s, grid, options).has_value();
}

/// Randomized spot check for sets too large to scan exhaustively: draws
/// `samples` index triples from a seeded generator and tests all three middle
/// roles for each. A nullopt result is evidence, not proof.
std::optional<WitnessTriple> sample_violating_triple(const PointSet& s, const GridSpec& grid,
                                                     std::uint64_t samples, std::uint64_t seed);

}  // namespace gp
