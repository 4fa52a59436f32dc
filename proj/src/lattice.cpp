#include "gp/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace gp {

namespace {

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

std::uint64_t abs_diff(Coord a, Coord b) {
  // Correct for the full int64 range; |a - b| can exceed INT64_MAX.
  return a >= b ? static_cast<std::uint64_t>(a) - static_cast<std::uint64_t>(b)
                : static_cast<std::uint64_t>(b) - static_cast<std::uint64_t>(a);
}

std::uint64_t checked_add(std::uint64_t acc, std::uint64_t term) {
  if (acc > std::numeric_limits<std::uint64_t>::max() - term)
    throw std::overflow_error("distance sum overflows 64 bits");
  return acc + term;
}

}  // namespace

Point::Point(std::vector<Coord> coords) : coords_(std::move(coords)) {
  require(!coords_.empty(), "point dimension must be >= 1");
}

Point::Point(std::initializer_list<Coord> coords) : Point(std::vector<Coord>(coords)) {}

std::string Point::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    if (j) out << ',';
    out << coords_[j];
  }
  out << ')';
  return out.str();
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.empty()) return;
  const std::size_t dim = points_[0].dimension();
  for (const Point& p : points_)
    require(p.dimension() == dim, "all points in a set must share one dimension");
  std::vector<const Point*> order(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) order[i] = &points_[i];
  std::sort(order.begin(), order.end(), [](const Point* a, const Point* b) { return *a < *b; });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (*order[i] == *order[i - 1])
      throw std::invalid_argument("duplicate point in set: " + order[i]->to_string());
}

std::size_t PointSet::dimension() const {
  if (points_.empty()) throw std::logic_error("dimension of an empty point set");
  return points_[0].dimension();
}

GridSpec::GridSpec(GridKind kind, std::size_t dimension, std::vector<Coord> sides)
    : kind_(kind), dimension_(dimension), sides_(std::move(sides)) {}

GridSpec GridSpec::infinite(std::size_t dimension) {
  require(dimension >= 1, "lattice dimension must be >= 1");
  return GridSpec(GridKind::InfiniteLattice, dimension, {});
}

GridSpec GridSpec::box(std::vector<Coord> sides) {
  require(!sides.empty(), "box needs at least one side length");
  for (Coord s : sides) require(s >= 2, "box side lengths must be >= 2");
  std::size_t dim = sides.size();
  return GridSpec(GridKind::Box, dim, std::move(sides));
}

GridSpec GridSpec::torus(std::vector<Coord> sides) {
  require(!sides.empty(), "torus needs at least one side length");
  for (Coord s : sides) require(s >= 3, "torus side lengths must be >= 3 (C_k is a cycle)");
  std::size_t dim = sides.size();
  return GridSpec(GridKind::Torus, dim, std::move(sides));
}

bool GridSpec::contains(const Point& p) const {
  if (p.dimension() != dimension_) return false;
  switch (kind_) {
    case GridKind::InfiniteLattice:
      return true;
    case GridKind::Box:
      for (std::size_t j = 0; j < dimension_; ++j)
        if (p[j] < 1 || p[j] > sides_[j]) return false;
      return true;
    case GridKind::Torus:
      for (std::size_t j = 0; j < dimension_; ++j)
        if (p[j] < 0 || p[j] >= sides_[j]) return false;
      return true;
  }
  return false;
}

std::uint64_t GridSpec::vertex_count() const {
  if (kind_ == GridKind::InfiniteLattice)
    throw std::logic_error("infinite lattice has no vertex count");
  std::uint64_t n = 1;
  for (Coord s : sides_) {
    if (n > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(s))
      throw std::overflow_error("vertex count overflows 64 bits");
    n *= static_cast<std::uint64_t>(s);
  }
  return n;
}

std::string GridSpec::describe() const {
  std::ostringstream out;
  if (kind_ == GridKind::InfiniteLattice) {
    out << "lattice:" << dimension_;
    return out.str();
  }
  out << (kind_ == GridKind::Box ? "box:" : "torus:");
  for (std::size_t j = 0; j < sides_.size(); ++j) {
    if (j) out << 'x';
    out << sides_[j];
  }
  return out.str();
}

std::uint64_t l1_distance(const Point& u, const Point& v) {
  require(u.dimension() == v.dimension(), "l1_distance: dimension mismatch");
  std::uint64_t sum = 0;
  for (std::size_t j = 0; j < u.dimension(); ++j) sum = checked_add(sum, abs_diff(u[j], v[j]));
  return sum;
}

std::uint64_t torus_distance(const Point& u, const Point& v, const std::vector<Coord>& sides) {
  require(u.dimension() == v.dimension(), "torus_distance: dimension mismatch");
  require(u.dimension() == sides.size(), "torus_distance: side count mismatch");
  std::uint64_t sum = 0;
  for (std::size_t j = 0; j < u.dimension(); ++j) {
    const Coord side = sides[j];
    require(side >= 3, "torus side lengths must be >= 3");
    require(u[j] >= 0 && u[j] < side && v[j] >= 0 && v[j] < side,
            "torus coordinates must be residues in [0, side)");
    const std::uint64_t arc = abs_diff(u[j], v[j]);
    sum = checked_add(sum, std::min(arc, static_cast<std::uint64_t>(side) - arc));
  }
  return sum;
}

std::uint64_t grid_distance(const Point& u, const Point& v, const GridSpec& grid) {
  if (grid.kind() == GridKind::Torus) return torus_distance(u, v, grid.sides());
  return l1_distance(u, v);
}

bool lies_between(const Point& u, const Point& w, const Point& v) {
  require(u.dimension() == w.dimension() && w.dimension() == v.dimension(),
          "lies_between: dimension mismatch");
  for (std::size_t j = 0; j < u.dimension(); ++j) {
    if (w[j] < std::min(u[j], v[j]) || w[j] > std::max(u[j], v[j])) return false;
  }
  return true;
}

bool lies_between_metric(const Point& u, const Point& w, const Point& v, const GridSpec& grid) {
  for (const Point* p : {&u, &w, &v})
    require(grid.contains(*p), "lies_between_metric: point outside grid bounds");
  if (grid.kind() == GridKind::Torus) {
    const auto& sides = grid.sides();
    return torus_distance(u, w, sides) + torus_distance(w, v, sides) == torus_distance(u, v, sides);
  }
  // Lattice and box share the L1 metric; the coordinatewise characterization
  // is equivalent and cheaper than forming the three sums.
  return lies_between(u, w, v);
}

namespace {

// Betweenness specialised per grid kind so the triple scans stay tight.
struct Betweenness {
  const GridSpec& grid;
  bool torus;

  explicit Betweenness(const GridSpec& g) : grid(g), torus(g.kind() == GridKind::Torus) {}

  bool operator()(const Point& u, const Point& w, const Point& v) const {
    if (!torus) return lies_between(u, w, v);
    const auto& sides = grid.sides();
    return torus_distance(u, w, sides) + torus_distance(w, v, sides) ==
           torus_distance(u, v, sides);
  }
};

// Middle roles for index triple a < b < c, tried in index order.
// role 0: a between b and c; role 1: b between a and c; role 2: c between a and b.
std::optional<WitnessTriple> check_triple(const PointSet& s, const Betweenness& between,
                                          std::size_t a, std::size_t b, std::size_t c) {
  if (between(s[b], s[a], s[c])) return WitnessTriple{s[b], s[c], s[a]};
  if (between(s[a], s[b], s[c])) return WitnessTriple{s[a], s[c], s[b]};
  if (between(s[a], s[c], s[b])) return WitnessTriple{s[a], s[b], s[c]};
  return std::nullopt;
}

std::optional<WitnessTriple> scan_sequential(const PointSet& s, const Betweenness& between) {
  const std::size_t n = s.size();
  for (std::size_t a = 0; a + 2 < n; ++a)
    for (std::size_t b = a + 1; b + 1 < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        if (auto hit = check_triple(s, between, a, b, c)) return hit;
  return std::nullopt;
}

std::optional<WitnessTriple> scan_parallel(const PointSet& s, const Betweenness& between,
                                           unsigned threads, bool deterministic) {
  const std::size_t n = s.size();
  std::atomic<std::size_t> next_a{0};
  // Smallest first index with a hit so far; sufficient for determinism since
  // each first index is scanned by exactly one thread, in (b, c, role) order.
  std::atomic<std::size_t> best_a{n};
  std::mutex best_mutex;
  std::optional<WitnessTriple> best;

  auto worker = [&] {
    for (;;) {
      const std::size_t a = next_a.fetch_add(1);
      if (a + 2 >= n) return;
      if (a > best_a.load()) {
        if (deterministic) continue;  // later blocks cannot improve the first hit
        return;
      }
      if (!deterministic && best_a.load() < n) return;
      for (std::size_t b = a + 1; b + 1 < n; ++b) {
        for (std::size_t c = b + 1; c < n; ++c) {
          if (auto hit = check_triple(s, between, a, b, c)) {
            std::lock_guard<std::mutex> lock(best_mutex);
            if (a < best_a.load()) {
              best_a.store(a);
              best = std::move(hit);
            }
            return;
          }
        }
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return best;
}

}  // namespace

std::optional<WitnessTriple> find_violating_triple(const PointSet& s, const GridSpec& grid,
                                                   const ScanOptions& options) {
  require(!s.empty(), "find_violating_triple: empty point set");
  require(s.dimension() == grid.dimension(), "find_violating_triple: dimension mismatch");
  for (const Point& p : s)
    require(grid.contains(p), "find_violating_triple: point outside grid bounds");
  if (s.size() < 3) return std::nullopt;

  const Betweenness between(grid);
  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  if (threads <= 1 || s.size() < 64) return scan_sequential(s, between);
  return scan_parallel(s, between, threads, options.deterministic);
}

std::optional<WitnessTriple> sample_violating_triple(const PointSet& s, const GridSpec& grid,
                                                     std::uint64_t samples, std::uint64_t seed) {
  require(s.dimension() == grid.dimension(), "sample_violating_triple: dimension mismatch");
  if (s.size() < 3) return std::nullopt;

  const Betweenness between(grid);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, s.size() - 1);
  for (std::uint64_t k = 0; k < samples; ++k) {
    std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
    if (a == b || b == c || a == c) continue;
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    if (auto hit = check_triple(s, between, a, b, c)) return hit;
  }
  return std::nullopt;
}

}  // namespace gp
