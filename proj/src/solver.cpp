#include "gp/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

#include "gp/construction.hpp"

namespace gp {

namespace {

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

/// All grid vertices in lexicographic coordinate order (last coordinate
/// cycling fastest).
std::vector<Point> enumerate_vertices(const GridSpec& grid) {
  const std::size_t n = grid.dimension();
  const auto& sides = grid.sides();
  const Coord lo = grid.kind() == GridKind::Box ? 1 : 0;
  std::vector<Point> verts;
  verts.reserve(static_cast<std::size_t>(grid.vertex_count()));
  std::vector<Coord> cur(n, lo);
  for (std::uint64_t left = grid.vertex_count(); left > 0; --left) {
    verts.emplace_back(cur);
    for (std::size_t j = n; j-- > 0;) {
      if (cur[j] < lo + sides[j] - 1) {
        ++cur[j];
        break;
      }
      cur[j] = lo;
    }
  }
  return verts;
}

std::vector<std::uint16_t> distance_matrix(const std::vector<Point>& verts,
                                           const GridSpec& grid) {
  const std::size_t v = verts.size();
  std::vector<std::uint16_t> dist(v * v, 0);
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = i + 1; j < v; ++j) {
      const std::uint64_t d = grid_distance(verts[i], verts[j], grid);
      if (d > 0xffff) throw std::invalid_argument("grid diameter exceeds the distance table");
      dist[i * v + j] = dist[j * v + i] = static_cast<std::uint16_t>(d);
    }
  }
  return dist;
}

/// Branch and bound over vertex indices in increasing order. Geodesic checks
/// cover only triples through the newly added vertex; earlier triples were
/// checked when their own last vertex was added.
class Search {
 public:
  Search(const std::vector<Point>& verts, const std::vector<std::uint16_t>& dist, SolveMode mode)
      : verts_(verts), dist_(dist), v_(verts.size()), mode_(mode) {}

  void seed(std::vector<std::size_t> indices) {
    witness_ = std::move(indices);
    best_.store(witness_.size(), std::memory_order_relaxed);
  }

  void run_sequential() {
    std::vector<std::size_t> cur;
    std::uint64_t local = 0;
    dfs(cur, 0, local);
    nodes_.fetch_add(local, std::memory_order_relaxed);
  }

  void run_parallel(unsigned threads) {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([this, &next] {
        std::vector<std::size_t> cur;
        std::uint64_t local = 0;
        for (std::size_t v0 = next.fetch_add(1); v0 < v_; v0 = next.fetch_add(1)) {
          // a subtree rooted at v0 holds at most v_ - v0 vertices
          if (v_ - v0 <= best_.load(std::memory_order_relaxed)) continue;
          cur.assign(1, v0);
          dfs(cur, v0 + 1, local);
        }
        nodes_.fetch_add(local, std::memory_order_relaxed);
      });
    }
    for (auto& th : pool) th.join();
  }

  std::size_t best() const { return best_.load(std::memory_order_relaxed); }
  std::uint64_t nodes() const { return nodes_.load(std::memory_order_relaxed); }
  const std::vector<std::size_t>& witness() const { return witness_; }
  const std::vector<std::vector<std::size_t>>& maximum_sets() const { return max_sets_; }

 private:
  bool compatible(const std::vector<std::size_t>& cur, std::size_t v) const {
    const std::uint16_t* dv = dist_.data() + v * v_;
    for (std::size_t x = 0; x < cur.size(); ++x) {
      const std::size_t a = cur[x];
      const unsigned dav = dv[a];
      const std::uint16_t* da = dist_.data() + a * v_;
      for (std::size_t y = x + 1; y < cur.size(); ++y) {
        const std::size_t b = cur[y];
        const unsigned dab = da[b];
        const unsigned dbv = dv[b];
        if (dab + dbv == dav || dab + dav == dbv || dav + dbv == dab) return false;
      }
    }
    return true;
  }

  void record(const std::vector<std::size_t>& cur) {
    const std::size_t sz = cur.size();
    if (mode_ == SolveMode::CountAll) {
      // CountAll runs sequentially, so plain updates are safe here.
      const std::size_t b = best_.load(std::memory_order_relaxed);
      if (sz < b) return;
      if (sz > b) {
        max_sets_.clear();
        best_.store(sz, std::memory_order_relaxed);
      }
      max_sets_.push_back(cur);
      return;
    }
    if (sz <= best_.load(std::memory_order_relaxed)) return;
    std::lock_guard<std::mutex> guard(mutex_);
    if (sz > witness_.size()) {
      witness_ = cur;
      best_.store(sz, std::memory_order_relaxed);
    }
  }

  void dfs(std::vector<std::size_t>& cur, std::size_t next, std::uint64_t& nodes) {
    ++nodes;
    record(cur);
    const bool keep_ties = mode_ == SolveMode::CountAll;
    for (std::size_t v = next; v < v_; ++v) {
      const std::size_t bound = cur.size() + (v_ - v);
      const std::size_t b = best_.load(std::memory_order_relaxed);
      if (keep_ties ? bound < b : bound <= b) break;
      if (!compatible(cur, v)) continue;
      cur.push_back(v);
      dfs(cur, v + 1, nodes);
      cur.pop_back();
    }
  }

  const std::vector<Point>& verts_;
  const std::vector<std::uint16_t>& dist_;
  const std::size_t v_;
  const SolveMode mode_;
  std::atomic<std::size_t> best_{0};
  std::atomic<std::uint64_t> nodes_{0};
  std::mutex mutex_;
  std::vector<std::size_t> witness_;
  std::vector<std::vector<std::size_t>> max_sets_;
};

/// The extremal construction shifted into the grid, when its coordinate range
/// [1, 2^(2^(n-1))] fits inside every side. When the full-dimensional set does
/// not fit, fall back to placing X^(2) into the two largest dimensions (the
/// other coordinates pinned to the low corner); the caller re-verifies either
/// way, since a tight torus can break general position.
std::optional<std::vector<Point>> extremal_seed(const GridSpec& grid) {
  const std::size_t n = grid.dimension();
  const Coord lo = grid.kind() == GridKind::Torus ? 0 : 1;
  const auto& sides = grid.sides();
  const Coord min_side = *std::min_element(sides.begin(), sides.end());
  if (n <= 5 &&
      static_cast<std::uint64_t>(min_side) >= extremal_set_size(static_cast<int>(n))) {
    std::vector<Point> points;
    for (const Point& p : construct(static_cast<int>(n)).points) {
      std::vector<Coord> coords(p.coords());
      for (Coord& c : coords) c += lo - 1;
      points.emplace_back(std::move(coords));
    }
    return points;
  }
  if (n < 3) return std::nullopt;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&sides](std::size_t a, std::size_t b) { return sides[a] > sides[b]; });
  const std::size_t d1 = order[0], d2 = order[1];
  if (sides[d1] < 4 || sides[d2] < 4) return std::nullopt;
  std::vector<Point> points;
  for (const Point& p : construct(2).points) {
    std::vector<Coord> coords(n, lo);
    coords[d1] = p[0] + lo - 1;
    coords[d2] = p[1] + lo - 1;
    points.emplace_back(std::move(coords));
  }
  return points;
}

std::uint64_t count_symmetry_classes(const std::vector<std::vector<std::size_t>>& sets,
                                     const std::vector<Point>& verts, const GridSpec& grid) {
  const std::size_t n = grid.dimension();
  const auto& sides = grid.sides();

  // Box automorphisms: permutations of equal-length coordinates composed
  // with per-coordinate reversals x_j -> i_j + 1 - x_j.
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    bool preserves = true;
    for (std::size_t j = 0; j < n && preserves; ++j) preserves = sides[perm[j]] == sides[j];
    if (preserves) perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::set<std::vector<Point>> canonical;
  std::vector<Point> image;
  for (const auto& indices : sets) {
    std::vector<Point> canon;
    for (const auto& p : perms) {
      for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        image.clear();
        for (std::size_t i : indices) {
          const Point& src = verts[i];
          std::vector<Coord> coords(n);
          for (std::size_t j = 0; j < n; ++j) {
            const Coord c = src[p[j]];
            coords[j] = (mask >> j) & 1 ? sides[j] + 1 - c : c;
          }
          image.emplace_back(std::move(coords));
        }
        std::sort(image.begin(), image.end());
        if (canon.empty() || image < canon) canon = image;
      }
    }
    canonical.insert(std::move(canon));
  }
  return canonical.size();
}

}  // namespace

SolveResult max_gp(const GridSpec& grid, const SolveOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  require(grid.kind() != GridKind::InfiniteLattice, "max_gp needs a finite grid");
  if (options.count_up_to_symmetry)
    require(grid.kind() == GridKind::Box && options.mode == SolveMode::CountAll,
            "count_up_to_symmetry requires CountAll mode on a box grid");
  const std::uint64_t vertex_count = grid.vertex_count();
  require(vertex_count <= options.vertex_cap,
          "vertex count exceeds vertex_cap; raise the cap to search anyway");
  require(grid.dimension() < 32, "dimension too large for the symmetry mask");

  const std::vector<Point> verts = enumerate_vertices(grid);
  const std::vector<std::uint16_t> dist = distance_matrix(verts, grid);
  Search search(verts, dist, options.mode);

  // Incumbent: any two vertices are in general position, and the extremal
  // construction raises the bar whenever it fits (checked, not assumed: a
  // torus can be too tight for it).
  std::vector<std::size_t> baseline(verts.size() < 2 ? 1 : 2);
  std::iota(baseline.begin(), baseline.end(), std::size_t{0});
  search.seed(std::move(baseline));
  if (const auto seed_points = extremal_seed(grid)) {
    PointSet candidate(*seed_points);
    if (candidate.size() > search.best() && is_general_position(candidate, grid)) {
      std::vector<std::size_t> indices;
      indices.reserve(candidate.size());
      for (const Point& p : candidate) {
        const auto it = std::lower_bound(verts.begin(), verts.end(), p);
        indices.push_back(static_cast<std::size_t>(it - verts.begin()));
      }
      std::sort(indices.begin(), indices.end());
      search.seed(std::move(indices));
    }
  }

  unsigned threads = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
  if (threads == 0) threads = 1;
  const bool parallel = !options.deterministic && threads > 1 &&
                        options.mode == SolveMode::OneWitness && verts.size() >= 2;
  if (parallel)
    search.run_parallel(threads);
  else
    search.run_sequential();

  SolveResult result;
  result.gp = search.best();
  result.nodes_explored = search.nodes();
  auto to_point_set = [&verts](const std::vector<std::size_t>& indices) {
    std::vector<Point> points;
    points.reserve(indices.size());
    for (std::size_t i : indices) points.push_back(verts[i]);
    return PointSet(std::move(points));
  };
  if (options.mode == SolveMode::CountAll) {
    const auto& sets = search.maximum_sets();
    result.count_maximum = sets.size();
    result.witness_sets.reserve(sets.size());
    for (const auto& s : sets) result.witness_sets.push_back(to_point_set(s));
    if (options.count_up_to_symmetry)
      result.count_maximum_up_to_symmetry = count_symmetry_classes(sets, verts, grid);
  } else {
    result.witness_sets.push_back(to_point_set(search.witness()));
  }
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

std::pair<std::size_t, std::uint64_t> count_max_gp_grid_2d(Coord r, Coord s) {
  require(r >= 2 && s >= 2, "count_max_gp_grid_2d needs r, s >= 2");
  require(r <= 200 && s <= 200 && r * s <= 400, "grid too large for exhaustive counting");
  SolveOptions options;
  options.mode = SolveMode::CountAll;
  options.vertex_cap = 400;
  const SolveResult result = max_gp(GridSpec::box({r, s}), options);
  return {result.gp, *result.count_maximum};
}

bool verify_torus_lower_bound(int n, const std::vector<Coord>& sides) {
  require(n == 2 || n == 3, "torus lower bound check supports n in {2, 3}");
  require(sides.size() == static_cast<std::size_t>(n), "side count must equal the dimension");
  const std::uint64_t needed = 2 * extremal_set_size(n);
  for (Coord side : sides)
    require(side > 0 && static_cast<std::uint64_t>(side) >= needed,
            "torus sides must be at least 2^(2^(n-1)+1)");

  std::vector<Point> shifted;
  for (const Point& p : construct(n).points) {
    std::vector<Coord> coords(p.coords());
    for (Coord& c : coords) c -= 1;
    shifted.emplace_back(std::move(coords));
  }
  return is_general_position(PointSet(std::move(shifted)), GridSpec::torus(sides));
}

}  // namespace gp
