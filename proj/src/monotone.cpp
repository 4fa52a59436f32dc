#include "gp/monotone.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace gp {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

// Patience scan for the longest non-strict chain. Compare is std::less for
// increasing chains (replace the first tail strictly greater than x) and
// std::greater for decreasing ones. Returns the chain as index positions;
// among all chains reachable through the recorded backpointers, the
// lexicographically smallest index sequence wins.
template <typename Compare>
std::vector<std::size_t> longest_chain(const std::vector<Coord>& seq, Compare cmp) {
  const std::size_t n = seq.size();
  std::vector<Coord> tail_values;
  std::vector<std::size_t> tail_index;
  std::vector<std::size_t> length(n), prev(n, kNone);

  for (std::size_t i = 0; i < n; ++i) {
    const auto it = std::upper_bound(tail_values.begin(), tail_values.end(), seq[i], cmp);
    const std::size_t pos = static_cast<std::size_t>(it - tail_values.begin());
    if (pos == tail_values.size()) {
      tail_values.push_back(seq[i]);
      tail_index.push_back(i);
    } else {
      tail_values[pos] = seq[i];
      tail_index[pos] = i;
    }
    length[i] = pos + 1;
    if (pos > 0) prev[i] = tail_index[pos - 1];
  }

  const std::size_t best = tail_values.size();
  std::vector<std::size_t> chain, candidate;
  for (std::size_t i = 0; i < n; ++i) {
    if (length[i] != best) continue;
    candidate.clear();
    for (std::size_t k = i; k != kNone; k = prev[k]) candidate.push_back(k);
    std::reverse(candidate.begin(), candidate.end());
    if (chain.empty() || candidate < chain) chain = candidate;
  }
  return chain;
}

}  // namespace

MonotoneChain longest_monotone_subsequence(const std::vector<Coord>& seq) {
  require(!seq.empty(), "longest_monotone_subsequence: empty sequence");
  std::vector<std::size_t> inc = longest_chain(seq, std::less<Coord>{});
  std::vector<std::size_t> dec = longest_chain(seq, std::greater<Coord>{});
  if (inc.size() >= dec.size()) return MonotoneChain{std::move(inc), Direction::Increasing};
  return MonotoneChain{std::move(dec), Direction::Decreasing};
}

std::vector<Coord> monotone_tightness_witness(std::size_t m) {
  require(m >= 2, "tightness witness needs m >= 2");
  const std::size_t run = m - 1;
  std::vector<Coord> seq;
  seq.reserve(run * run);
  // run ascending runs of descending values: any increasing subsequence takes
  // at most one value per run, any decreasing one stays inside a single run.
  for (std::size_t b = 0; b < run; ++b)
    for (std::size_t k = 0; k < run; ++k)
      seq.push_back(static_cast<Coord>((b + 1) * run - k));
  return seq;
}

std::vector<std::size_t> reduce_indices_by_coordinate(const PointSet& points, std::size_t coord,
                                                      std::size_t target) {
  require(target >= 1, "reduction target must be >= 1");
  require(!points.empty(), "reduce_by_coordinate: empty point set");
  require(coord < points.dimension(), "coordinate index out of range");
  require(points.size() >= (target - 1) * (target - 1) + 1,
          "point count below the Erdos-Szekeres threshold for the target");

  std::vector<Coord> values(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) values[i] = points[i][coord];
  MonotoneChain chain = longest_monotone_subsequence(values);
  if (chain.indices.size() < target)
    throw std::logic_error("monotone chain shorter than the Erdos-Szekeres guarantee");
  chain.indices.resize(target);
  return chain.indices;
}

PointSet reduce_by_coordinate(const PointSet& points, std::size_t coord, std::size_t target) {
  std::vector<Point> kept;
  kept.reserve(target);
  for (std::size_t i : reduce_indices_by_coordinate(points, coord, target))
    kept.push_back(points[i]);
  return PointSet(std::move(kept));
}

std::uint64_t witness_threshold(std::size_t dimension) {
  require(dimension >= 1 && dimension <= 6,
          "witness threshold supported for dimensions 1..6 only");
  return (std::uint64_t{1} << (std::uint64_t{1} << (dimension - 1))) + 1;
}

WitnessSearch witness_triple_traced(const PointSet& points) {
  require(!points.empty(), "witness_triple: empty point set");
  const std::size_t n = points.dimension();
  if (points.size() < witness_threshold(n))
    throw std::invalid_argument(
        "witness_triple needs at least 2^(2^(n-1)) + 1 points; below that the set may be in "
        "general position");

  WitnessSearch search;

  // Stage 1: order by first coordinate, ties broken by the rest.
  std::vector<std::size_t> current(points.size());
  std::iota(current.begin(), current.end(), std::size_t{0});
  std::sort(current.begin(), current.end(),
            [&points](std::size_t a, std::size_t b) { return points[a] < points[b]; });
  search.stages.push_back(current);

  // Stages 2..n: thin to 2^(2^(n-j)) + 1 survivors monotone in coordinate j.
  for (std::size_t j = 2; j <= n; ++j) {
    const std::size_t target =
        static_cast<std::size_t>((std::uint64_t{1} << (std::uint64_t{1} << (n - j))) + 1);
    std::vector<Point> stage_points;
    stage_points.reserve(current.size());
    for (std::size_t i : current) stage_points.push_back(points[i]);
    std::vector<std::size_t> kept =
        reduce_indices_by_coordinate(PointSet(std::move(stage_points)), j - 1, target);
    std::vector<std::size_t> survivors;
    survivors.reserve(kept.size());
    for (std::size_t k : kept) survivors.push_back(current[k]);
    current = std::move(survivors);
    search.stages.push_back(current);
  }

  // All coordinates are now simultaneously monotone along the survivors, so
  // the middle of the first three lies on a geodesic of the outer two.
  const Point& u = points[current[0]];
  const Point& w = points[current[1]];
  const Point& v = points[current[2]];
  if (!lies_between(u, w, v))
    throw std::logic_error("extractor invariant broken: middle survivor not on a geodesic");
  search.triple = WitnessTriple{u, v, w};
  return search;
}

WitnessTriple witness_triple(const PointSet& points) {
  return witness_triple_traced(points).triple;
}

}  // namespace gp
