#include "gp/construction.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>
#include <vector>

namespace gp {

namespace {

constexpr int kMaxStreamDimension = 6;   // coordinates reach 2^32; n = 7 would need 2^64
constexpr int kMaxMaterializedDimension = 5;  // 2^32 points do not fit in a list

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

const std::vector<Point>& base_set(int n) {
  static const std::vector<Point> x1 = {Point{1}, Point{2}};
  static const std::vector<Point> x2 = {Point{1, 2}, Point{2, 1}, Point{3, 4}, Point{4, 3}};
  return n == 1 ? x1 : x2;
}

// Column j (0-based) of the set, as a flat array for the quadratic scans.
std::vector<Coord> column(const ExtremalSet& x, std::size_t j) {
  std::vector<Coord> col(x.points.size());
  for (std::size_t i = 0; i < col.size(); ++i) col[i] = x.points[i][j];
  return col;
}

}  // namespace

std::uint64_t extremal_set_size(int n) {
  require(n >= 1 && n <= kMaxStreamDimension,
          "extremal sets are supported for dimensions 1..6 (coordinates overflow beyond)");
  return std::uint64_t{1} << (std::uint64_t{1} << (n - 1));
}

std::uint64_t construction_block_size(int n) {
  require(n >= 2 && n <= kMaxStreamDimension, "block size is defined for dimensions 2..6");
  return extremal_set_size(n - 1);
}

BlockIndex block_decompose(std::uint64_t i, int n) {
  require(n >= 3, "block decomposition needs dimension >= 3");
  const std::uint64_t size = extremal_set_size(n);
  require(i >= 1 && i <= size, "index out of range for block decomposition");
  const std::uint64_t block = construction_block_size(n);
  // r stays 1-based: an index at a block boundary belongs to the lower block.
  const std::uint64_t p = (i - 1) / block;
  return BlockIndex{p, i - p * block};
}

ExtremalSet construct(int n) {
  require(n >= 1 && n <= kMaxMaterializedDimension,
          "construct materializes dimensions 1..5 only; use construct_streaming for n = 6");
  std::vector<Point> current = base_set(std::min(n, 2));
  for (int m = 3; m <= n; ++m) {
    const std::uint64_t block = construction_block_size(m);
    const std::uint64_t size = extremal_set_size(m);
    std::vector<Point> next;
    next.reserve(size);
    for (std::uint64_t i = 1; i <= size; ++i) {
      const std::uint64_t p = (i - 1) / block;
      const std::uint64_t r = i - p * block;
      const Point& lead = current[p];      // x^(m-1) with index p+1
      const Point& inner = current[r - 1];  // x^(m-1) with index r
      std::vector<Coord> coords(m);
      coords[0] = static_cast<Coord>(i);
      for (int j = 2; j <= m - 1; ++j)
        coords[j - 1] = (lead[j - 1] - 1) * static_cast<Coord>(block) + inner[j - 1];
      coords[m - 1] = lead[m - 2] * static_cast<Coord>(block) - inner[m - 2] + 1;
      next.emplace_back(std::move(coords));
    }
    current = std::move(next);
  }
  return ExtremalSet{n, PointSet(std::move(current))};
}

Point construct_streaming(int n, std::uint64_t i) {
  const std::uint64_t size = extremal_set_size(n);  // also validates n
  require(i >= 1 && i <= size, "point index out of range");
  if (n <= 2) return base_set(n)[i - 1];

  const std::uint64_t block = construction_block_size(n);
  const std::uint64_t p = (i - 1) / block;
  const std::uint64_t r = i - p * block;
  const Point lead = construct_streaming(n - 1, p + 1);
  const Point inner = construct_streaming(n - 1, r);
  std::vector<Coord> coords(n);
  coords[0] = static_cast<Coord>(i);
  for (int j = 2; j <= n - 1; ++j)
    coords[j - 1] = (lead[j - 1] - 1) * static_cast<Coord>(block) + inner[j - 1];
  coords[n - 1] = lead[n - 2] * static_cast<Coord>(block) - inner[n - 2] + 1;
  return Point(std::move(coords));
}

bool check_claim_a(const ExtremalSet& x) {
  require(x.n >= 3, "Claim A concerns dimensions >= 3");
  const std::uint64_t block = construction_block_size(x.n);
  const std::vector<Coord> second_last = column(x, x.n - 2);
  const std::vector<Coord> last = column(x, x.n - 1);
  const std::size_t size = x.points.size();
  for (std::size_t start = 0; start < size; start += block) {
    const std::size_t end = start + block;
    for (std::size_t i = start; i < end; ++i) {
      for (std::size_t j = i + 1; j < end; ++j) {
        // Anti-ordered, with ties forced to pair with ties.
        const int s1 = (second_last[i] < second_last[j]) - (second_last[i] > second_last[j]);
        const int s2 = (last[i] < last[j]) - (last[i] > last[j]);
        if (s1 != -s2) return false;
      }
    }
  }
  return true;
}

bool columns_are_permutations(const ExtremalSet& x) {
  const std::size_t size = x.points.size();
  for (std::size_t j = 0; j < static_cast<std::size_t>(x.n); ++j) {
    std::vector<Coord> col = column(x, j);
    std::sort(col.begin(), col.end());
    for (std::size_t i = 0; i < size; ++i)
      if (col[i] != static_cast<Coord>(i + 1)) return false;
  }
  return true;
}

bool check_cross_block_order(const ExtremalSet& x, unsigned threads) {
  require(x.n >= 3, "cross-block order concerns dimensions >= 3");
  const std::uint64_t block = construction_block_size(x.n);
  const std::vector<Coord> second_last = column(x, x.n - 2);
  const std::vector<Coord> last = column(x, x.n - 1);
  const std::size_t size = x.points.size();

  auto scan = [&](std::size_t i_begin, std::size_t i_end) {
    for (std::size_t i = i_begin; i < i_end; ++i) {
      // Pairs within the same block fall under Claim A instead.
      const std::size_t next_block = (i / block + 1) * block;
      const Coord si = second_last[i];
      const Coord li = last[i];
      for (std::size_t j = next_block; j < size; ++j)
        if ((si < second_last[j]) != (li < last[j])) return false;
    }
    return true;
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  if (threads <= 1 || size < 4096) return scan(0, size);

  // Later rows have shorter inner loops, so hand out small chunks dynamically.
  const std::size_t chunk = std::max<std::size_t>(block, size / (threads * 16u));
  std::atomic<std::size_t> next{0};
  std::atomic<bool> ok{true};
  auto worker = [&] {
    while (ok.load()) {
      const std::size_t begin = next.fetch_add(chunk);
      if (begin >= size) return;
      if (!scan(begin, std::min(size, begin + chunk))) ok.store(false);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return ok.load();
}

}  // namespace gp
