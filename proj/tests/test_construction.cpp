#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "gp/construction.hpp"
#include "gp/lattice.hpp"

using namespace gp;

namespace {

ExtremalSet with_points(int n, std::vector<Point> points) {
  return ExtremalSet{n, PointSet(std::move(points))};
}

}  // namespace

TEST_CASE("set and block sizes") {
  CHECK(extremal_set_size(1) == 2);
  CHECK(extremal_set_size(2) == 4);
  CHECK(extremal_set_size(3) == 16);
  CHECK(extremal_set_size(4) == 256);
  CHECK(extremal_set_size(5) == 65536);
  CHECK(extremal_set_size(6) == (std::uint64_t{1} << 32));
  CHECK_THROWS_AS(extremal_set_size(0), std::invalid_argument);
  CHECK_THROWS_AS(extremal_set_size(7), std::invalid_argument);
  CHECK(construction_block_size(3) == 4);
  CHECK(construction_block_size(4) == 16);
}

TEST_CASE("block decomposition") {
  CHECK(block_decompose(1, 3) == BlockIndex{0, 1});
  CHECK(block_decompose(4, 3) == BlockIndex{0, 4});  // boundary: r = block size
  CHECK(block_decompose(5, 3) == BlockIndex{1, 1});
  CHECK(block_decompose(16, 3) == BlockIndex{3, 4});
  for (std::uint64_t i = 1; i <= 256; ++i) {
    const BlockIndex b = block_decompose(i, 4);
    CHECK(b.p * construction_block_size(4) + b.r == i);
    CHECK(b.r >= 1);
    CHECK(b.r <= construction_block_size(4));
  }
  CHECK_THROWS_AS(block_decompose(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(block_decompose(17, 3), std::invalid_argument);
  CHECK_THROWS_AS(block_decompose(1, 2), std::invalid_argument);
}

TEST_CASE("base cases and published columns") {
  const ExtremalSet x1 = construct(1);
  CHECK(x1.points == PointSet({Point{1}, Point{2}}));

  const ExtremalSet x2 = construct(2);
  CHECK(x2.points == PointSet({Point{1, 2}, Point{2, 1}, Point{3, 4}, Point{4, 3}}));

  const ExtremalSet x3 = construct(3);
  CHECK(x3.points[0] == Point{1, 6, 7});
  CHECK(x3.points[4] == Point{5, 2, 3});
  CHECK(x3.points[8] == Point{9, 14, 15});
  CHECK(x3.points[15] == Point{16, 11, 10});

  const std::vector<Coord> col2 = {6, 5, 8, 7, 2, 1, 4, 3, 14, 13, 16, 15, 10, 9, 12, 11};
  const std::vector<Coord> col3 = {7, 8, 5, 6, 3, 4, 1, 2, 15, 16, 13, 14, 11, 12, 9, 10};
  for (std::size_t i = 0; i < 16; ++i) {
    CHECK(x3.points[i][1] == col2[i]);
    CHECK(x3.points[i][2] == col3[i]);
  }

  CHECK_THROWS_AS(construct(0), std::invalid_argument);
  CHECK_THROWS_AS(construct(6), std::invalid_argument);  // streaming only
  CHECK_THROWS_AS(construct(7), std::invalid_argument);
}

TEST_CASE("structural invariants for materialized sets") {
  for (int n = 1; n <= 4; ++n) {
    const ExtremalSet x = construct(n);
    CHECK(x.points.size() == extremal_set_size(n));
    CHECK(columns_are_permutations(x));
    for (std::size_t i = 0; i < x.points.size(); ++i)
      CHECK(x.points[i][0] == static_cast<Coord>(i + 1));
  }
  CHECK(check_claim_a(construct(3)));
  CHECK(check_claim_a(construct(4)));
  CHECK(check_cross_block_order(construct(3)));
  CHECK(check_cross_block_order(construct(4)));
  CHECK(check_cross_block_order(construct(4), 4) == check_cross_block_order(construct(4), 1));
}

TEST_CASE("streaming construction agrees with materialization") {
  for (int n = 1; n <= 4; ++n) {
    const ExtremalSet x = construct(n);
    for (std::uint64_t i = 1; i <= x.points.size(); ++i)
      CHECK(construct_streaming(n, i) == x.points[i - 1]);
  }
  CHECK(construct_streaming(2, 4) == Point{4, 3});
  CHECK(construct_streaming(3, 9) == Point{9, 14, 15});

  // dimension 6 exists only through this path
  CHECK(construct_streaming(6, 1)[0] == 1);
  CHECK(construct_streaming(6, 1).dimension() == 6);
  CHECK_THROWS_AS(construct_streaming(6, 0), std::invalid_argument);
  CHECK_THROWS_AS(construct_streaming(3, 17), std::invalid_argument);
  CHECK_THROWS_AS(construct_streaming(7, 1), std::invalid_argument);
}

TEST_CASE("claim a rejects a broken block order") {
  const ExtremalSet x3 = construct(3);

  // swap the middle coordinates of two same-block points: orders now agree
  std::vector<Point> swapped(x3.points.begin(), x3.points.end());
  swapped[0] = Point{1, 5, 7};
  swapped[1] = Point{2, 6, 8};
  CHECK_FALSE(check_claim_a(with_points(3, std::move(swapped))));

  // a tie paired with a non-tie is also a violation
  std::vector<Point> tied(x3.points.begin(), x3.points.end());
  tied[0] = Point{1, 5, 7};  // shares x2 = 5 with point 2 but x3 differs
  CHECK_FALSE(check_claim_a(with_points(3, std::move(tied))));

  // swapping the last two coordinates of one point lands back on the block's
  // antidiagonal, so claim A still holds for that mutation
  std::vector<Point> rotated(x3.points.begin(), x3.points.end());
  rotated[0] = Point{1, 7, 6};
  CHECK(check_claim_a(with_points(3, std::move(rotated))));
}

TEST_CASE("blocks lie on antidiagonals") {
  for (int n = 3; n <= 4; ++n) {
    const ExtremalSet x = construct(n);
    const std::uint64_t block = construction_block_size(n);
    for (std::uint64_t b = 0; b < extremal_set_size(n) / block; ++b) {
      const Point& first = x.points[b * block];
      const Coord sum = first[n - 2] + first[n - 1];
      for (std::uint64_t k = 1; k < block; ++k) {
        const Point& p = x.points[b * block + k];
        CHECK(p[n - 2] + p[n - 1] == sum);
      }
    }
  }
}

TEST_CASE("cross-block order rejects a broken pair") {
  const ExtremalSet x3 = construct(3);
  std::vector<Point> broken(x3.points.begin(), x3.points.end());
  // swap the last coordinates of points 1 (block 0) and 5 (block 1)
  broken[0] = Point{1, 6, 3};
  broken[4] = Point{5, 2, 7};
  CHECK_FALSE(check_cross_block_order(with_points(3, std::move(broken))));
  CHECK_THROWS_AS(check_claim_a(construct(2)), std::invalid_argument);
  CHECK_THROWS_AS(check_cross_block_order(construct(2)), std::invalid_argument);
}

TEST_CASE("block projection recovers the previous dimension") {
  for (int n = 3; n <= 4; ++n) {
    const ExtremalSet x = construct(n);
    const ExtremalSet prev = construct(n - 1);
    const std::uint64_t block = construction_block_size(n);
    for (std::uint64_t b = 0; b < extremal_set_size(n) / block; ++b) {
      // all points of a block share one p-tuple on coordinates 1..n-1,
      // and that tuple (1-based) is the corresponding point of X^(n-1)
      std::vector<Coord> expected(prev.points[b].coords().begin(),
                                  prev.points[b].coords().end());
      expected.resize(static_cast<std::size_t>(n) - 1);
      for (std::uint64_t k = 0; k < block; ++k) {
        const Point& p = x.points[b * block + k];
        for (int j = 0; j + 1 < n; ++j)
          CHECK((p[j] - 1) / static_cast<Coord>(block) + 1 == expected[j]);
      }
    }
  }
}

TEST_CASE("general position exhaustively at small dimensions") {
  CHECK_FALSE(
      find_violating_triple(construct(2).points, GridSpec::infinite(2)).has_value());
  CHECK_FALSE(
      find_violating_triple(construct(3).points, GridSpec::infinite(3)).has_value());
}
