#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "utsolve/nil_algebra.hpp"

using namespace utsolve;
using testing::to_dense;

namespace {

AlgebraElement e(Residue p, int m, int i, int j, Residue c = 1) { return AlgebraElement::unit(p, m, i, j, c); }

AlgebraElement power_by_mul(const AlgebraElement& a, int k) {
  AlgebraElement r = a;
  for (int i = 1; i < k; ++i) r = r * a;
  return r;
}

}  // namespace

TEST_CASE("position set layout") {
  const PositionSet pos(3, 3);
  CHECK(pos.m() == 7);
  CHECK(pos.index_of_label(1) == 0);
  CHECK(pos.index_of_label(2) == 3);
  CHECK(pos.index_of_label(3) == 6);
  CHECK(pos.index_of_interior(1, 1) == 1);
  CHECK(pos.index_of_interior(2, 2) == 5);
  CHECK(pos.label(4) == "a(2,1)");
  CHECK(pos.label(3) == "2");

  const PositionSet flat(5, 1);
  CHECK(flat.m() == 5);
  for (int i = 1; i <= 5; ++i) CHECK(flat.index_of_label(i) == i - 1);
  CHECK_THROWS_AS(flat.index_of_interior(1, 1), std::out_of_range);
  CHECK_THROWS_AS(PositionSet(1, 2), std::invalid_argument);
}

TEST_CASE("add") {
  const AlgebraElement zero(5, 3);
  const AlgebraElement a = e(5, 3, 0, 1, 3) + e(5, 3, 1, 2, 4);
  CHECK(a + zero == a);
  CHECK((e(2, 3, 0, 1) + e(2, 3, 0, 1)).is_zero());
  const auto sum = e(2, 3, 0, 1) + e(2, 3, 1, 2);
  CHECK(sum.support() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK_THROWS_AS(AlgebraElement(2, 3) + AlgebraElement(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(AlgebraElement(2, 3) + AlgebraElement(3, 3), std::invalid_argument);
}

TEST_CASE("mul") {
  CHECK(e(3, 3, 0, 1) * e(3, 3, 1, 2) == e(3, 3, 0, 2));
  CHECK((e(3, 3, 0, 1) * e(3, 3, 0, 1)).is_zero());
  const AlgebraElement a = e(7, 3, 0, 1) + e(7, 3, 1, 2);
  // Independent check through plain integer matrices.
  const auto expected = testing::dense_mul(to_dense(a), to_dense(a), 7);
  CHECK(to_dense(a * a) == expected);
  CHECK(a * a == e(7, 3, 0, 2));
  CHECK_THROWS_AS(AlgebraElement(2, 3) * AlgebraElement(2, 4), std::invalid_argument);
}

TEST_CASE("set rejects positions on or below the diagonal") {
  AlgebraElement a(3, 3);
  CHECK_THROWS_AS(a.set(1, 1, 1), std::out_of_range);
  CHECK_THROWS_AS(a.set(2, 0, 1), std::out_of_range);
  a.set(0, 2, -1);
  CHECK(a(0, 2) == 2);
  CHECK(a(2, 0) == 0);
}

TEST_CASE("filtration level") {
  CHECK(filtration_level(AlgebraElement(3, 3)) == kInfiniteLevel);
  CHECK(filtration_level(e(3, 3, 0, 1)) == 1);
  CHECK(filtration_level(e(3, 3, 0, 2)) == 2);
  CHECK(filtration_level(e(3, 6, 1, 5) + e(3, 6, 0, 4)) == 4);
}

TEST_CASE("paths ending at a vertex") {
  const AlgebraElement chain = e(2, 3, 0, 1) + e(2, 3, 1, 2);
  const auto two = paths_ending_at(chain, 2, 2);
  REQUIRE(two.size() == 1);
  CHECK(two[0].vertices == std::vector<int>{0, 1, 2});
  CHECK(two[0].weight == 1);
  CHECK(two[0].length() == 2);
  CHECK(paths_ending_at(chain, 2, 3).empty());

  const AlgebraElement weighted = e(5, 3, 0, 1, 2) + e(5, 3, 1, 2, 3);
  const auto w = paths_ending_at(weighted, 2, 2);
  REQUIRE(w.size() == 1);
  CHECK(w[0].weight == 1);  // 2 * 3 = 6 = 1 mod 5
}

TEST_CASE("paths are listed in lexicographic order") {
  // Complete graph on 5 vertices: paths of length 2 into vertex 4 are (a,b,4), a<b<4.
  AlgebraElement full(3, 5);
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) full.set(i, j, 1);
  const auto paths = paths_ending_at(full, 4, 2);
  CHECK(paths.size() == 6);
  for (std::size_t k = 1; k < paths.size(); ++k) CHECK(paths[k - 1].vertices < paths[k].vertices);
  for (const auto& path : paths) {
    CHECK(path.vertices.back() == 4);
    for (int v = 0; v < path.length(); ++v) CHECK(full(path.vertices[v], path.vertices[v + 1]) != 0);
  }
}

TEST_CASE("power via paths") {
  const AlgebraElement chain = e(2, 3, 0, 1) + e(2, 3, 1, 2);
  CHECK(power_via_paths(chain, 2) == e(2, 3, 0, 2));
  const AlgebraElement chain5 = e(5, 3, 0, 1) + e(5, 3, 1, 2);
  CHECK(power_via_paths(chain5, 2) == e(5, 3, 0, 2));

  // l(a) = 2 here, so a^3 = 0.
  const AlgebraElement short_chain = e(3, 5, 0, 1) + e(3, 5, 1, 2) + e(3, 5, 3, 4);
  CHECK(max_path_length(short_chain) == 2);
  CHECK(power_via_paths(short_chain, 3).is_zero());
  CHECK(power_via_paths(AlgebraElement(3, 4), 1).is_zero());
}

TEST_CASE("path weights sum to the power coefficients") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const AlgebraElement a = testing::random_algebra(3, 6, rng, 1, 0.6);
    for (int length = 1; length < 6; ++length) {
      const AlgebraElement power = power_via_paths(a, length);
      for (int end = 0; end < 6; ++end) {
        std::vector<Residue> by_start(6, 0);
        for (const auto& path : paths_ending_at(a, end, length)) {
          by_start[path.vertices.front()] = add_mod(by_start[path.vertices.front()], path.weight, 3);
        }
        for (int start = 0; start < end; ++start) CHECK(power(start, end) == by_start[start]);
      }
    }
  }
}

TEST_CASE("algebra properties on random samples") {
  std::mt19937_64 rng(2024);
  for (auto [p, m] : {std::pair<Residue, int>{2, 4}, {3, 5}, {5, 6}, {2, 9}}) {
    CAPTURE(p);
    CAPTURE(m);
    for (int trial = 0; trial < 1000; ++trial) {
      const auto a = testing::random_algebra(p, m, rng, 1 + static_cast<int>(rng() % 2), 0.7);
      const auto b = testing::random_algebra(p, m, rng, 1 + static_cast<int>(rng() % 3), 0.7);
      const auto c = testing::random_algebra(p, m, rng);
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(filtration_level(a * b) >= add_levels(filtration_level(a), filtration_level(b)));
      REQUIRE(to_dense(a * b) == testing::dense_mul(to_dense(a), to_dense(b), p));
    }
    for (int trial = 0; trial < 100; ++trial) {
      const auto a = testing::random_algebra(p, m, rng, 1, 0.5);
      REQUIRE(power_by_mul(a, m).is_zero());
      REQUIRE(max_path_length(a) <= m - 1);
      REQUIRE(power_via_paths(a, max_path_length(a) + 1).is_zero());
      for (int length = 1; length <= m; ++length) REQUIRE(power_via_paths(a, length) == power_by_mul(a, length));
    }
    AlgebraElement chain(p, m);
    for (int i = 0; i + 1 < m; ++i) chain.set(i, i + 1, 1);
    CHECK(max_path_length(chain) == m - 1);
  }
}
