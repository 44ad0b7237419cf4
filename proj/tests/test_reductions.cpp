#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "ringpoints/cliquegraph.hpp"
#include "ringpoints/errors.hpp"
#include "ringpoints/geometry.hpp"
#include "ringpoints/modring.hpp"
#include "ringpoints/reductions.hpp"

using namespace ringpoints;

namespace {

IOptions brute() {
  IOptions o;
  o.strategy = Strategy::full;
  o.cartesian = false;
  o.even_reduction = false;
  o.seed_constructions = false;
  return o;
}

bool spans_plane(const std::vector<Point>& pts, std::uint32_t n) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k)
        if (!is_collinear(pts[i], pts[j], pts[k], n))
          return true;
  return false;
}

} // namespace

TEST_SUITE("reductions") {

TEST_CASE("first construction") {
  auto c12 = lemma1_points(12);
  CHECK(c12.bound == 24);
  CHECK(c12.points.size() == 24);
  auto c9 = lemma1_points(9);
  CHECK(c9.bound == 27);
  CHECK(c9.points.size() == 27);
  auto c15 = lemma1_points(15);
  CHECK(c15.bound == 15);
  for (const auto& p : c15.points)
    CHECK(p[1] == 0);
  for (std::uint32_t n = 1; n <= 60; ++n) {
    auto c = lemma1_points(n);
    CHECK(c.points.size() == c.bound);
    CHECK(c.bound == lemma1_bound(n));
    CHECK(oracle::distinct(c.points));
    CHECK_MESSAGE(oracle::integral_set(c.points, n), "n=" << n);
  }
}

TEST_CASE("second construction") {
  CHECK(lemma2_points(2).bound == 4);
  CHECK(lemma2_points(6).bound == 12);
  CHECK(lemma2_points(18).bound == 108);
  CHECK_THROWS_AS(lemma2_points(7), not_applicable);
  CHECK_THROWS_AS(lemma2_points(8), not_applicable);
  CHECK(!lemma2_bound(12));
  for (std::uint32_t n = 2; n <= 62; n += 4) {
    auto c = lemma2_points(n);
    CHECK(c.points.size() == c.bound);
    CHECK(lemma2_bound(n) == c.bound);
    CHECK(oracle::distinct(c.points));
    CHECK_MESSAGE(oracle::integral_set(c.points, n), "n=" << n);
  }
}

TEST_CASE("conjectured value is the larger bound") {
  for (std::uint32_t n = 1; n <= 100; ++n) {
    auto expect = std::max(lemma1_bound(n), lemma2_bound(n).value_or(0));
    CHECK(conjectured_I2(n) == expect);
  }
  CHECK(conjectured_I2(2) == 4);
  CHECK(conjectured_I2(9) == 27);
  CHECK(conjectured_I2(13) == 13);
}

TEST_CASE("cartesian composition") {
  auto a = lemma1_points(4);
  auto b = lemma1_points(9);
  auto c = cartesian_compose(a.points, 4, b.points, 9);
  CHECK(c.size() == a.points.size() * b.points.size());
  CHECK(oracle::distinct(c));
  CHECK(oracle::integral_set(c, 36));
  auto d = lemma1_points(6);
  CHECK_THROWS_AS(cartesian_compose(a.points, 4, d.points, 6), invalid_input);
}

TEST_CASE("I(ab, 2) = I(a, 2) I(b, 2) for coprime a, b") {
  for (std::uint32_t a = 2; a <= 20; ++a)
    for (std::uint32_t b = a + 1; a * b <= 40; ++b) {
      if (std::gcd(a, b) != 1)
        continue;
      auto ab = I_of(a * b, 2, brute()).value;
      CHECK_MESSAGE(ab == I_of(a, 2).value * I_of(b, 2).value, "a=" << a << " b=" << b);
    }
}

TEST_CASE("even weight") {
  CHECK(even_weight(Point{1}, Point{3}, 8) == 4);
  CHECK(even_weight(Point{0, 0}, Point{3, 1}, 8) == 2);
  CHECK(even_weight(Point{3, 3}, Point{0, 0}, 8) == 2);
  CHECK(even_weight(Point{2}, Point{0}, 6) == 4);
}

TEST_CASE("even reduction matches direct search") {
  for (std::uint32_t two_n : {4u, 6u, 8u, 10u, 12u})
    for (int m = 1; m <= 2; ++m) {
      auto g = even_reduction_graph(two_n, m);
      auto h = max_clique(g.graph).size;
      auto direct = I_of(two_n, m, brute()).value;
      CHECK_MESSAGE(direct == (h << m), "2n=" << two_n << " m=" << m);
      if (two_n % 4 == 0)
        CHECK(1 + max_clique(even_reduction_graph(two_n, m, true).graph).size == h);
    }
  for (int m = 1; m <= 3; ++m) {
    auto reduced = I_of(4, m).value;
    CHECK(reduced == I_of(4, m, brute()).value);
  }
  auto lifted = even_lift(std::vector<Point>{Point{1, 0}}, 4);
  CHECK(lifted.size() == 4);
  CHECK(oracle::distinct(lifted));
}

TEST_CASE("I(4, m) sequence") {
  std::vector<std::uint64_t> values;
  for (int m = 1; m <= 6; ++m)
    values.push_back(I_of(4, m).value);
  CHECK(values == std::vector<std::uint64_t>{4, 8, 16, 32, 128, 256});
}

TEST_CASE("Hamming graph for n = 3") {
  for (int m = 1; m <= 4; ++m) {
    auto g = hamming_graph_I3(m);
    auto full = build_full(3, m);
    CHECK(g.vertex_count() == full.vertex_count());
    for (std::uint32_t i = 0; i < g.vertex_count(); ++i)
      for (std::uint32_t j = i + 1; j < g.vertex_count(); ++j)
        CHECK(g.graph.adjacent(i, j) == full.graph.adjacent(i, j));
  }
  CHECK(max_clique(hamming_graph_I3(2).graph).size == 3);
  CHECK(max_clique(hamming_graph_I3(4).graph).size == 9);
  CHECK(1 + max_clique(hamming_graph_I3(6, true).graph).size == 33);
  CHECK(hamming_distance(Point{0, 1, 2}, Point{0, 2, 2}) == 1);
}

TEST_CASE("semi-general construction for p = 1 (mod 4)") {
  for (std::uint32_t p : {5u, 13u, 17u, 29u}) {
    auto s = ilig_set(p);
    CHECK(s.size() == p);
    CHECK(oracle::distinct(s));
    CHECK(oracle::integral_set(s, p));
    CHECK(spans_plane(s, p));
  }
  CHECK_THROWS_AS(ilig_set(7), not_applicable);
}

TEST_CASE("semi-general upper bound") {
  CHECK(semi_general_upper(7) == 8);
  CHECK(semi_general_upper(9) == 11);
  CHECK(semi_general_upper(4) == 6);
  CHECK_THROWS_AS(semi_general_upper(1), invalid_input);
  for (std::uint32_t n = 2; n <= 60; ++n) {
    CHECK(semi_general_upper(n) <= 2 * n);
    CHECK(semi_general_bounds(n).consistent());
    CHECK(integral_bounds(n).consistent());
  }
}

TEST_CASE("conjecture holds for n <= 30") {
  auto report = verify_conjecture(30);
  CHECK(report.entries.size() == 30);
  CHECK(report.counterexamples().empty());
  CHECK(report.unverified().empty());
  CHECK(report.all_tight());
}

} // TEST_SUITE
