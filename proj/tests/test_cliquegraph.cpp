#include <doctest.h>

#include <algorithm>
#include <random>

#include "seed.hpp"
#include "oracles.hpp"
#include "ringpoints/cliquegraph.hpp"
#include "ringpoints/errors.hpp"

using namespace ringpoints;

namespace {

IOptions plain(Strategy s, unsigned threads = 1) {
  IOptions o;
  o.strategy = s;
  o.cartesian = false;
  o.even_reduction = false;
  o.seed_constructions = false;
  o.solver.threads = threads;
  return o;
}

} // namespace

TEST_SUITE("cliquegraph") {

TEST_CASE("bit graph basics") {
  BitGraph g(70);
  g.add_edge(0, 69);
  g.add_edge(3, 64);
  CHECK(g.adjacent(69, 0));
  CHECK(g.adjacent(64, 3));
  CHECK(!g.adjacent(1, 2));
  CHECK(g.degree(0) == 1);
  CHECK(g.edge_count() == 2);
  CHECK(g.is_consistent());
  std::vector<std::uint32_t> pair{0, 69};
  CHECK(g.is_clique(pair));
}

TEST_CASE("trivial clique instances") {
  BitGraph k8(8);
  for (std::uint32_t i = 0; i < 8; ++i)
    for (std::uint32_t j = i + 1; j < 8; ++j)
      k8.add_edge(i, j);
  CHECK(max_clique(k8).size == 8);
  BitGraph empty5(5);
  CHECK(max_clique(empty5).size == 1);
  CHECK(max_clique(BitGraph(0)).size == 0);
}

TEST_CASE("max_clique matches naive enumeration on random graphs") {
  std::mt19937_64 rng(test_seed(2024));
  for (int trial = 0; trial < 50; ++trial) {
    std::uint32_t v = 5 + static_cast<std::uint32_t>(rng() % 36);
    double density = 0.2 + 0.7 * static_cast<double>(rng() % 1000) / 1000.0;
    std::bernoulli_distribution coin(density);
    std::vector<std::vector<bool>> adj(v, std::vector<bool>(v, false));
    BitGraph g(v);
    for (std::uint32_t i = 0; i < v; ++i)
      for (std::uint32_t j = i + 1; j < v; ++j)
        if (coin(rng)) {
          adj[i][j] = adj[j][i] = true;
          g.add_edge(i, j);
        }
    auto expected = oracle::NaiveClique(adj).solve();
    for (unsigned threads : {1u, 2u, 8u}) {
      SolverOptions opt;
      opt.threads = threads;
      auto r = max_clique(g, opt);
      CHECK(r.size == expected);
      CHECK(r.exact);
      CHECK(r.witness.size() == r.size);
      CHECK(g.is_clique(r.witness));
    }
  }
}

TEST_CASE("lower bound and seed semantics") {
  BitGraph g(6);
  for (std::uint32_t i = 0; i < 4; ++i)
    for (std::uint32_t j = i + 1; j < 4; ++j)
      g.add_edge(i, j);
  SolverOptions opt;
  opt.lower_bound = 4;
  auto r = max_clique(g, opt);
  CHECK(r.exact);
  CHECK(r.size == 0);
  opt.lower_bound = 3;
  CHECK(max_clique(g, opt).size == 4);
  SolverOptions seeded;
  seeded.seed = {0, 1, 2};
  CHECK(max_clique(g, seeded).size == 4);
}

TEST_CASE("graph builders") {
  auto k4 = build_full(2, 2);
  CHECK(k4.vertex_count() == 4);
  CHECK(k4.graph.edge_count() == 6);
  auto g3 = build_full(3, 2);
  CHECK(g3.vertex_count() == 9);
  CHECK(max_clique(g3.graph).size == 3);
  auto one = build_full(1, 3);
  CHECK(one.vertex_count() == 1);
  CHECK(one.graph.edge_count() == 0);

  CHECK(1 + max_clique(build_rooted(3, 2).graph).size == 3);
  for (int m = 1; m <= 5; ++m)
    CHECK(1 + max_clique(build_rooted(2, m).graph).size == (1u << m));
  CHECK(1 + max_clique(build_rooted(5, 2).graph).size == 5);
  CHECK(max_clique(build_rooted(8, 3).graph).size == 63);
  CHECK_THROWS_AS(build_full(10, 6, 1000), resource_limit);

  for (std::uint32_t n = 1; n <= 7; ++n) {
    auto g = build_full(n, 2);
    CHECK(g.graph.is_consistent());
    Space s(n, 2);
    for (std::uint32_t i = 0; i < g.vertex_count(); ++i)
      for (std::uint32_t j = i + 1; j < g.vertex_count(); ++j)
        CHECK(g.graph.adjacent(i, j) ==
              oracle::integral_set({s.decode(g.labels[i]), s.decode(g.labels[j])}, n));
  }
}

TEST_CASE("delta family agrees with the rooted graph") {
  for (std::uint32_t n = 3; n <= 8; ++n) {
    auto rooted = 1 + max_clique(build_rooted(n, 2).graph).size;
    std::uint32_t best = 2;
    for (const auto& g : build_delta_family(n, 2))
      best = std::max<std::uint32_t>(best, 2 + max_clique(g.graph).size);
    CHECK(best == rooted);
  }
  CHECK(I_of(4, 2, plain(Strategy::delta_family)).value == 8);
  auto order = delta_family_order(7, 2);
  CHECK(!order.empty());
  CHECK(std::find(order.begin(), order.end(), DeltaVec{0, 0}) == order.end());
}

TEST_CASE("variant equivalence for n <= 8, m <= 3") {
  for (std::uint32_t n = 1; n <= 8; ++n)
    for (int m = 1; m <= 3; ++m) {
      auto full = I_of(n, m, plain(Strategy::full));
      auto rooted = I_of(n, m, plain(Strategy::rooted));
      auto delta = I_of(n, m, plain(Strategy::delta_family));
      CHECK_MESSAGE(full.value == rooted.value, "n=" << n << " m=" << m);
      CHECK_MESSAGE(full.value == delta.value, "n=" << n << " m=" << m);
      auto dispatched = I_of(n, m);
      CHECK(dispatched.value == full.value);
      for (const auto* r : {&full, &rooted, &delta, &dispatched}) {
        CHECK(r->exact);
        CHECK(r->witness.size() == r->value);
        CHECK(oracle::distinct(r->witness));
        CHECK(oracle::integral_set(r->witness, n));
      }
    }
}

TEST_CASE("I_of closed forms and table values") {
  CHECK(I_of(9, 2).value == 27);
  CHECK(I_of(13, 3).value == 169);
  for (std::uint32_t n = 1; n <= 40; ++n)
    CHECK(I_of(n, 1).value == n);
  for (int m = 1; m <= 8; ++m) {
    CHECK(I_of(1, m).value == 1);
    CHECK(I_of(2, m).value == (1u << m));
  }
  CHECK_THROWS_AS(I_of(0, 2), invalid_input);
  CHECK_THROWS_AS(I_of(5, 0), invalid_input);
}

TEST_CASE("results are independent of the thread count") {
  for (auto [n, m] : {std::pair{5u, 3}, {7u, 3}, {9u, 2}, {3u, 4}, {8u, 2}, {11u, 2}})
    for (auto s : {Strategy::full, Strategy::rooted, Strategy::delta_family}) {
      auto one = I_of(n, m, plain(s, 1)).value;
      CHECK(I_of(n, m, plain(s, 2)).value == one);
      CHECK(I_of(n, m, plain(s, 8)).value == one);
    }
}

TEST_CASE("budget exhaustion is reported as a lower bound") {
  auto o = plain(Strategy::full);
  o.solver.budget = std::chrono::milliseconds(1);
  auto r = I_of(61, 2, o);
  CHECK(!r.exact);
  CHECK(r.value >= 1);
  CHECK(oracle::integral_set(r.witness, 61));
}

TEST_CASE("2^m divides I(2n, m)") {
  for (std::uint32_t n = 1; n <= 6; ++n)
    for (int m = 1; m <= 3; ++m) {
      auto v = I_of(2 * n, m).value;
      CHECK(v % (1u << m) == 0);
    }
}

} // TEST_SUITE
