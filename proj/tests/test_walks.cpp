#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "spexlab/walks.hpp"

using namespace spexlab;
using spexlab::testing::walk_crossing_oracle;
using spexlab::testing::walk_total_oracle;

TEST_CASE("hand-checked counts") {
  CHECK(walk_count_total(build_path(3), 2) == 6);
  CHECK(walk_count_total(disjoint_union({build_path(4), build_path(1)}), 2) == 10);
  CHECK(walk_count_crossing(build_path(3), 0, 2, 4) == 8);
  CHECK(walk_count_crossing(build_path(4), 0, 3, 3) == 2);
}

TEST_CASE("length-1 walks are twice the edges") {
  for (int n : {4, 7, 10}) {
    Graph g = complete_graph(n);
    CHECK(walk_count_total(g, 1) == 2 * g.edge_count());
  }
}

TEST_CASE("total equals sum over starting vertices") {
  Graph g = complete_bipartite(2, 3);
  for (int ell = 1; ell <= 6; ++ell) {
    BigInt total = 0;
    for (int u = 0; u < g.order(); ++u) total += walk_count_from(g, u, ell);
    CHECK(total == walk_count_total(g, ell));
  }
}

TEST_CASE("agreement with the enumeration oracle") {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 0);
  g.add_edge(0, 2);
  for (int ell = 1; ell <= 6; ++ell) {
    auto walks = enumerate_walks_oracle(g, ell);
    CHECK(walk_count_total(g, ell) == BigInt(walks.size()));
  }
}

TEST_CASE("agreement with the DP oracle on random graphs") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) g.add_edge(u, v);
    for (int ell = 1; ell <= 10; ++ell)
      CHECK(walk_count_total(g, ell) == BigInt(walk_total_oracle(g, ell)));
    if (n >= 2)
      for (int ell = 1; ell <= 10; ++ell)
        CHECK(walk_count_crossing(g, 0, n - 1, ell) ==
              BigInt(walk_crossing_oracle(g, 0, n - 1, ell)));
  }
}

TEST_CASE("crossing count vanishes below the distance") {
  Graph p8 = build_path(8);
  for (int ell = 1; ell < 7; ++ell)
    CHECK(walk_count_crossing(p8, 0, 7, ell) == 0);
  CHECK(walk_count_crossing(p8, 0, 7, 7) > 0);
}

TEST_CASE("counts grow without overflow") {
  Graph k10 = complete_graph(10);
  BigInt w = walk_count_total(k10, 60);
  // 10 * 9^60
  BigInt expected = 10;
  for (int i = 0; i < 60; ++i) expected *= 9;
  CHECK(w == expected);
}

TEST_CASE("certified series matches the geometric closed form") {
  // K2: W^k = 2 for every k, so the series is 2/(x-1)
  Graph k2 = complete_graph(2);
  SeriesEval s = walk_series(k2, 3.0, 1e-12);
  CHECK(s.converged);
  CHECK(s.certified);
  CHECK(s.partial_sum + s.tail_bound >= doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::abs(s.partial_sum - 1.0) <= 1e-10);
}

TEST_CASE("series tail bound is honest") {
  Graph p6 = build_path(6);
  SeriesEval coarse = walk_series(p6, 4.0, 1e-4);
  SeriesEval fine = walk_series(p6, 4.0, 1e-13);
  CHECK(coarse.converged);
  CHECK(fine.converged);
  CHECK(std::abs(coarse.partial_sum - fine.partial_sum) <= coarse.tail_bound);
}

TEST_CASE("heuristic regime flags itself") {
  // rho(K4) = 3 = maxdeg, so x = 3.5 > maxdeg is certified but x = 3.2 is too;
  // pick x below maxdeg yet above rho for an honest heuristic case: use C6,
  // rho = 2 = maxdeg, x = 2.5 certified; star K_{1,4} has rho = 2 < maxdeg = 4
  Graph star = join(complete_graph(1), empty_graph(4));
  SeriesEval s = walk_series(star, 3.0, 1e-9);
  CHECK(s.converged);
  CHECK_FALSE(s.certified);
  // reference: converged value from the certified regime does not exist here,
  // so compare against a much deeper truncation instead
  SeriesEval deep = walk_series(star, 3.0, 1e-13);
  CHECK(std::abs(s.partial_sum - deep.partial_sum) <= 1e-8);
}

TEST_CASE("series rejects bad arguments and diverges gracefully") {
  Graph k3 = complete_graph(3);
  CHECK_THROWS_AS(walk_series(k3, -1.0, 1e-6), std::invalid_argument);
  CHECK_THROWS_AS(walk_series(k3, 3.0, 0.0), std::invalid_argument);
  SeriesEval div = walk_series(k3, 1.5, 1e-6);  // x < rho = 2: diverges
  CHECK_FALSE(div.converged);
}

TEST_CASE("edgeless graphs have an empty series") {
  SeriesEval s = walk_series(empty_graph(4), 2.0, 1e-9);
  CHECK(s.converged);
  CHECK(s.partial_sum == 0.0);
}
