#include "oracles.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace spexlab::testing {

namespace {

// Subdivide edge (u, v): remove it and route it through a fresh vertex.
Graph subdivide_edge(const Graph& g, int u, int v) {
  Graph out(g.order() + 1);
  for (auto [a, b] : g.edges()) out.add_edge(a, b);
  out.remove_edge(u, v);
  out.add_edge(u, g.order());
  out.add_edge(v, g.order());
  return out;
}

// All subdivisions of base with at most extra added vertices (with
// duplicates up to isomorphism; harmless for an existence check).
std::vector<Graph> subdivisions_upto(const Graph& base, int extra) {
  std::vector<Graph> out{base};
  size_t frontier_begin = 0;
  for (int round = 0; round < extra; ++round) {
    size_t frontier_end = out.size();
    for (size_t i = frontier_begin; i < frontier_end; ++i)
      for (auto [u, v] : out[i].edges()) out.push_back(subdivide_edge(out[i], u, v));
    frontier_begin = frontier_end;
  }
  return out;
}

// Does g contain pattern as a subgraph? Backtracking injection of pattern
// vertices into g, checking edges to already-placed vertices.
bool contains_subgraph(const Graph& g, const Graph& pattern) {
  const int p = pattern.order();
  if (p > g.order() || pattern.edge_count() > g.edge_count()) return false;
  // place high-degree pattern vertices first
  std::vector<int> order(p);
  for (int i = 0; i < p; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
  std::vector<int> image(p, -1);
  std::vector<char> used(g.order(), 0);
  auto place = [&](auto&& self, int k) -> bool {
    if (k == p) return true;
    int pv = order[k];
    for (int gv = 0; gv < g.order(); ++gv) {
      if (used[gv] || g.degree(gv) < pattern.degree(pv)) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j)
        if (pattern.has_edge(pv, order[j]) && !g.has_edge(gv, image[order[j]])) ok = false;
      if (!ok) continue;
      image[pv] = gv;
      used[gv] = 1;
      if (self(self, k + 1)) return true;
      used[gv] = 0;
      image[pv] = -1;
    }
    return false;
  };
  return place(place, 0);
}

}  // namespace

bool is_planar_oracle(const Graph& g) {
  if (g.order() > 7) throw std::invalid_argument("planarity oracle capped at n <= 7");
  if (g.edge_count() < 9) return true;  // K3,3 needs 9 edges, K5 needs 10
  for (const Graph& pat : subdivisions_upto(complete_graph(5), g.order() - 5))
    if (pat.order() <= g.order() && contains_subgraph(g, pat)) return false;
  for (const Graph& pat : subdivisions_upto(complete_bipartite(3, 3), g.order() - 6))
    if (pat.order() <= g.order() && contains_subgraph(g, pat)) return false;
  return true;
}

unsigned long long walk_total_oracle(const Graph& g, int ell) {
  const int n = g.order();
  std::vector<unsigned long long> w(n, 1), next(n);
  for (int step = 0; step < ell; ++step) {
    for (int u = 0; u < n; ++u) {
      next[u] = 0;
      for (int v : g.neighbors(u)) next[u] += w[v];
    }
    w.swap(next);
  }
  unsigned long long total = 0;
  for (auto c : w) total += c;
  return total;
}

unsigned long long walk_crossing_oracle(const Graph& g, int u, int v, int ell) {
  const int n = g.order();
  // dp[vertex][seen u][seen v] = walks of the current length ending here
  std::vector<unsigned long long> dp(static_cast<size_t>(n) * 4, 0);
  auto at = [n](std::vector<unsigned long long>& d, int w, int su, int sv)
      -> unsigned long long& { return d[(static_cast<size_t>(w) * 2 + su) * 2 + sv]; };
  for (int w = 0; w < n; ++w) at(dp, w, w == u, w == v) = 1;
  std::vector<unsigned long long> next(dp.size());
  for (int step = 0; step < ell; ++step) {
    std::fill(next.begin(), next.end(), 0);
    for (int w = 0; w < n; ++w)
      for (int su = 0; su < 2; ++su)
        for (int sv = 0; sv < 2; ++sv) {
          unsigned long long c = at(dp, w, su, sv);
          if (!c) continue;
          for (int x : g.neighbors(w))
            at(next, x, su || x == u, sv || x == v) += c;
        }
    dp.swap(next);
  }
  unsigned long long total = 0;
  for (int w = 0; w < n; ++w) total += at(dp, w, 1, 1);
  return total;
}

double rho_dense_oracle(const Graph& g) {
  Eigen::MatrixXd a = g.adjacency_matrix<double>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(g.order() - 1);
}

}  // namespace spexlab::testing
