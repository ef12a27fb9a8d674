#include "spexlab/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace spexlab {

Graph build_path(int k) {
  if (k < 0) throw std::invalid_argument("path order must be non-negative");
  Graph g(k);
  for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
  for (int i = 0; i < k; ++i) g.set_label(i, "path " + std::to_string(i + 1));
  return g;
}

Graph empty_graph(int k) {
  if (k < 0) throw std::invalid_argument("order must be non-negative");
  return Graph(k);
}

Graph complete_graph(int k) {
  Graph g(k);
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int k) {
  if (k < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = build_path(k);
  g.add_edge(k - 1, 0);
  return g;
}

Graph complete_bipartite(int s, int t) {
  Graph g(s + t);
  for (int u = 0; u < s; ++u)
    for (int v = 0; v < t; ++v) g.add_edge(u, s + v);
  return g;
}

Graph disjoint_union(std::span<const Graph> gs) {
  int n = 0;
  for (const Graph& g : gs) n += g.order();
  Graph out(n);
  int offset = 0;
  for (const Graph& g : gs) {
    for (auto [u, v] : g.edges()) out.add_edge(offset + u, offset + v);
    for (int u = 0; u < g.order(); ++u) out.set_label(offset + u, g.label(u));
    offset += g.order();
  }
  return out;
}

Graph disjoint_union(std::initializer_list<Graph> gs) {
  return disjoint_union(std::span<const Graph>(gs.begin(), gs.size()));
}

Graph join(const Graph& g1, const Graph& g2) {
  Graph out = disjoint_union({g1, g2});
  for (int u = 0; u < g1.order(); ++u)
    for (int v = 0; v < g2.order(); ++v) out.add_edge(u, g1.order() + v);
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  Graph out(static_cast<int>(vertices.size()));
  for (size_t i = 0; i < vertices.size(); ++i) {
    out.set_label(static_cast<int>(i), g.label(vertices[i]));
    for (size_t j = i + 1; j < vertices.size(); ++j)
      if (g.has_edge(vertices[i], vertices[j]))
        out.add_edge(static_cast<int>(i), static_cast<int>(j));
  }
  return out;
}

Graph remove_vertices(const Graph& g, std::span<const int> removed) {
  std::vector<bool> drop(g.order(), false);
  for (int u : removed) {
    if (u < 0 || u >= g.order()) throw std::out_of_range("vertex id out of range");
    drop[u] = true;
  }
  std::vector<int> keep;
  for (int u = 0; u < g.order(); ++u)
    if (!drop[u]) keep.push_back(u);
  return induced_subgraph(g, keep);
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order())
    throw std::invalid_argument("permutation size mismatch");
  return induced_subgraph(g, perm);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(g.order(), false);
  for (int s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::deque<int> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (int v : g.neighbors(u))
        if (!seen[v]) {
          seen[v] = true;
          queue.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) {
  return g.order() <= 1 || connected_components(g).size() == 1;
}

int distance(const Graph& g, int u, int v) {
  if (u == v) return 0;
  std::vector<int> dist(g.order(), -1);
  dist[u] = 0;
  std::deque<int> queue{u};
  while (!queue.empty()) {
    int w = queue.front();
    queue.pop_front();
    for (int x : g.neighbors(w))
      if (dist[x] < 0) {
        dist[x] = dist[w] + 1;
        if (x == v) return dist[x];
        queue.push_back(x);
      }
  }
  return -1;
}

PathPartition::PathPartition(std::vector<int> p) : parts(std::move(p)) {
  for (int k : parts)
    if (k < 0) throw std::invalid_argument("path orders must be non-negative");
  std::sort(parts.begin(), parts.end(), std::greater<int>());
}

int PathPartition::order() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

std::vector<int> PathPartition::normalized() const {
  std::vector<int> out;
  for (int k : parts)
    if (k > 0) out.push_back(k);
  return out;
}

Graph PathPartition::realize() const {
  std::vector<Graph> paths;
  int idx = 0;
  for (int k : parts) {
    Graph p = build_path(k);
    for (int i = 0; i < k; ++i)
      p.set_label(i, "path " + std::to_string(idx) + ", position " + std::to_string(i));
    paths.push_back(std::move(p));
    ++idx;
  }
  return disjoint_union(paths);
}

ExtremalParams ExtremalParams::compute(int n, int ell) {
  if (ell < 5) throw std::invalid_argument("forbidden cycle length must be at least 5");
  if (ell > n) throw std::invalid_argument("forbidden cycle length exceeds graph order");
  ExtremalParams p;
  p.n = n;
  p.ell = ell;
  if (3L * ell < 2L * n + 5) {
    p.which = Case::I;
    long half = (ell - 3) / 2;  // floor, >= 1 since ell >= 5
    long rem = n - ell + 1;
    p.a = rem / half;
    p.b = rem % half;
  } else {
    p.which = Case::II;
  }
  return p;
}

PathPartition extremal_partition(int n, int ell) {
  ExtremalParams p = ExtremalParams::compute(n, ell);
  std::vector<int> parts;
  if (p.which == ExtremalParams::Case::I) {
    int half = (ell - 3) / 2;
    parts.push_back((ell - 3) - half);  // ceil((ell-3)/2)
    for (long i = 0; i <= p.a; ++i) parts.push_back(half);
    parts.push_back(static_cast<int>(p.b));
  } else {
    parts.push_back(2 * ell - n - 4);
    parts.push_back(n - ell + 1);
    parts.push_back(n - ell + 1);
  }
  return PathPartition(std::move(parts));
}

Graph build_extremal(int n, int ell) {
  PathPartition pp = extremal_partition(n, ell);
  Graph hub = complete_graph(2);
  hub.set_label(0, "hub");
  hub.set_label(1, "hub");
  Graph g = join(hub, pp.realize());
  if (g.order() != n) throw std::logic_error("extremal construction order mismatch");
  return g;
}

}  // namespace spexlab
