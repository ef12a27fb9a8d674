#include "spexlab/cycles.hpp"

#include <deque>

namespace spexlab {

namespace {

// Extend a simple path start..u of `len` edges; report a cycle when the path
// has ell-1 edges and closes back to start. Only vertices >= start may be
// used, so each cycle is searched from its minimum vertex exactly once.
bool extend(const Graph& g, int start, int u, int len, int ell,
            std::vector<bool>& used, const std::vector<int>& dist_to_start) {
  if (len == ell - 1) return g.has_edge(u, start);
  for (int v : g.neighbors(u)) {
    if (v < start || used[v]) continue;
    // must still be able to return to start within the remaining edges
    if (dist_to_start[v] < 0 || dist_to_start[v] > ell - len - 1) continue;
    used[v] = true;
    if (extend(g, start, v, len + 1, ell, used, dist_to_start)) {
      used[v] = false;
      return true;
    }
    used[v] = false;
  }
  return false;
}

std::vector<int> bfs_distances(const Graph& g, int s, int min_vertex) {
  std::vector<int> dist(g.order(), -1);
  dist[s] = 0;
  std::deque<int> queue{s};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : g.neighbors(u))
      if (v >= min_vertex && dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

}  // namespace

bool has_cycle_of_length(const Graph& g, int ell) {
  if (ell < 3) throw std::invalid_argument("cycle length must be at least 3");
  if (ell > g.order()) return false;
  std::vector<bool> used(g.order(), false);
  for (int start = 0; start < g.order(); ++start) {
    auto dist = bfs_distances(g, start, start);
    used[start] = true;
    if (extend(g, start, start, 0, ell, used, dist)) return true;
    used[start] = false;
  }
  return false;
}

bool forest_join_cl_free(const PathPartition& pp, int ell) {
  if (ell < 5) throw std::invalid_argument("forbidden cycle length must be at least 5");
  int n1 = pp.parts.size() > 0 ? pp.parts[0] : 0;
  int n2 = pp.parts.size() > 1 ? pp.parts[1] : 0;
  return n1 + n2 <= ell - 3;
}

}  // namespace spexlab
