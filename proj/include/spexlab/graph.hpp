#ifndef SPEXLAB_GRAPH_HPP
#define SPEXLAB_GRAPH_HPP

#include <Eigen/Dense>

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace spexlab {

/// Undirected simple graph on vertices 0..n-1 with a dense symmetric
/// adjacency. Immutable by convention once built (the constructors below
/// and the build_* free functions are the intended way to obtain one).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n) * n, 0), labels_(n) {}

  int order() const { return n_; }
  long edge_count() const { return edges_; }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return u != v && adj_[static_cast<size_t>(u) * n_ + v] != 0;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (adj_[static_cast<size_t>(u) * n_ + v]) return;
    adj_[static_cast<size_t>(u) * n_ + v] = 1;
    adj_[static_cast<size_t>(v) * n_ + u] = 1;
    ++edges_;
  }

  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v || !adj_[static_cast<size_t>(u) * n_ + v]) return;
    adj_[static_cast<size_t>(u) * n_ + v] = 0;
    adj_[static_cast<size_t>(v) * n_ + u] = 0;
    --edges_;
  }

  int degree(int u) const {
    check_vertex(u);
    int d = 0;
    for (int v = 0; v < n_; ++v) d += adj_[static_cast<size_t>(u) * n_ + v];
    return d;
  }

  int max_degree() const {
    int d = 0;
    for (int u = 0; u < n_; ++u) d = std::max(d, degree(u));
    return d;
  }

  std::vector<int> neighbors(int u) const {
    check_vertex(u);
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
      if (adj_[static_cast<size_t>(u) * n_ + v]) out.push_back(v);
    return out;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (adj_[static_cast<size_t>(u) * n_ + v]) out.emplace_back(u, v);
    return out;
  }

  const std::string& label(int u) const {
    check_vertex(u);
    return labels_[u];
  }
  void set_label(int u, std::string s) {
    check_vertex(u);
    labels_[u] = std::move(s);
  }

  /// Dense adjacency matrix with the requested scalar type.
  template <typename Scalar>
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> adjacency_matrix() const {
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a(n_, n_);
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v)
        a(u, v) = Scalar(adj_[static_cast<size_t>(u) * n_ + v]);
    return a;
  }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
  }

 private:
  void check_vertex(int u) const {
    if (u < 0 || u >= n_) throw std::out_of_range("vertex id out of range");
  }

  int n_ = 0;
  long edges_ = 0;
  std::vector<unsigned char> adj_;
  std::vector<std::string> labels_;
};

// -- constructions ----------------------------------------------------------

/// Path on k vertices (P_0 is the empty graph).
Graph build_path(int k);

/// Edgeless graph on k vertices.
Graph empty_graph(int k);

/// Complete graph on k vertices.
Graph complete_graph(int k);

/// Cycle on k >= 3 vertices.
Graph cycle_graph(int k);

/// Complete bipartite graph K_{s,t}.
Graph complete_bipartite(int s, int t);

/// Vertex-disjoint union; vertex labels are preserved per component.
Graph disjoint_union(std::span<const Graph> gs);
Graph disjoint_union(std::initializer_list<Graph> gs);

/// Join: disjoint union plus all edges between the two vertex sets.
/// Vertices of g1 come first.
Graph join(const Graph& g1, const Graph& g2);

/// Induced subgraph on the given vertices, in the given order.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

/// Induced subgraph obtained by deleting the listed vertices.
Graph remove_vertices(const Graph& g, std::span<const int> removed);

/// Relabel vertices: vertex i of the result is perm[i] of g.
Graph relabel(const Graph& g, std::span<const int> perm);

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// BFS distance between u and v, or -1 if disconnected.
int distance(const Graph& g, int u, int v);

// -- linear forests ---------------------------------------------------------

/// Sorted multiset of path orders n_1 >= n_2 >= ... >= n_t >= 0.
/// Zeros denote P_0 (the empty graph) and are legal parts.
struct PathPartition {
  std::vector<int> parts;

  PathPartition() = default;
  explicit PathPartition(std::vector<int> p);

  int order() const;
  /// Disjoint union of paths, parts laid out consecutively in order.
  Graph realize() const;

  bool operator==(const PathPartition& other) const {
    return normalized() == other.normalized();
  }
  /// Parts with zeros dropped (P_0 contributes nothing to the forest).
  std::vector<int> normalized() const;
};

// -- extremal families ------------------------------------------------------

/// Parameters of the candidate maximum-spectral-radius C_ell-free planar
/// family K_2 v (linear forest): two regimes split at ell = (2n+5)/3.
struct ExtremalParams {
  int n = 0;
  int ell = 0;
  enum class Case { I, II } which = Case::I;
  // Case I only: n - ell + 1 = a*floor((ell-3)/2) + b, 0 <= b < floor((ell-3)/2).
  long a = 0;
  long b = 0;

  static ExtremalParams compute(int n, int ell);
};

/// The forest part of the extremal construction (order n-2, n1+n2 = ell-3).
PathPartition extremal_partition(int n, int ell);

/// K_2 joined with the extremal linear forest; order exactly n.
Graph build_extremal(int n, int ell);

}  // namespace spexlab

#endif  // SPEXLAB_GRAPH_HPP
