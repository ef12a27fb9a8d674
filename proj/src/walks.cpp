#include "spexlab/walks.hpp"

#include <cmath>

namespace spexlab {

namespace {

void check_length(int ell) {
  if (ell < 1) throw std::invalid_argument("walk length must be positive");
}

}  // namespace

std::vector<BigInt> walk_counts_upto(const Graph& g, int max_ell) {
  check_length(max_ell);
  const int n = g.order();
  std::vector<BigInt> counts;
  counts.reserve(max_ell);
  std::vector<BigInt> w(n, 1), next(n);
  for (int ell = 1; ell <= max_ell; ++ell) {
    for (int u = 0; u < n; ++u) {
      next[u] = 0;
      for (int v : g.neighbors(u)) next[u] += w[v];
    }
    w.swap(next);
    BigInt total = 0;
    for (const BigInt& c : w) total += c;
    counts.push_back(std::move(total));
  }
  return counts;
}

BigInt walk_count_total(const Graph& g, int ell) {
  check_length(ell);
  if (g.order() == 0) return 0;
  return walk_counts_upto(g, ell).back();
}

BigInt walk_count_from(const Graph& g, int u, int ell) {
  check_length(ell);
  if (u < 0 || u >= g.order()) throw std::out_of_range("vertex id out of range");
  const int n = g.order();
  std::vector<BigInt> w(n, 1), next(n);
  for (int step = 0; step < ell; ++step) {
    for (int a = 0; a < n; ++a) {
      next[a] = 0;
      for (int b : g.neighbors(a)) next[a] += w[b];
    }
    w.swap(next);
  }
  return w[u];
}

std::vector<BigInt> walk_counts_crossing_upto(const Graph& g, int u, int v, int max_ell) {
  check_length(max_ell);
  if (u == v) throw std::invalid_argument("crossing walk count needs distinct vertices");
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order())
    throw std::out_of_range("vertex id out of range");
  const int del_u[] = {u};
  const int del_v[] = {v};
  const int del_uv[] = {u, v};
  auto whole = walk_counts_upto(g, max_ell);
  auto no_u = walk_counts_upto(remove_vertices(g, del_u), max_ell);
  auto no_v = walk_counts_upto(remove_vertices(g, del_v), max_ell);
  auto no_uv = walk_counts_upto(remove_vertices(g, del_uv), max_ell);
  std::vector<BigInt> out(max_ell);
  for (int i = 0; i < max_ell; ++i) out[i] = whole[i] - no_u[i] - no_v[i] + no_uv[i];
  return out;
}

BigInt walk_count_crossing(const Graph& g, int u, int v, int ell) {
  return walk_counts_crossing_upto(g, u, v, ell).back();
}

SeriesEval walk_series(const Graph& g, double x, double tol) {
  if (x <= 0) throw std::invalid_argument("evaluation point must be positive");
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  const int n = g.order();
  SeriesEval out;
  out.x = x;
  const int maxdeg = g.max_degree();
  if (n == 0 || maxdeg == 0) {  // no walks at all
    out.converged = true;
    out.certified = true;
    return out;
  }
  Eigen::VectorXd y = Eigen::VectorXd::Ones(n);
  Eigen::MatrixXd a = g.adjacency_matrix<double>();
  if (x > maxdeg) {
    // W^k <= n * maxdeg^k gives a geometric tail
    const double q = maxdeg / x;
    double tail = n * q / (1.0 - q);
    int k = 0;
    while (tail > tol && k < 1000000) {
      y = (a * y) / x;
      out.partial_sum += y.sum();
      tail *= q;
      ++k;
    }
    out.truncation = k;
    out.tail_bound = tail;
    out.certified = true;
    out.converged = tail <= tol;
    return out;
  }
  // Heuristic regime: certify the tail by observed geometric decay.
  constexpr int kWindow = 16;
  double window_max_ratio = 0.0;
  double prev = 0.0;
  int since_window = 0;
  for (int k = 1; k <= 200000; ++k) {
    y = (a * y) / x;
    double term = y.sum();
    out.partial_sum += term;
    out.truncation = k;
    if (prev > 0.0) {
      double ratio = term / prev;
      window_max_ratio = std::max(window_max_ratio, ratio);
      if (++since_window == kWindow) {
        if (window_max_ratio < 1.0) {
          double tail = term * window_max_ratio / (1.0 - window_max_ratio);
          if (tail <= tol) {
            out.tail_bound = tail;
            out.converged = true;
            return out;
          }
        }
        window_max_ratio = 0.0;
        since_window = 0;
      }
      if (!std::isfinite(term)) break;  // diverging
    }
    prev = term;
  }
  out.converged = false;
  return out;
}

std::vector<std::vector<int>> enumerate_walks_oracle(const Graph& g, int ell) {
  check_length(ell);
  if (ell > 8 || g.order() > 8)
    throw std::invalid_argument("walk enumeration oracle capped at n <= 8, ell <= 8");
  std::vector<std::vector<int>> out;
  std::vector<int> walk;
  auto recurse = [&](auto&& self, int u, int remaining) -> void {
    walk.push_back(u);
    if (remaining == 0) {
      out.push_back(walk);
    } else {
      for (int v : g.neighbors(u)) self(self, v, remaining - 1);
    }
    walk.pop_back();
  };
  for (int u = 0; u < g.order(); ++u) recurse(recurse, u, ell);
  return out;
}

}  // namespace spexlab
