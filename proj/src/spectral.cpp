#include "spexlab/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <set>

namespace spexlab {

namespace {

struct ComponentSolve {
  double rho = 0;
  Eigen::VectorXd vec;
  double residual = 0;
  int iterations = 0;
  bool fallback = false;
};

double residual_inf(const Eigen::MatrixXd& a, const Eigen::VectorXd& v, double rho) {
  return (a * v - rho * v).lpNorm<Eigen::Infinity>();
}

// Power iteration on A + I (the shift breaks the +-rho oscillation of
// bipartite components). All-ones start, fixed schedule.
ComponentSolve solve_component(const Eigen::MatrixXd& a, double tol) {
  const Eigen::Index n = a.rows();
  ComponentSolve out;
  if (n == 1) {
    out.rho = 0;
    out.vec = Eigen::VectorXd::Ones(1);
    return out;
  }
  Eigen::VectorXd v = Eigen::VectorXd::Ones(n) / std::sqrt(double(n));
  double rho = 0;
  constexpr int kMaxIterations = 20000;
  int k = 0;
  for (; k < kMaxIterations; ++k) {
    Eigen::VectorXd w = a * v + v;
    double norm = w.norm();
    if (norm == 0) break;  // edgeless component
    v = w / norm;
    rho = v.dot(a * v);
    if (k % 8 == 7 && residual_inf(a, v, rho) <= tol * std::max(1.0, rho)) break;
  }
  out.iterations = k;
  if (residual_inf(a, v, rho) > tol * std::max(1.0, rho)) {
    // slow gap; dense solve, then keep the better residual
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
    double lambda = es.eigenvalues()(n - 1);
    Eigen::VectorXd u = es.eigenvectors().col(n - 1);
    if (u.sum() < 0) u = -u;  // Perron direction of a connected component
    u = u.cwiseAbs();        // scrub tiny negative round-off
    u.normalize();
    double lrho = u.dot(a * u);
    if (residual_inf(a, u, lrho) < residual_inf(a, v, rho)) {
      v = u;
      rho = lrho;
      (void)lambda;
      out.fallback = true;
    }
  }
  out.rho = rho;
  out.vec = v;
  out.residual = residual_inf(a, v, rho);
  return out;
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, double tol) {
  if (g.order() == 0) throw std::invalid_argument("spectral radius of the empty graph");
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  auto comps = connected_components(g);
  ComponentSolve best;
  best.rho = -1;
  const std::vector<int>* best_comp = nullptr;
  bool any_fallback = false;
  for (const auto& comp : comps) {
    Eigen::MatrixXd a = induced_subgraph(g, comp).adjacency_matrix<double>();
    ComponentSolve s = solve_component(a, tol);
    any_fallback |= s.fallback;
    if (s.rho > best.rho) {
      best = s;
      best_comp = &comp;
    }
  }
  SpectralResult out;
  out.rho = best.rho;
  out.perron = Eigen::VectorXd::Zero(g.order());
  for (size_t i = 0; i < best_comp->size(); ++i) out.perron((*best_comp)[i]) = best.vec(i);
  double max_entry = out.perron.maxCoeff();
  if (max_entry > 0) out.perron /= max_entry;
  Eigen::MatrixXd a = g.adjacency_matrix<double>();
  out.residual = residual_inf(a, out.perron, out.rho);
  out.iterations = best.iterations;
  out.method = any_fallback ? "power+eigh" : "power";
  return out;
}

ComparisonVerdict compare_rho(const Graph& g1, const Graph& g2, double tol) {
  if (g1.order() == 0 || g2.order() == 0)
    throw std::invalid_argument("comparison needs non-empty graphs");
  ComparisonVerdict v;
  double t = tol;
  for (int attempt = 0; attempt < 2; ++attempt) {
    SpectralResult r1 = spectral_radius(g1, t);
    SpectralResult r2 = spectral_radius(g2, t);
    v.rho1 = r1.rho;
    v.rho2 = r2.rho;
    v.margin = r1.rho - r2.rho;
    v.tol_used = t;
    if (std::abs(v.margin) > 10 * t) {
      v.ordering = v.margin > 0 ? ComparisonVerdict::Ordering::GREATER
                                : ComparisonVerdict::Ordering::LESS;
      return v;
    }
    t /= 100;
  }
  v.ordering = std::abs(v.margin) <= v.tol_used
                   ? ComparisonVerdict::Ordering::EQUAL_WITHIN_TOL
                   : ComparisonVerdict::Ordering::INCONCLUSIVE;
  return v;
}

double rewire_gain(const Graph& g,
                   const std::vector<std::pair<int, int>>& removed,
                   const std::vector<std::pair<int, int>>& added,
                   const Eigen::VectorXd& x) {
  if (x.size() != g.order()) throw std::invalid_argument("vector dimension mismatch");
  auto canon = [&](std::pair<int, int> e) {
    auto [u, v] = e;
    if (u < 0 || u >= g.order() || v < 0 || v >= g.order())
      throw std::invalid_argument("edit touches a non-existent vertex");
    if (u == v) throw std::invalid_argument("edit would create a self-loop");
    return std::make_pair(std::min(u, v), std::max(u, v));
  };
  std::set<std::pair<int, int>> rem, add;
  for (auto e : removed) {
    auto c = canon(e);
    if (!g.has_edge(c.first, c.second))
      throw std::invalid_argument("removed edge is not present");
    if (!rem.insert(c).second) throw std::invalid_argument("duplicate removed edge");
  }
  for (auto e : added) {
    auto c = canon(e);
    if (g.has_edge(c.first, c.second) && !rem.count(c))
      throw std::invalid_argument("added edge already present");
    if (!add.insert(c).second) throw std::invalid_argument("duplicate added edge");
  }
  double num = 0;
  for (auto [u, v] : add) num += x(u) * x(v);
  for (auto [u, v] : rem) num -= x(u) * x(v);
  double denom = x.squaredNorm();
  if (denom == 0) throw std::invalid_argument("zero vector");
  return 2.0 * num / denom;
}

}  // namespace spexlab
