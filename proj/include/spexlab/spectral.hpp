#ifndef SPEXLAB_SPECTRAL_HPP
#define SPEXLAB_SPECTRAL_HPP

#include <Eigen/Dense>

#include <string>
#include <utility>
#include <vector>

#include "spexlab/graph.hpp"

namespace spexlab {

/// Dominant eigenvalue and Perron vector, max-entry normalized (max = 1).
struct SpectralResult {
  double rho = 0;
  Eigen::VectorXd perron;
  double residual = 0;  // inf-norm of A x - rho x
  int iterations = 0;
  std::string method;
};

/// Spectral radius of the adjacency matrix. Deterministic: all-ones start,
/// shifted power iteration (A + I) per connected component; falls back to a
/// dense symmetric eigensolve if the iteration stalls. Disconnected input
/// yields the max over components, Perron vector zero-extended.
SpectralResult spectral_radius(const Graph& g, double tol = 1e-12);

struct ComparisonVerdict {
  enum class Ordering { LESS, GREATER, EQUAL_WITHIN_TOL, INCONCLUSIVE };
  Ordering ordering = Ordering::INCONCLUSIVE;
  double margin = 0;  // rho(g1) - rho(g2) at the final tolerance
  double tol_used = 0;
  double rho1 = 0;
  double rho2 = 0;
};

/// Certified strict comparison of spectral radii. Orders only when the gap
/// exceeds 10x the solver tolerance; escalates once to tol/100 before
/// declaring INCONCLUSIVE.
ComparisonVerdict compare_rho(const Graph& g1, const Graph& g2, double tol = 1e-10);

/// Rayleigh-quotient gain of an edge rewiring:
///   x^T (A' - A) x / x^T x = 2 (sum_added x_u x_v - sum_removed x_u x_v) / |x|^2.
/// A lower bound on rho(G') - rho(G) when x is the Perron vector of G.
double rewire_gain(const Graph& g,
                   const std::vector<std::pair<int, int>>& removed,
                   const std::vector<std::pair<int, int>>& added,
                   const Eigen::VectorXd& x);

}  // namespace spexlab

#endif  // SPEXLAB_SPECTRAL_HPP
