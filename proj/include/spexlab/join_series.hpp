#ifndef SPEXLAB_JOIN_SERIES_HPP
#define SPEXLAB_JOIN_SERIES_HPP

#include <vector>

#include "spexlab/graph.hpp"
#include "spexlab/walks.hpp"

namespace spexlab {

/// Complete r-partite graph with a graph H_s embedded into part s.
struct MultipartiteSpec {
  struct Part {
    int size = 0;     // n_s, number of vertices of the part
    Graph embedded;   // H_s, order at most size
  };
  std::vector<Part> parts;

  int total_order() const;
  /// K_{n_1,...,n_r} with the embedded edges; parts laid out consecutively,
  /// the vertices of H_s occupying the first |H_s| slots of part s.
  Graph realize() const;
  void validate() const;  // r >= 2, sizes >= 1, |H_s| <= n_s
};

/// One evaluation of f(x) = sum_s 1 / (1 + n_s/x + sum_i W^i(H_s)/x^{i+1}).
/// At x = rho(realization) this equals r - 1.
struct FixedPointEval {
  double x = 0;
  double value = 0;            // midpoint of the enclosing interval
  double half_width = 0;       // half width from the per-part truncation tails
  bool converged = false;
  std::vector<SeriesEval> part_series;
};

FixedPointEval f_eval(const MultipartiteSpec& spec, double x, double tol);

/// Solve f(x) = r - 1 for x by bisection over a certified bracket
/// [max_s max(maxdeg(H_s), rho(H_s)) + eps, n]. Throws if the bracket cannot
/// be established (series regime failure).
double solve_rho_by_series(const MultipartiteSpec& spec, double tol = 1e-10);

}  // namespace spexlab

#endif  // SPEXLAB_JOIN_SERIES_HPP
