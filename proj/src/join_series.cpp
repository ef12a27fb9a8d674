#include "spexlab/join_series.hpp"

#include <cmath>

namespace spexlab {

int MultipartiteSpec::total_order() const {
  int n = 0;
  for (const Part& p : parts) n += p.size;
  return n;
}

void MultipartiteSpec::validate() const {
  if (parts.size() < 2) throw std::invalid_argument("need at least 2 parts");
  for (const Part& p : parts) {
    if (p.size < 1) throw std::invalid_argument("part sizes must be positive");
    if (p.embedded.order() > p.size)
      throw std::invalid_argument("embedded graph does not fit in its part");
  }
}

Graph MultipartiteSpec::realize() const {
  validate();
  Graph g(total_order());
  std::vector<int> offsets;
  int off = 0;
  for (const Part& p : parts) {
    offsets.push_back(off);
    for (auto [u, v] : p.embedded.edges()) g.add_edge(off + u, off + v);
    off += p.size;
  }
  for (size_t s = 0; s < parts.size(); ++s)
    for (size_t t = s + 1; t < parts.size(); ++t)
      for (int u = 0; u < parts[s].size; ++u)
        for (int v = 0; v < parts[t].size; ++v)
          g.add_edge(offsets[s] + u, offsets[t] + v);
  return g;
}

FixedPointEval f_eval(const MultipartiteSpec& spec, double x, double tol) {
  spec.validate();
  if (x <= 0) throw std::invalid_argument("evaluation point must be positive");
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  const double r = static_cast<double>(spec.parts.size());
  FixedPointEval out;
  out.x = x;
  double lo_sum = 0, hi_sum = 0;
  for (const auto& part : spec.parts) {
    SeriesEval s;
    if (part.embedded.order() == 0 || part.embedded.edge_count() == 0) {
      s.x = x;
      s.converged = true;
      s.certified = true;
    } else {
      // tail/x <= tol/(10 r) keeps a uniform error budget across parts
      s = walk_series(part.embedded, x, x * tol / (10.0 * r));
      if (!s.converged)
        throw std::domain_error("walk series did not converge at x = " + std::to_string(x));
    }
    double denom_lo = 1.0 + part.size / x + s.partial_sum / x;
    double denom_hi = denom_lo + s.tail_bound / x;
    lo_sum += 1.0 / denom_hi;
    hi_sum += 1.0 / denom_lo;
    out.part_series.push_back(std::move(s));
  }
  out.value = 0.5 * (lo_sum + hi_sum);
  out.half_width = 0.5 * (hi_sum - lo_sum);
  out.converged = out.half_width < tol;
  return out;
}

double solve_rho_by_series(const MultipartiteSpec& spec, double tol) {
  spec.validate();
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  const double target = static_cast<double>(spec.parts.size()) - 1.0;
  int maxdeg = 0;
  for (const auto& part : spec.parts)
    if (part.embedded.order() > 0) maxdeg = std::max(maxdeg, part.embedded.max_degree());
  // Above maxdeg every part series is in the certified geometric regime.
  double lo = maxdeg + 0.25;
  double hi = std::max(lo + 1.0, static_cast<double>(spec.total_order()));
  const double ftol = std::min(1e-12, tol);
  if (f_eval(spec, lo, ftol).value >= target)
    throw std::domain_error("series bracket not established: f(lo) >= r-1");
  for (int expand = 0; f_eval(spec, hi, ftol).value < target; ++expand) {
    if (expand > 8) throw std::domain_error("series bracket not established at high end");
    hi *= 2;
  }
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    if (f_eval(spec, mid, ftol).value < target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace spexlab
