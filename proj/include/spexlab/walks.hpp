#ifndef SPEXLAB_WALKS_HPP
#define SPEXLAB_WALKS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

#include "spexlab/graph.hpp"

namespace spexlab {

using BigInt = boost::multiprecision::cpp_int;

/// Number of walks of length ell (ordered vertex sequences v0..v_ell with
/// consecutive vertices adjacent), exact.
BigInt walk_count_total(const Graph& g, int ell);

/// Walks of length 1..max_ell, exact, one iterated vector-matrix product.
std::vector<BigInt> walk_counts_upto(const Graph& g, int max_ell);

/// Walks of length ell starting at u, exact.
BigInt walk_count_from(const Graph& g, int u, int ell);

/// Walks of length ell that visit both u and v somewhere in their sequence.
/// Inclusion-exclusion over vertex-deleted subgraphs:
///   W(G) - W(G-u) - W(G-v) + W(G-u-v).
BigInt walk_count_crossing(const Graph& g, int u, int v, int ell);

/// Crossing counts for lengths 1..max_ell in one pass.
std::vector<BigInt> walk_counts_crossing_upto(const Graph& g, int u, int v, int max_ell);

/// Truncated evaluation of sum_{k>=1} W^k(G) / x^k.
struct SeriesEval {
  double x = 0;
  int truncation = 0;       // number of terms summed
  double partial_sum = 0;
  double tail_bound = 0;    // certified only when `certified`
  bool converged = false;
  bool certified = false;   // geometric domination W^k <= n * maxdeg^k applied
};

/// Evaluate the walk series at x to within tol. Certified when x exceeds the
/// maximum degree; for rho(G) < x <= maxdeg the tail is estimated by an
/// empirical ratio test and the result is flagged non-certified.
SeriesEval walk_series(const Graph& g, double x, double tol);

/// Explicit list of all walks of length ell, as vertex sequences.
/// Brute-force oracle; refuses ell > 8 or n > 8.
std::vector<std::vector<int>> enumerate_walks_oracle(const Graph& g, int ell);

}  // namespace spexlab

#endif  // SPEXLAB_WALKS_HPP
