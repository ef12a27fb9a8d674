#ifndef SPEXLAB_TESTS_ORACLES_HPP
#define SPEXLAB_TESTS_ORACLES_HPP

#include "spexlab/graph.hpp"

namespace spexlab::testing {

/// Independent planarity oracle for small graphs (n <= 7): searches for a
/// Kuratowski subdivision (K5 or K3,3 with subdivided edges) as a subgraph
/// by explicit backtracking. Slow but obviously correct at this scale.
bool is_planar_oracle(const Graph& g);

/// Walk counts by direct dynamic programming, independent of the library's
/// vector-iteration path. Fits in 64 bits at oracle scale.
unsigned long long walk_total_oracle(const Graph& g, int ell);

/// Walks of length ell visiting both u and v, by DP over
/// (current vertex, seen-u, seen-v) states. No inclusion-exclusion.
unsigned long long walk_crossing_oracle(const Graph& g, int u, int v, int ell);

/// Spectral radius straight from a dense symmetric eigensolve of the whole
/// adjacency matrix.
double rho_dense_oracle(const Graph& g);

}  // namespace spexlab::testing

#endif  // SPEXLAB_TESTS_ORACLES_HPP
