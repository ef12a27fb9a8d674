#ifndef SPEXLAB_CYCLES_HPP
#define SPEXLAB_CYCLES_HPP

#include "spexlab/graph.hpp"

namespace spexlab {

/// True iff g contains a simple cycle on exactly ell vertices. Depth-first
/// simple-path extension with distance-to-start pruning; meant for n <= 16.
bool has_cycle_of_length(const Graph& g, int ell);

/// C_ell-freeness of K_2 v (linear forest realizing pp) by the closed-form
/// criterion n1 + n2 <= ell - 3 (parts padded with zeros as needed).
bool forest_join_cl_free(const PathPartition& pp, int ell);

}  // namespace spexlab

#endif  // SPEXLAB_CYCLES_HPP
