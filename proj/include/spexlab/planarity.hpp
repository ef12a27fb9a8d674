#ifndef SPEXLAB_PLANARITY_HPP
#define SPEXLAB_PLANARITY_HPP

#include <utility>
#include <vector>

#include "spexlab/graph.hpp"

namespace spexlab {

/// Left-right planarity criterion. Graphs with e > 3n-6 (n >= 3) are
/// rejected without running the DFS phases.
bool is_planar(const Graph& g);

/// A Kuratowski subgraph: a subdivision of K_5 or K_{3,3}.
struct KuratowskiWitness {
  enum class Kind { K5, K33 };
  Kind kind;
  std::vector<std::pair<int, int>> edges;  // edges of the subdivision in g
};

/// Extract a Kuratowski subgraph of a non-planar g by edge-minimal
/// reduction (delete edges while non-planarity persists). Quadratic in the
/// number of planarity calls; intended for desk-scale witnesses.
/// Throws if g is planar.
KuratowskiWitness kuratowski_witness(const Graph& g);

}  // namespace spexlab

#endif  // SPEXLAB_PLANARITY_HPP
