#ifndef SPEXLAB_SPEX_SEARCH_HPP
#define SPEXLAB_SPEX_SEARCH_HPP

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "spexlab/graph.hpp"

namespace spexlab {

/// Outcome of a maximum-spectral-radius search over a C_ell-free planar family.
struct SpexReport {
  enum class Family { RESTRICTED, BRUTE_FORCE, GRAPH6_STREAM };
  int n = 0;
  int ell = 0;
  Family family = Family::RESTRICTED;
  bool no_candidate = false;
  std::string winner_graph6;
  std::optional<PathPartition> winner_partition;  // restricted family only
  double rho = 0;
  double runner_up_gap = 0;  // rho(winner) - best distinct rho below it
  std::vector<std::string> ties;  // graph6 of candidates within 1e-9 of the max
  long candidates_examined = 0;
  size_t malformed_records = 0;  // stream source only
  size_t oversize_skipped = 0;   // stream records beyond the cycle-search scope (n > 16)
  bool winner_planar = false;    // post-hoc re-verification
  bool winner_cl_free = false;
  double rho_reverified = 0;     // independent re-solve of the decoded winner
  double wall_ms = 0;
};

/// Search K_2 v (linear forest) candidates: all partitions of n-2 with
/// n1 + n2 <= ell - 3, one eigensolve each.
SpexReport restricted_spex(int n, int ell, int jobs = 1);

/// Exhaustive search over labeled graphs of order n (n <= 8), pruned to
/// non-increasing degree sequences (isomorphism-safe for an argmax).
SpexReport brute_force_spex(int n, int ell, int jobs = 1);

/// Same filter-and-maximize over a newline-delimited graph6 stream.
SpexReport stream_spex(std::istream& in, int n, int ell);

/// restricted_spex compared against the closed-form extremal construction.
struct TheoremCheckReport {
  SpexReport search;
  PathPartition extremal;
  std::string extremal_graph6;
  double extremal_rho = 0;
  bool match = false;  // partition multisets equal
};

TheoremCheckReport theorem_check(int n, int ell, int jobs = 1);

/// All partitions of m into positive parts, each sorted non-increasing;
/// deterministic enumeration order.
std::vector<PathPartition> enumerate_partitions(int m);

}  // namespace spexlab

#endif  // SPEXLAB_SPEX_SEARCH_HPP
