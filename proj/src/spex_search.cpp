#include "spexlab/spex_search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "spexlab/cycles.hpp"
#include "spexlab/graph6.hpp"
#include "spexlab/parallel.hpp"
#include "spexlab/planarity.hpp"
#include "spexlab/spectral.hpp"

namespace spexlab {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

constexpr double kTieTol = 1e-9;

struct Candidate {
  double rho = 0;
  std::string graph6;
  std::optional<PathPartition> partition;
};

// Deterministic reduce: max by (rho, then lexicographically smaller graph6
// among rho-ties); also collects ties and the runner-up gap.
void finalize(SpexReport& rep, std::vector<Candidate>& cands) {
  if (cands.empty()) {
    rep.no_candidate = true;
    return;
  }
  size_t best = 0;
  for (size_t i = 1; i < cands.size(); ++i) {
    if (cands[i].rho > cands[best].rho + kTieTol ||
        (std::abs(cands[i].rho - cands[best].rho) <= kTieTol &&
         cands[i].graph6 < cands[best].graph6))
      best = i;
  }
  rep.rho = cands[best].rho;
  rep.winner_graph6 = cands[best].graph6;
  rep.winner_partition = cands[best].partition;
  double runner_up = -std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < cands.size(); ++i) {
    if (i == best) continue;
    if (std::abs(cands[i].rho - rep.rho) <= kTieTol) {
      if (cands[i].graph6 != rep.winner_graph6) rep.ties.push_back(cands[i].graph6);
    } else {
      runner_up = std::max(runner_up, cands[i].rho);
    }
  }
  std::sort(rep.ties.begin(), rep.ties.end());
  rep.ties.erase(std::unique(rep.ties.begin(), rep.ties.end()), rep.ties.end());
  rep.runner_up_gap = std::isfinite(runner_up) ? rep.rho - runner_up : 0.0;
  // post-hoc re-verification through independent predicates
  Graph winner = decode_graph6(rep.winner_graph6);
  rep.winner_planar = is_planar(winner);
  rep.winner_cl_free = winner.order() <= 16 ? !has_cycle_of_length(winner, rep.ell)
                                            : rep.winner_cl_free;
  rep.rho_reverified = spectral_radius(winner).rho;
}

}  // namespace

std::vector<PathPartition> enumerate_partitions(int m) {
  std::vector<PathPartition> out;
  std::vector<int> parts;
  auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
      parts.push_back(k);
      self(self, remaining - k, k);
      parts.pop_back();
    }
  };
  recurse(recurse, m, m);
  return out;
}

SpexReport restricted_spex(int n, int ell, int jobs) {
  if (ell < 5 || ell > n) throw std::invalid_argument("need 5 <= ell <= n");
  if (n > 40) throw std::invalid_argument("restricted enumeration capped at n <= 40");
  auto start = Clock::now();
  SpexReport rep;
  rep.n = n;
  rep.ell = ell;
  rep.family = SpexReport::Family::RESTRICTED;
  std::vector<PathPartition> admissible;
  for (PathPartition& pp : enumerate_partitions(n - 2))
    if (forest_join_cl_free(pp, ell)) admissible.push_back(std::move(pp));
  rep.candidates_examined = static_cast<long>(admissible.size());
  std::vector<Candidate> cands(admissible.size());
  parallel_for(jobs, admissible.size(), [&](size_t i) {
    Graph g = join(complete_graph(2), admissible[i].realize());
    cands[i] = {spectral_radius(g).rho, encode_graph6(g), admissible[i]};
  });
  rep.winner_cl_free = true;  // by the forest criterion; rechecked in finalize when small
  finalize(rep, cands);
  rep.wall_ms = elapsed_ms(start);
  return rep;
}

namespace {

// Fixed-schedule shifted power estimate on a bitmask adjacency; used only to
// shortlist brute-force candidates before the certified solver runs.
double rho_estimate(const unsigned rows[], int n) {
  double v[8], w[8];
  for (int i = 0; i < n; ++i) v[i] = 1.0;
  double rho = 0;
  for (int it = 0; it < 150; ++it) {
    double norm2 = 0;
    for (int i = 0; i < n; ++i) {
      double acc = v[i];
      unsigned r = rows[i];
      while (r) {
        int j = __builtin_ctz(r);
        acc += v[j];
        r &= r - 1;
      }
      w[i] = acc;
      norm2 += acc * acc;
    }
    double inv = 1.0 / std::sqrt(norm2);
    rho = 0;
    for (int i = 0; i < n; ++i) {
      v[i] = w[i] * inv;
    }
  }
  // Rayleigh quotient of A
  double num = 0;
  for (int i = 0; i < n; ++i) {
    double acc = 0;
    unsigned r = rows[i];
    while (r) {
      int j = __builtin_ctz(r);
      acc += v[j];
      r &= r - 1;
    }
    num += v[i] * acc;
  }
  return num;
}

Graph graph_from_mask(unsigned long mask, int n) {
  Graph g(n);
  int bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit)
      if ((mask >> bit) & 1) g.add_edge(u, v);
  return g;
}

}  // namespace

SpexReport brute_force_spex(int n, int ell, int jobs) {
  if (ell < 3) throw std::invalid_argument("cycle length must be at least 3");
  if (n < 1 || n > 8) throw std::invalid_argument("internal enumeration capped at n <= 8");
  auto start = Clock::now();
  SpexReport rep;
  rep.n = n;
  rep.ell = ell;
  rep.family = SpexReport::Family::BRUTE_FORCE;
  const int nbits = n * (n - 1) / 2;
  const unsigned long total = 1UL << nbits;
  const long max_edges = n >= 3 ? 3L * n - 6 : nbits;

  struct Shortlisted {
    unsigned long mask;
    double est;
  };
  // per-chunk buckets, merged in deterministic mask order afterwards
  int nthreads = std::max(1, jobs);
  const unsigned long chunk = std::max<unsigned long>(1024, total / (64UL * nthreads));
  const size_t nchunks = static_cast<size_t>((total + chunk - 1) / chunk);
  std::vector<std::vector<Shortlisted>> buckets(nchunks);
  std::vector<long> examined(nchunks, 0);
  std::vector<double> best_est(nchunks, -1.0);
  parallel_for(jobs, nchunks, [&](size_t c) {
    size_t ti = c;
    unsigned rows[8] = {0};
    for (unsigned long mask = c * chunk; mask < std::min(total, (c + 1) * chunk); ++mask) {
      if (static_cast<long>(__builtin_popcountl(mask)) > max_edges) continue;
      // rebuild rows; require a non-increasing degree sequence (every iso
      // class keeps at least one such labeling, so the argmax is unaffected)
      for (int i = 0; i < n; ++i) rows[i] = 0;
      int bit = 0;
      for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
          if ((mask >> bit) & 1) {
            rows[u] |= 1u << v;
            rows[v] |= 1u << u;
          }
      bool sorted = true;
      for (int i = 0; i + 1 < n && sorted; ++i)
        sorted = __builtin_popcount(rows[i]) >= __builtin_popcount(rows[i + 1]);
      if (!sorted) continue;
      Graph g = graph_from_mask(mask, n);
      if (!is_planar(g)) continue;
      if (has_cycle_of_length(g, ell)) continue;
      ++examined[ti];
      double est = rho_estimate(rows, n);
      best_est[ti] = std::max(best_est[ti], est);
      if (est > best_est[ti] - 2e-2) buckets[ti].push_back({mask, est});
    }
  });
  double global_best = -1.0;
  for (double b : best_est) global_best = std::max(global_best, b);
  std::vector<Shortlisted> shortlist;
  for (auto& b : buckets)
    for (auto& s : b)
      if (s.est > global_best - 2e-2) shortlist.push_back(s);
  std::sort(shortlist.begin(), shortlist.end(),
            [](const Shortlisted& a, const Shortlisted& b) { return a.mask < b.mask; });
  for (long e : examined) rep.candidates_examined += e;
  std::vector<Candidate> cands(shortlist.size());
  parallel_for(jobs, shortlist.size(), [&](size_t i) {
    Graph g = graph_from_mask(shortlist[i].mask, n);
    cands[i] = {spectral_radius(g).rho, encode_graph6(g), std::nullopt};
  });
  finalize(rep, cands);
  rep.wall_ms = elapsed_ms(start);
  return rep;
}

SpexReport stream_spex(std::istream& in, int n, int ell) {
  if (ell < 3) throw std::invalid_argument("cycle length must be at least 3");
  auto start = Clock::now();
  SpexReport rep;
  rep.n = n;
  rep.ell = ell;
  rep.family = SpexReport::Family::GRAPH6_STREAM;
  std::vector<Graph> graphs = read_graph6_stream(in, &rep.malformed_records);
  std::vector<Candidate> cands;
  for (const Graph& g : graphs) {
    if (n > 0 && g.order() != n) continue;
    if (!is_planar(g)) continue;
    if (g.order() > 16) {  // beyond the exact-length cycle search scope
      ++rep.oversize_skipped;
      continue;
    }
    if (has_cycle_of_length(g, ell)) continue;
    ++rep.candidates_examined;
    cands.push_back({spectral_radius(g).rho, encode_graph6(g), std::nullopt});
  }
  finalize(rep, cands);
  rep.wall_ms = elapsed_ms(start);
  return rep;
}

TheoremCheckReport theorem_check(int n, int ell, int jobs) {
  TheoremCheckReport out;
  out.search = restricted_spex(n, ell, jobs);
  out.extremal = extremal_partition(n, ell);
  Graph g = build_extremal(n, ell);
  out.extremal_graph6 = encode_graph6(g);
  out.extremal_rho = spectral_radius(g).rho;
  out.match = out.search.winner_partition.has_value() &&
              *out.search.winner_partition == out.extremal;
  return out;
}

}  // namespace spexlab
