#include "spexlab/lemma_lab.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>

#include "spexlab/graph6.hpp"
#include "spexlab/parallel.hpp"
#include "spexlab/walks.hpp"

namespace spexlab {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Verdict verdict_from(const ComparisonVerdict& cv, ComparisonVerdict::Ordering expected) {
  using O = ComparisonVerdict::Ordering;
  if (cv.ordering == expected) return Verdict::PASS;
  if (cv.ordering == O::LESS || cv.ordering == O::GREATER) return Verdict::FAIL;
  return Verdict::INCONCLUSIVE;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::PASS: return "PASS";
    case Verdict::FAIL: return "FAIL";
    default: return "INCONCLUSIVE";
  }
}

bool check_fact1(long n, long ell) {
  if (ell < 0 || n < 4 * ell)
    throw std::invalid_argument("hypothesis n >= 4*ell >= 0 violated");
  // 4 * ell! * sum_{i<=ell} C(n,i)  <=  5 * n^ell, with 0^0 = 1
  BigInt binom = 1, sum = 1;
  for (long i = 1; i <= ell; ++i) {
    binom = binom * (n - i + 1) / i;
    sum += binom;
  }
  BigInt factorial = 1;
  for (long i = 2; i <= ell; ++i) factorial *= i;
  BigInt power = 1;
  for (long i = 0; i < ell; ++i) power *= n;
  return 4 * factorial * sum <= 5 * power;
}

LemmaReport check_wdiff(int n1, int n2, int max_ell) {
  if (n2 < 0 || n1 < n2 + 2 || n1 < 3)
    throw std::invalid_argument("hypothesis n1 >= n2+2 and n1 >= 3 violated");
  if (max_ell < 1) throw std::invalid_argument("max_ell must be positive");
  auto start = Clock::now();
  LemmaReport rep;
  rep.lemma = "wdiff";
  rep.params = {{"n1", n1}, {"n2", n2}, {"max_ell", max_ell}};
  Graph g1 = disjoint_union({build_path(n1), build_path(n2)});
  Graph g2 = disjoint_union({build_path(n1 - 1), build_path(n2 + 1)});
  rep.graph6_1 = encode_graph6(g1);
  rep.graph6_2 = encode_graph6(g2);
  auto w1 = walk_counts_upto(g1, max_ell);
  auto w2 = walk_counts_upto(g2, max_ell);
  auto crossing = walk_counts_crossing_upto(build_path(n1), 0, n2 + 1, max_ell);
  rep.verdict = Verdict::PASS;
  for (int i = 0; i < max_ell; ++i)
    if (w1[i] - w2[i] != crossing[i]) {
      rep.verdict = Verdict::FAIL;
      rep.params["first_bad_ell"] = i + 1;
      break;
    }
  rep.runtime_ms = elapsed_ms(start);
  return rep;
}

LemmaReport check_weval(int n, int dist, const std::vector<double>& x_grid) {
  if (n < 3) throw std::invalid_argument("path order must be at least 3");
  if (dist < 2 || dist > n - 1) throw std::invalid_argument("distance outside 2..n-1");
  const double x_min = std::max(std::sqrt(static_cast<double>(n)), 5.0);
  for (double x : x_grid)
    if (x < x_min - 1e-12)
      throw std::invalid_argument("grid point below max(sqrt(n), 5)");
  auto start = Clock::now();
  LemmaReport rep;
  rep.lemma = "weval";
  rep.params = {{"n", n}, {"dist", dist}, {"grid_size", x_grid.size()}};
  Graph path = build_path(n);
  rep.graph6_1 = encode_graph6(path);
  // Truncation depth: W^s_{u,v} <= n 2^s, so the tail after S terms is at
  // most n (2/x)^{S+1} / (1 - 2/x); with x >= 5 depth 80 is far below any
  // representable slack and the bound is still added to the LHS.
  const int kDepth = 80;
  double min_slack = std::numeric_limits<double>::infinity();
  rep.verdict = Verdict::PASS;
  for (int u = 0; u + dist < n; ++u) {
    int v = u + dist;
    auto crossing = walk_counts_crossing_upto(path, u, v, kDepth);
    for (double x : x_grid) {
      double lhs = 0, xs = 1;
      for (int s = 1; s <= kDepth; ++s) {
        xs *= x;
        lhs += static_cast<double>(crossing[s - 1]) / xs;
      }
      double q = 2.0 / x;
      lhs += n * std::pow(q, kDepth + 1) / (1.0 - q);  // certified tail
      double rhs = (10.0 * x / (x - 1.0) * std::exp(2.0 * dist / (x * x)) +
                    32.0 / (x - 4.0)) /
                   std::pow(x, dist);
      min_slack = std::min(min_slack, rhs - lhs);
      if (lhs > rhs) {
        rep.verdict = Verdict::FAIL;
        rep.params["bad_u"] = u;
        rep.params["bad_x"] = x;
      }
    }
  }
  rep.margin = min_slack;
  rep.runtime_ms = elapsed_ms(start);
  return rep;
}

namespace {

LemmaReport spectral_lemma_report(const std::string& lemma, nlohmann::ordered_json params,
                                  const Graph& g1, const Graph& g2,
                                  ComparisonVerdict::Ordering expected) {
  auto start = Clock::now();
  LemmaReport rep;
  rep.lemma = lemma;
  rep.params = std::move(params);
  rep.graph6_1 = encode_graph6(g1);
  rep.graph6_2 = encode_graph6(g2);
  ComparisonVerdict cv = compare_rho(g1, g2);
  rep.verdict = verdict_from(cv, expected);
  rep.margin = cv.margin;
  rep.rho1 = cv.rho1;
  rep.rho2 = cv.rho2;
  rep.runtime_ms = elapsed_ms(start);
  return rep;
}

}  // namespace

LemmaReport verify_lemma1(int n1, int n2, const Graph& h, const Graph& t) {
  if (n2 < 1 || n1 < n2 + 2)
    throw std::invalid_argument("hypothesis n1 >= n2+2 >= 3 violated");
  if (h.order() < 1) throw std::invalid_argument("|H| >= 1 required");
  Graph g1 = join(h, disjoint_union({build_path(n1), build_path(n2), t}));
  Graph g2 = join(h, disjoint_union({build_path(n1 - 1), build_path(n2 + 1), t}));
  return spectral_lemma_report(
      "lemma1", {{"n1", n1}, {"n2", n2}, {"H", h.order()}, {"T", t.order()}}, g1, g2,
      ComparisonVerdict::Ordering::GREATER);
}

LemmaReport verify_lemma2(int n1, int n2, int n3, int n4, const Graph& h, const Graph& t) {
  if (!(n1 >= n2 && n2 >= n3 && n3 >= n4 && n4 >= 1))
    throw std::invalid_argument("hypothesis n1 >= n2 >= n3 >= n4 >= 1 violated");
  if (n1 < n2 + 2) throw std::invalid_argument("hypothesis n1 >= n2+2 violated");
  if (h.order() < 1) throw std::invalid_argument("|H| >= 1 required");
  if (t.order() + n1 + n2 + n3 + n4 < 130)
    throw std::invalid_argument("hypothesis |T| + sum n_s >= 130 violated");
  Graph g1 = join(h, disjoint_union({build_path(n1), build_path(n2), build_path(n3),
                                     build_path(n4), t}));
  Graph g2 = join(h, disjoint_union({build_path(n1 - 1), build_path(n2 + 1),
                                     build_path(n3 + 1), build_path(n4 - 1), t}));
  return spectral_lemma_report(
      "lemma2",
      {{"n1", n1}, {"n2", n2}, {"n3", n3}, {"n4", n4}, {"H", h.order()}, {"T", t.order()}},
      g1, g2, ComparisonVerdict::Ordering::LESS);
}

LemmaReport verify_lemma3(int n1, int n2, int n3, int n4, int n5, const Graph& h,
                          const Graph& t) {
  if (!(n1 >= n2 && n2 >= n3 && n3 >= n4 && n4 >= n5 && n5 >= 1))
    throw std::invalid_argument("hypothesis n1 >= ... >= n5 >= 1 violated");
  if (n1 < n2 + 3) throw std::invalid_argument("hypothesis n1 >= n2+3 violated");
  if (h.order() < 1) throw std::invalid_argument("|H| >= 1 required");
  if (t.order() + n1 + n2 + n3 + n4 + n5 < 310)
    throw std::invalid_argument("hypothesis |T| + sum n_s >= 310 violated");
  Graph g1 = join(h, disjoint_union({build_path(n1), build_path(n2), build_path(n3),
                                     build_path(n4), build_path(n5), t}));
  Graph g2 = join(h, disjoint_union({build_path(n1 - 2), build_path(n2 + 1),
                                     build_path(n3 + 1), build_path(n4 + 1),
                                     build_path(n5 - 1), t}));
  return spectral_lemma_report("lemma3",
                               {{"n1", n1},
                                {"n2", n2},
                                {"n3", n3},
                                {"n4", n4},
                                {"n5", n5},
                                {"H", h.order()},
                                {"T", t.order()}},
                               g1, g2, ComparisonVerdict::Ordering::LESS);
}

double gfun_value(GFun which, double x) {
  if (which == GFun::Lemma2) return 8.5 + 7.5 / (x - 1.0) + 16.0 / (x - 4.0) - x;
  return 14.0 + 15.0 / (x - 1.0) + 32.0 / (x - 4.0) - x;
}

LemmaReport check_gfun(GFun which, const std::vector<double>& x_grid) {
  const double domain = which == GFun::Lemma2 ? std::sqrt(130.0) : std::sqrt(310.0);
  for (double x : x_grid)
    if (x < domain - 1e-12) throw std::invalid_argument("grid point below domain start");
  auto start = Clock::now();
  LemmaReport rep;
  rep.lemma = which == GFun::Lemma2 ? "gfun2" : "gfun3";
  rep.params = {{"grid_size", x_grid.size()}};
  std::vector<double> sorted = x_grid;
  std::sort(sorted.begin(), sorted.end());
  rep.verdict = Verdict::PASS;
  double prev = std::numeric_limits<double>::infinity();
  double max_val = -std::numeric_limits<double>::infinity();
  for (double x : sorted) {
    double v = gfun_value(which, x);
    max_val = std::max(max_val, v);
    if (v >= 0 || v >= prev) rep.verdict = Verdict::FAIL;
    prev = v;
  }
  rep.margin = -max_val;
  rep.runtime_ms = elapsed_ms(start);
  return rep;
}

Graph named_small_graph(const std::string& name) {
  if (name == "K1") return complete_graph(1);
  if (name == "K2") return complete_graph(2);
  if (name == "P0") return build_path(0);
  if (name == "P3") return build_path(3);
  if (name == "P5") return build_path(5);
  if (name == "Kbar5") return empty_graph(5);
  throw std::invalid_argument("unknown small graph name: " + name);
}

std::vector<LemmaReport> lemma1_sweep(int n1_max, int jobs) {
  struct Item {
    int n1, n2;
    std::string h, t;
  };
  std::vector<Item> items;
  for (int n2 = 1; n2 + 2 <= n1_max; ++n2)
    for (int n1 = n2 + 2; n1 <= n1_max; ++n1)
      for (const char* h : {"K1", "K2"})
        for (const char* t : {"P0", "Kbar5", "P5"}) items.push_back({n1, n2, h, t});
  std::vector<LemmaReport> reports(items.size());
  parallel_for(jobs, items.size(), [&](size_t i) {
    const Item& it = items[i];
    reports[i] = verify_lemma1(it.n1, it.n2, named_small_graph(it.h), named_small_graph(it.t));
    reports[i].params["H_name"] = it.h;
    reports[i].params["T_name"] = it.t;
  });
  return reports;
}

std::vector<Lemma2Tuple> lemma2_threshold_tuples(int count, unsigned long seed) {
  std::mt19937_64 rng(seed);
  const char* h_names[] = {"K1", "K2", "P3"};
  std::vector<Lemma2Tuple> out;
  while (static_cast<int>(out.size()) < count) {
    Lemma2Tuple t{};
    // trailing parts stay small so the rho margin stays above solver noise
    t.n4 = 1 + static_cast<int>(rng() % 2);
    t.n3 = t.n4 + static_cast<int>(rng() % 3);
    t.n2 = t.n3 + static_cast<int>(rng() % 4);
    t.n1 = t.n2 + 2 + static_cast<int>(rng() % 11);
    int sum = t.n1 + t.n2 + t.n3 + t.n4;
    if (sum > 130) continue;
    t.t_order = 130 - sum;
    t.h_name = h_names[rng() % 3];
    out.push_back(t);
  }
  return out;
}

std::vector<Lemma3Tuple> lemma3_threshold_tuples(int count, unsigned long seed) {
  std::mt19937_64 rng(seed);
  const char* h_names[] = {"K1", "K2", "P3"};
  std::vector<Lemma3Tuple> out;
  while (static_cast<int>(out.size()) < count) {
    Lemma3Tuple t{};
    t.n5 = 1 + static_cast<int>(rng() % 2);
    t.n4 = t.n5 + static_cast<int>(rng() % 2);
    t.n3 = t.n4 + static_cast<int>(rng() % 3);
    t.n2 = t.n3 + static_cast<int>(rng() % 3);
    t.n1 = t.n2 + 3 + static_cast<int>(rng() % 10);
    int sum = t.n1 + t.n2 + t.n3 + t.n4 + t.n5;
    if (sum > 310) continue;
    t.t_order = 310 - sum;
    t.h_name = h_names[rng() % 3];
    out.push_back(t);
  }
  return out;
}

std::vector<LemmaReport> lemma2_sweep(const std::vector<Lemma2Tuple>& tuples, int jobs) {
  std::vector<LemmaReport> reports(tuples.size());
  parallel_for(jobs, tuples.size(), [&](size_t i) {
    const Lemma2Tuple& t = tuples[i];
    reports[i] = verify_lemma2(t.n1, t.n2, t.n3, t.n4, named_small_graph(t.h_name),
                               empty_graph(t.t_order));
    reports[i].params["H_name"] = t.h_name;
  });
  return reports;
}

std::vector<LemmaReport> lemma3_sweep(const std::vector<Lemma3Tuple>& tuples, int jobs) {
  std::vector<LemmaReport> reports(tuples.size());
  parallel_for(jobs, tuples.size(), [&](size_t i) {
    const Lemma3Tuple& t = tuples[i];
    reports[i] = verify_lemma3(t.n1, t.n2, t.n3, t.n4, t.n5, named_small_graph(t.h_name),
                               empty_graph(t.t_order));
    reports[i].params["H_name"] = t.h_name;
  });
  return reports;
}

}  // namespace spexlab
