#ifndef SPEXLAB_LEMMA_LAB_HPP
#define SPEXLAB_LEMMA_LAB_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "spexlab/graph.hpp"
#include "spexlab/spectral.hpp"

namespace spexlab {

enum class Verdict { PASS, FAIL, INCONCLUSIVE };

std::string to_string(Verdict v);

struct LemmaReport {
  std::string lemma;
  nlohmann::ordered_json params;
  Verdict verdict = Verdict::INCONCLUSIVE;
  double margin = 0;
  double rho1 = 0;
  double rho2 = 0;
  std::string graph6_1;  // reproducible instance (set on spectral checks)
  std::string graph6_2;
  double runtime_ms = 0;
};

/// Exact rational check of sum_{i<=ell} C(n,i) <= (5/4) n^ell / ell!
/// for n >= 4*ell >= 0. Rejects inputs outside the hypothesis.
bool check_fact1(long n, long ell);

/// Exact-integer walk-difference identity on P_{n1} u P_{n2} versus
/// P_{n1-1} u P_{n2+1}, for all 1 <= ell <= max_ell.
LemmaReport check_wdiff(int n1, int n2, int max_ell);

/// Certified truncation of the crossing-walk series on a path versus the
/// closed-form bound (1/x^d)(10x/(x-1) e^{2d/x^2} + 32/(x-4)), checked at
/// every vertex pair of distance dist and every grid point x >= max(sqrt n, 5).
LemmaReport check_weval(int n, int dist, const std::vector<double>& x_grid);

/// rho(H v (P_{n1} u P_{n2} u T)) > rho(H v (P_{n1-1} u P_{n2+1} u T)).
LemmaReport verify_lemma1(int n1, int n2, const Graph& h, const Graph& t);

/// Four-path version; hypothesis |T| + sum n_s >= 130; expects LESS.
LemmaReport verify_lemma2(int n1, int n2, int n3, int n4, const Graph& h, const Graph& t);

/// Five-path version; hypothesis |T| + sum n_s >= 310; expects LESS.
LemmaReport verify_lemma3(int n1, int n2, int n3, int n4, int n5, const Graph& h,
                          const Graph& t);

enum class GFun { Lemma2, Lemma3 };

/// Sign and monotonicity of the closing auxiliary function
///   lemma2: g(x) = 8.5 + 7.5/(x-1) + 16/(x-4) - x   on x >= sqrt(130)
///   lemma3: g(x) = 14  + 15/(x-1)  + 32/(x-4) - x   on x >= sqrt(310)
LemmaReport check_gfun(GFun which, const std::vector<double>& x_grid);
double gfun_value(GFun which, double x);

// -- sweep drivers (shared by the CLI and the acceptance suite) --------------

struct Lemma2Tuple {
  int n1, n2, n3, n4, t_order;
  std::string h_name;  // K1, K2 or P3
};
struct Lemma3Tuple {
  int n1, n2, n3, n4, n5, t_order;
  std::string h_name;
};

Graph named_small_graph(const std::string& name);  // K1, K2, P0, P3, P5, Kbar5

/// All (n1, n2) with n2+2 <= n1 <= n1_max, H in {K1,K2}, T in {P0, Kbar5, P5}.
std::vector<LemmaReport> lemma1_sweep(int n1_max, int jobs = 1);

/// Deterministic pseudo-random tuples with |T| + sum n_s equal to the
/// threshold exactly (130 resp. 310); small trailing parts keep the margins
/// certifiable at solver precision.
std::vector<Lemma2Tuple> lemma2_threshold_tuples(int count, unsigned long seed);
std::vector<Lemma3Tuple> lemma3_threshold_tuples(int count, unsigned long seed);

std::vector<LemmaReport> lemma2_sweep(const std::vector<Lemma2Tuple>& tuples, int jobs = 1);
std::vector<LemmaReport> lemma3_sweep(const std::vector<Lemma3Tuple>& tuples, int jobs = 1);

}  // namespace spexlab

#endif  // SPEXLAB_LEMMA_LAB_HPP
