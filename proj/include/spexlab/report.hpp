#ifndef SPEXLAB_REPORT_HPP
#define SPEXLAB_REPORT_HPP

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

#include "spexlab/lemma_lab.hpp"
#include "spexlab/spex_search.hpp"

namespace spexlab {

inline constexpr const char* kVersion = "0.1.0";

/// Round to 12 significant digits so serialized reports are reproducible
/// across formatting paths.
double round12(double x);

/// FNV-1a of the canonical config string, as fixed-width hex.
std::string config_hash(const std::string& canonical_config);

nlohmann::ordered_json report_json(const LemmaReport& rep);
nlohmann::ordered_json report_json(const SpexReport& rep);
nlohmann::ordered_json report_json(const TheoremCheckReport& rep);

/// JSON lines, one record per report, prefixed fields in stable order.
/// Throws on an empty result set.
void emit_json_lines(std::ostream& out, const std::vector<nlohmann::ordered_json>& records,
                     const std::string& config_canonical);

/// CSV leaderboard (rank, graph6, rho, planar, cl_free) sorted by
/// descending rho.
struct LeaderboardRow {
  std::string graph6;
  double rho = 0;
  bool planar = false;
  bool cl_free = false;
};
void emit_leaderboard_csv(std::ostream& out, std::vector<LeaderboardRow> rows);

}  // namespace spexlab

#endif  // SPEXLAB_REPORT_HPP
