#include "spexlab/report.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace spexlab {

double round12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::string config_hash(const std::string& canonical_config) {
  unsigned long long h = 1469598103934665603ULL;
  for (unsigned char c : canonical_config) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", h);
  return buf;
}

nlohmann::ordered_json report_json(const LemmaReport& rep) {
  nlohmann::ordered_json j;
  j["lemma"] = rep.lemma;
  j["params"] = rep.params;
  j["verdict"] = to_string(rep.verdict);
  j["margin"] = round12(rep.margin);
  j["rho1"] = round12(rep.rho1);
  j["rho2"] = round12(rep.rho2);
  j["graph6_1"] = rep.graph6_1;
  j["graph6_2"] = rep.graph6_2;
  return j;
}

nlohmann::ordered_json report_json(const SpexReport& rep) {
  nlohmann::ordered_json j;
  j["n"] = rep.n;
  j["ell"] = rep.ell;
  switch (rep.family) {
    case SpexReport::Family::RESTRICTED: j["family"] = "RESTRICTED"; break;
    case SpexReport::Family::BRUTE_FORCE: j["family"] = "BRUTE_FORCE"; break;
    case SpexReport::Family::GRAPH6_STREAM: j["family"] = "GRAPH6_STREAM"; break;
  }
  if (rep.no_candidate) {
    j["verdict"] = "NO_CANDIDATE";
    j["candidates_examined"] = rep.candidates_examined;
    j["malformed_records"] = rep.malformed_records;
    return j;
  }
  j["winner_graph6"] = rep.winner_graph6;
  if (rep.winner_partition) j["winner_partition"] = rep.winner_partition->normalized();
  j["rho"] = round12(rep.rho);
  j["rho_reverified"] = round12(rep.rho_reverified);
  j["runner_up_gap"] = round12(rep.runner_up_gap);
  j["ties"] = rep.ties;
  j["candidates_examined"] = rep.candidates_examined;
  j["winner_planar"] = rep.winner_planar;
  j["winner_cl_free"] = rep.winner_cl_free;
  if (rep.family == SpexReport::Family::GRAPH6_STREAM) {
    j["malformed_records"] = rep.malformed_records;
    j["oversize_skipped"] = rep.oversize_skipped;
  }
  return j;
}

nlohmann::ordered_json report_json(const TheoremCheckReport& rep) {
  nlohmann::ordered_json j;
  j["n"] = rep.search.n;
  j["ell"] = rep.search.ell;
  j["verdict"] = rep.match ? "MATCH" : "MISMATCH";
  j["search_partition"] =
      rep.search.winner_partition ? rep.search.winner_partition->normalized()
                                  : std::vector<int>{};
  j["extremal_partition"] = rep.extremal.normalized();
  j["search_rho"] = round12(rep.search.rho);
  j["extremal_rho"] = round12(rep.extremal_rho);
  j["search_graph6"] = rep.search.winner_graph6;
  j["extremal_graph6"] = rep.extremal_graph6;
  return j;
}

void emit_json_lines(std::ostream& out, const std::vector<nlohmann::ordered_json>& records,
                     const std::string& config_canonical) {
  if (records.empty()) throw std::invalid_argument("no results to emit");
  nlohmann::ordered_json header;
  header["toolkit"] = "spexlab";
  header["version"] = kVersion;
  header["config_hash"] = config_hash(config_canonical);
  out << header.dump() << '\n';
  for (const auto& r : records) out << r.dump() << '\n';
}

void emit_leaderboard_csv(std::ostream& out, std::vector<LeaderboardRow> rows) {
  if (rows.empty()) throw std::invalid_argument("no results to emit");
  std::stable_sort(rows.begin(), rows.end(),
                   [](const LeaderboardRow& a, const LeaderboardRow& b) { return a.rho > b.rho; });
  out << "rank,graph6,rho,planar,cl_free\n";
  char buf[40];
  for (size_t i = 0; i < rows.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.12g", rows[i].rho);
    out << (i + 1) << ',' << rows[i].graph6 << ',' << buf << ','
        << (rows[i].planar ? 1 : 0) << ',' << (rows[i].cl_free ? 1 : 0) << '\n';
  }
}

}  // namespace spexlab
