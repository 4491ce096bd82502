#include <sstream>

#include "json.hpp"
#include "vcpcert/suites.hpp"

namespace vcpcert {

namespace {

// Timings live under one key so report comparison can exclude them; all other
// fields are deterministic for a given configuration.
nlohmann::ordered_json to_ordered_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = r.schema;
  j["command"] = r.command;
  nlohmann::ordered_json cfg;
  cfg["seed"] = r.seed;
  cfg["samples"] = r.samples;
  if (r.command == "cr2-spin7") cfg["w_samples"] = r.w_samples;
  cfg["rng_range"] = r.rng_range;
  cfg["frames"] = r.frames_mode;
  cfg["primes"] = r.primes;
  j["config"] = cfg;
  nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
  for (const BlockStat& b : r.blocks) {
    nlohmann::ordered_json bj;
    bj["label"] = b.label;
    bj["rows"] = b.rows;
    blocks.push_back(bj);
  }
  j["blocks"] = blocks;
  nlohmann::ordered_json cert;
  cert["level"] = r.level;
  cert["nullity"] = r.nullity;
  nlohmann::ordered_json primes = nlohmann::ordered_json::array();
  nlohmann::ordered_json ranks = nlohmann::ordered_json::array();
  for (const auto& [p, rk] : r.prime_ranks) {
    primes.push_back(p);
    ranks.push_back(rk);
  }
  cert["primes"] = primes;
  cert["ranks"] = ranks;
  cert["ncols"] = r.ncols;
  cert["witnesses"] = r.witness_count;
  cert["nullity_trace"] = r.nullity_trace;
  j["certificate"] = cert;
  if (r.expected)
    j["expected"] = *r.expected;
  else
    j["expected"] = nullptr;
  j["match"] = r.match;
  if (r.dim_w) j["dim_w"] = *r.dim_w;
  if (r.bareiss_rank_check) j["bareiss_nullity"] = *r.bareiss_rank_check;
  if (!r.note.empty()) j["note"] = r.note;
  nlohmann::ordered_json t;
  t["assembly_ms"] = r.timings.assembly_ms;
  t["elimination_ms"] = r.timings.elimination_ms;
  t["certification_ms"] = r.timings.certification_ms;
  j["timings"] = t;
  j["exit_code"] = r.exit_code;
  return j;
}

}  // namespace

std::string report_to_json(const VerificationReport& r) { return to_ordered_json(r).dump(2); }

std::string reports_to_json(const std::vector<VerificationReport>& rs) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["command"] = "all";
  bool all_match = true;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rs) {
    arr.push_back(to_ordered_json(r));
    all_match = all_match && r.match;
  }
  j["suites"] = arr;
  j["match"] = all_match;
  return j.dump(2);
}

std::string report_to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "suite " << r.command << "  (seed=" << r.seed << ", samples=" << r.samples;
  if (r.command == "cr2-spin7") os << ", w_samples=" << r.w_samples;
  os << ", rng_range=" << r.rng_range << ", frames=" << r.frames_mode << ")\n";
  for (const BlockStat& b : r.blocks)
    os << "  block " << b.label << ": " << b.rows << " rows\n";
  os << "  ncols " << r.ncols << "\n";
  for (const auto& [p, rk] : r.prime_ranks) os << "  rank mod " << p << ": " << rk << "\n";
  os << "  nullity trace:";
  for (int64_t v : r.nullity_trace) os << " " << v;
  os << "\n  nullity " << r.nullity;
  if (r.expected) os << "  (expected " << *r.expected << ")";
  os << "  [" << r.level;
  if (r.witness_count) os << ", " << r.witness_count << " exact witnesses";
  os << "]\n";
  if (r.dim_w) os << "  dim W(R^8) = " << *r.dim_w << "\n";
  if (r.bareiss_rank_check) os << "  bareiss nullity = " << *r.bareiss_rank_check << "\n";
  if (!r.note.empty()) os << "  note: " << r.note << "\n";
  os << "  timings: assembly " << r.timings.assembly_ms << " ms, elimination "
     << r.timings.elimination_ms << " ms, certification " << r.timings.certification_ms
     << " ms\n";
  os << "  result: " << (r.match ? "MATCH" : "MISMATCH") << "\n";
  return os.str();
}

}  // namespace vcpcert
