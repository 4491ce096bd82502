#ifndef VCPCERT_SUITES_HPP
#define VCPCERT_SUITES_HPP

#include <optional>
#include <string>
#include <vector>

#include "vcpcert/certificate.hpp"

namespace vcpcert {

// Shared run configuration. Defaults reproduce the reference sample counts:
// 100 pairs (cr1-g2), 100 triples (cr1-spin7), 300 triples (torsion-g2),
// 10 hermitian frames (cr2-g2, cr2-spin7), 700 quadruples for the w block.
struct Config {
  uint64_t seed = 0;
  std::optional<int64_t> samples;    // per-suite primary sample count
  std::optional<int64_t> w_samples;  // cr2-spin7 only: w-block sample count
  int primes = 3;
  int rng_range = 3;                 // integer draws from {0..rng_range}
  bool certify = true;
  std::string frames = "lemma";      // "lemma" | "appendix-compat"
  std::optional<std::string> dump_path;
  std::string output = "text";       // "text" | "json"
  bool bareiss_crosscheck = false;
};

struct BlockStat {
  std::string label;
  int64_t rows = 0;
};

struct Timings {
  double assembly_ms = 0;
  double elimination_ms = 0;
  double certification_ms = 0;
};

// One suite run: sample counts, per-block row counts, certificate summary,
// the expected dimension and the match flag. match=true requires a
// witness-certified (or better) certificate equal to the expected value.
struct VerificationReport {
  int schema = 1;
  std::string command;
  uint64_t seed = 0;
  int64_t samples = 0;
  int64_t w_samples = 0;
  int rng_range = 3;
  std::string frames_mode = "lemma";
  std::vector<uint64_t> primes;
  std::vector<BlockStat> blocks;
  int64_t ncols = 0;
  std::vector<std::pair<uint64_t, int64_t>> prime_ranks;
  int64_t nullity = 0;
  std::vector<int64_t> nullity_trace;  // stabilization history
  std::string level = "heuristic";
  int64_t witness_count = 0;
  std::optional<int64_t> expected;
  bool match = false;
  std::optional<int64_t> dim_w;  // cr2-spin7: recorded dim W(R^8)
  std::optional<int64_t> bareiss_rank_check;
  std::string note;
  Timings timings;
  int exit_code = 0;  // 0 ok, 2 mismatch, 3 certification failure, 4 config
};

VerificationReport run_ac_dim(const Config& cfg, int n);
VerificationReport run_cr1_g2(const Config& cfg);
VerificationReport run_cr1_spin7(const Config& cfg);
VerificationReport run_torsion_g2(const Config& cfg);
VerificationReport run_cr2_g2(const Config& cfg);
VerificationReport run_cr2_spin7(const Config& cfg);
VerificationReport run_red2(const Config& cfg);
std::vector<VerificationReport> run_all(const Config& cfg);

// Deterministic per-suite substream id, so `verify all` equals the
// concatenation of the individual runs.
uint64_t suite_stream_id(const std::string& suite);

std::string report_to_json(const VerificationReport& r);
std::string reports_to_json(const std::vector<VerificationReport>& rs);
std::string report_to_text(const VerificationReport& r);

}  // namespace vcpcert

#endif
