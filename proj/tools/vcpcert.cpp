// vcpcert CLI: exact verification suites for the G2 / Spin(7) cross-product
// curvature and torsion systems. Every suite assembles an integer constraint
// system from seeded rational frames, computes its nullity modulo several
// 31-bit primes and certifies the result with exact rational witnesses.
//
// Exit codes: 0 verified match, 2 dimension mismatch, 3 certification
// failure, 4 invalid configuration.
#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "vcpcert/errors.hpp"
#include "vcpcert/suites.hpp"

namespace {

using vcpcert::Config;
using vcpcert::VerificationReport;

void print_report(const Config& cfg, const VerificationReport& rep) {
  if (cfg.output == "json")
    std::cout << vcpcert::report_to_json(rep) << "\n";
  else
    std::cout << vcpcert::report_to_text(rep);
}

int finish(const Config& cfg, const VerificationReport& rep) {
  print_report(cfg, rep);
  return rep.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact rank certificates for G2 / Spin(7) cross-product systems"};
  app.require_subcommand(1);

  Config cfg;
  int64_t samples = -1;
  int64_t w_samples = -1;
  bool appendix_rng_range = false;
  bool no_certify = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", cfg.seed, "rng seed (default 0)");
    cmd->add_option("--samples", samples, "sample count (suite-specific default)");
    cmd->add_option("--primes", cfg.primes, "number of verification primes (default 3)");
    cmd->add_option("--rng-range", cfg.rng_range,
                    "integer draws from {0..r} for stereographic points (default 3)");
    cmd->add_flag("--appendix-rng-range", appendix_rng_range,
                  "restrict integer draws to {0,1}");
    cmd->add_flag("--no-certify", no_certify, "stop at the heuristic multi-prime certificate");
    cmd->add_option("--frames", cfg.frames, "frame construction: lemma|appendix-compat");
    cmd->add_option("--dump-system", cfg.dump_path,
                    "write the assembled system (header + row/col/value triples)");
    cmd->add_option("--output", cfg.output, "text|json");
    cmd->add_flag("--bareiss-crosscheck", cfg.bareiss_crosscheck,
                  "exact fraction-free cross-validation (small systems only)");
  };

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);

  int dim_n = 7;
  auto* ac = verify->add_subcommand("ac-dim", "algebraic curvature space dimension");
  ac->add_option("--n", dim_n, "dimension, 7 or 8")->required();
  add_common(ac);
  auto* cr1g2 = verify->add_subcommand("cr1-g2", "first CR condition, 2-fold VCP on R^7");
  add_common(cr1g2);
  auto* cr1s7 = verify->add_subcommand("cr1-spin7", "first CR condition, 3-fold VCP on R^8");
  add_common(cr1s7);
  auto* tg2 = verify->add_subcommand("torsion-g2", "algebraic intrinsic torsion dimension");
  add_common(tg2);
  auto* cr2g2 = verify->add_subcommand("cr2-g2", "second CR condition over hermitian 7-frames");
  add_common(cr2g2);
  auto* cr2s7 = verify->add_subcommand("cr2-spin7", "second CR condition over hermitian 8-frames");
  cr2s7->add_option("--w-samples", w_samples, "sample count for the w block (default 700)");
  add_common(cr2s7);
  auto* red2 = verify->add_subcommand("red2", "commutator reduction identity on the octonions");
  add_common(red2);
  auto* all = verify->add_subcommand("all", "every suite");
  all->add_option("--w-samples", w_samples, "sample count for the w block (default 700)");
  add_common(all);

  CLI11_PARSE(app, argc, argv);

  if (samples >= 0) cfg.samples = samples;
  if (w_samples >= 0) cfg.w_samples = w_samples;
  if (appendix_rng_range) cfg.rng_range = 1;
  cfg.certify = !no_certify;

  try {
    if (ac->parsed()) return finish(cfg, vcpcert::run_ac_dim(cfg, dim_n));
    if (cr1g2->parsed()) return finish(cfg, vcpcert::run_cr1_g2(cfg));
    if (cr1s7->parsed()) return finish(cfg, vcpcert::run_cr1_spin7(cfg));
    if (tg2->parsed()) return finish(cfg, vcpcert::run_torsion_g2(cfg));
    if (cr2g2->parsed()) return finish(cfg, vcpcert::run_cr2_g2(cfg));
    if (cr2s7->parsed()) return finish(cfg, vcpcert::run_cr2_spin7(cfg));
    if (red2->parsed()) return finish(cfg, vcpcert::run_red2(cfg));
    if (all->parsed()) {
      std::vector<VerificationReport> reports = vcpcert::run_all(cfg);
      if (cfg.output == "json") {
        std::cout << vcpcert::reports_to_json(reports) << "\n";
      } else {
        for (const auto& r : reports) std::cout << vcpcert::report_to_text(r) << "\n";
      }
      for (const auto& r : reports)
        if (r.exit_code != 0) return r.exit_code;
      return 0;
    }
  } catch (const vcpcert::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 4;
}
