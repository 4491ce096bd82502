#include "vcpcert/suites.hpp"

#include <chrono>
#include <fstream>

#include "vcpcert/assembly.hpp"
#include "vcpcert/cross_product.hpp"
#include "vcpcert/errors.hpp"
#include "vcpcert/frames.hpp"
#include "vcpcert/rng.hpp"

namespace vcpcert {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::vector<BigInt> flatten_witness(const Tensor4& t) {
  std::vector<BigInt> out = clear_denominators(t.coeffs);
  BigInt g = content(out);
  if (g > 1)
    for (BigInt& v : out) v /= g;
  return out;
}

void finish_report(VerificationReport& rep, const RankCertificate& cert,
                   std::optional<int64_t> expected, bool certified_required) {
  rep.ncols = cert.ncols;
  rep.prime_ranks = cert.prime_ranks;
  rep.nullity = cert.claimed_nullity;
  rep.level = to_string(cert.level);
  rep.witness_count = cert.witness_count;
  if (!cert.note.empty()) rep.note = cert.note;
  rep.expected = expected;
  bool dims_ok = expected.has_value() && cert.claimed_nullity == *expected;
  bool cert_ok = cert.level == CertLevel::witness_certified ||
                 cert.level == CertLevel::fully_certified || !certified_required;
  rep.match = dims_ok && cert_ok;
  if (!dims_ok)
    rep.exit_code = 2;
  else if (!cert_ok)
    rep.exit_code = 3;
  else
    rep.exit_code = 0;
}

void record_blocks(VerificationReport& rep, const RankEngine& engine) {
  rep.blocks.clear();
  for (const auto& [label, rows] : engine.block_rows()) rep.blocks.push_back({label, rows});
}

void maybe_dump(const Config& cfg, const ConstraintSystem& sys) {
  if (!cfg.dump_path) return;
  std::ofstream ofs(*cfg.dump_path);
  if (!ofs) throw ConfigError("cannot open dump path " + *cfg.dump_path);
  sys.dump(ofs);
}

// Optional exact cross-validation of the modular result on small systems:
// Bareiss rank of the sampled rows compressed through the symmetry map.
// nullity(full) = #classes - rank_Q(compressed sampled rows).
std::optional<int64_t> bareiss_nullity_check(const ConstraintSystem& sys) {
  const SignedClassMap* map = sys.symmetry_map();
  if (!map) throw ConfigError("--bareiss-crosscheck: system has no symmetry map");
  std::vector<std::vector<BigInt>> rows;
  for (const auto& b : sys.blocks()) {
    if (b->pure_symmetry()) continue;
    if (!b->compressible())
      throw ConfigError("--bareiss-crosscheck: system has uncompressible non-symmetry rows");
    b->emit_exact([&](std::span<const ExactEntry> row) {
      std::vector<BigInt> c(static_cast<size_t>(map->nclasses));
      for (const ExactEntry& e : row) {
        int32_t cls = map->class_of[static_cast<size_t>(e.col)];
        if (cls < 0) continue;
        if (map->sign_of[static_cast<size_t>(e.col)] > 0)
          c[cls] += e.val;
        else
          c[cls] -= e.val;
      }
      rows.push_back(std::move(c));
    });
    if (rows.size() > 64)
      throw ConfigError("--bareiss-crosscheck: too many sampled rows (limit 64)");
  }
  if (rows.empty()) return map->nclasses;
  return map->nclasses - bareiss_rank(std::move(rows));
}

// Stabilization: after the initial sample count, add batches until two
// consecutive additions leave the nullity unchanged or the proven lower
// bound is reached. Rank is nondecreasing under row stacking, so the trace
// is nonincreasing.
struct Stabilizer {
  int64_t floor = 0;
  int max_batches = 8;

  bool done(const std::vector<int64_t>& trace) const {
    if (!trace.empty() && trace.back() <= floor) return true;
    size_t n = trace.size();
    return n >= 3 && trace[n - 1] == trace[n - 2] && trace[n - 2] == trace[n - 3];
  }
};

VerificationReport base_report(const Config& cfg, const std::string& command) {
  VerificationReport rep;
  rep.command = command;
  rep.seed = cfg.seed;
  rep.rng_range = cfg.rng_range;
  rep.frames_mode = cfg.frames;
  rep.primes = default_primes(cfg.primes);
  return rep;
}

void validate_config(const Config& cfg) {
  if (cfg.primes < 1 || cfg.primes > 16) throw ConfigError("--primes must be in [1,16]");
  if (cfg.rng_range < 1) throw ConfigError("--rng-range must be >= 1");
  if (cfg.frames != "lemma" && cfg.frames != "appendix-compat")
    throw ConfigError("--frames must be 'lemma' or 'appendix-compat'");
  if (cfg.output != "text" && cfg.output != "json")
    throw ConfigError("--output must be 'text' or 'json'");
  if (cfg.samples && *cfg.samples < 0) throw ConfigError("--samples must be >= 0");
  if (cfg.w_samples && *cfg.w_samples < 0) throw ConfigError("--w-samples must be >= 0");
}

}  // namespace

uint64_t suite_stream_id(const std::string& suite) { return fnv1a64(suite); }

VerificationReport run_ac_dim(const Config& cfg, int n) {
  validate_config(cfg);
  if (n != 7 && n != 8) throw ConfigError("ac-dim: --n must be 7 or 8");
  VerificationReport rep = base_report(cfg, "ac-dim-" + std::to_string(n));
  auto t0 = Clock::now();
  ConstraintSystem sys = ac_rows(n);
  maybe_dump(cfg, sys);
  rep.timings.assembly_ms = ms_since(t0);

  t0 = Clock::now();
  RankEngine engine(sys, default_primes(cfg.primes));
  RankCertificate cert = engine.heuristic_certificate();
  rep.nullity_trace.push_back(cert.claimed_nullity);
  rep.timings.elimination_ms = ms_since(t0);

  t0 = Clock::now();
  if (cfg.certify) cert = engine.certify(cert, {});
  rep.timings.certification_ms = ms_since(t0);

  record_blocks(rep, engine);
  int64_t expected = static_cast<int64_t>(n) * n * (n * n - 1) / 12;
  finish_report(rep, cert, expected, cfg.certify);
  return rep;
}

namespace {

// Shared driver for the four sampled suites (cr1-g2, cr1-spin7, torsion-g2,
// cr2-g2). The base system must already contain its deterministic blocks.
template <typename MakeBlock>
RankCertificate stabilized_run(const Config& cfg, ConstraintSystem& sys, Rng& rng,
                               int64_t initial_samples, int64_t floor, const std::string& label,
                               MakeBlock&& make_block, VerificationReport& rep,
                               RankEngine& engine) {
  auto t0 = Clock::now();
  int64_t emitted = initial_samples;
  if (initial_samples > 0)
    sys.add_block(make_block(rng, initial_samples,
                             label + "[0," + std::to_string(initial_samples) + ")"));
  rep.timings.assembly_ms += ms_since(t0);

  t0 = Clock::now();
  RankCertificate cert = engine.heuristic_certificate();
  rep.nullity_trace.push_back(cert.claimed_nullity);
  rep.timings.elimination_ms += ms_since(t0);

  if (initial_samples > 0) {
    Stabilizer stab{floor};
    int64_t batch = std::max<int64_t>(1, initial_samples / 2);
    int batches = 0;
    while (!stab.done(rep.nullity_trace) && batches < stab.max_batches) {
      auto ta = Clock::now();
      sys.add_block(make_block(rng, batch,
                               label + "[" + std::to_string(emitted) + "," +
                                   std::to_string(emitted + batch) + ")"));
      emitted += batch;
      rep.timings.assembly_ms += ms_since(ta);
      ta = Clock::now();
      cert = engine.heuristic_certificate();
      rep.nullity_trace.push_back(cert.claimed_nullity);
      rep.timings.elimination_ms += ms_since(ta);
      ++batches;
    }
  }
  rep.samples = emitted;
  return cert;
}

}  // namespace

VerificationReport run_cr1_g2(const Config& cfg) {
  validate_config(cfg);
  VerificationReport rep = base_report(cfg, "cr1-g2");
  Rng rng = Rng::substream(cfg.seed, suite_stream_id("cr1-g2"));
  auto t0 = Clock::now();
  ConstraintSystem sys = ac_rows(7);
  rep.timings.assembly_ms = ms_since(t0);
  RankEngine engine(sys, default_primes(cfg.primes));

  auto make_block = [&](Rng& r, int64_t count, std::string label) {
    std::vector<Frame> pairs;
    pairs.reserve(count);
    for (int64_t i = 0; i < count; ++i) pairs.push_back(random_pair7(r, cfg.rng_range));
    return cr1_g2_block(pairs, std::move(label));
  };
  RankCertificate cert = stabilized_run(cfg, sys, rng, cfg.samples.value_or(100), 1, "cr1-pairs",
                                        make_block, rep, engine);
  maybe_dump(cfg, sys);

  t0 = Clock::now();
  if (cfg.certify)
    cert = engine.certify(cert, {flatten_witness(curvature_identity_witness(7))});
  rep.timings.certification_ms = ms_since(t0);

  record_blocks(rep, engine);
  finish_report(rep, cert, 1, cfg.certify);
  return rep;
}

VerificationReport run_cr1_spin7(const Config& cfg) {
  validate_config(cfg);
  VerificationReport rep = base_report(cfg, "cr1-spin7");
  Rng rng = Rng::substream(cfg.seed, suite_stream_id("cr1-spin7"));
  auto t0 = Clock::now();
  ConstraintSystem sys = ac_rows(8);
  rep.timings.assembly_ms = ms_since(t0);
  RankEngine engine(sys, default_primes(cfg.primes));

  auto make_block = [&](Rng& r, int64_t count, std::string label) {
    std::vector<Frame> triples;
    triples.reserve(count);
    for (int64_t i = 0; i < count; ++i) triples.push_back(random_triple8(r, cfg.rng_range));
    return cr1_spin7_block(triples, std::move(label));
  };
  RankCertificate cert = stabilized_run(cfg, sys, rng, cfg.samples.value_or(100), 1,
                                        "cr1-triples", make_block, rep, engine);
  maybe_dump(cfg, sys);

  t0 = Clock::now();
  if (cfg.certify)
    cert = engine.certify(cert, {flatten_witness(curvature_identity_witness(8))});
  rep.timings.certification_ms = ms_since(t0);

  record_blocks(rep, engine);
  finish_report(rep, cert, 1, cfg.certify);
  return rep;
}

VerificationReport run_torsion_g2(const Config& cfg) {
  validate_config(cfg);
  VerificationReport rep = base_report(cfg, "torsion-g2");
  Rng rng = Rng::substream(cfg.seed, suite_stream_id("torsion-g2"));
  auto t0 = Clock::now();
  ConstraintSystem sys = torsion_antisym_g2();
  rep.timings.assembly_ms = ms_since(t0);
  RankEngine engine(sys, default_primes(cfg.primes));

  auto make_block = [&](Rng& r, int64_t count, std::string label) {
    std::vector<Frame> triples;
    triples.reserve(count);
    for (int64_t i = 0; i < count; ++i) triples.push_back(random_triple7(r, cfg.rng_range));
    return torsion_sample_block(triples, std::move(label));
  };
  RankCertificate cert = stabilized_run(cfg, sys, rng, cfg.samples.value_or(300), 0,
                                        "torsion-samples", make_block, rep, engine);
  maybe_dump(cfg, sys);

  if (cfg.bareiss_crosscheck) rep.bareiss_rank_check = bareiss_nullity_check(sys);

  t0 = Clock::now();
  if (cfg.certify) cert = engine.certify(cert, {});
  rep.timings.certification_ms = ms_since(t0);

  record_blocks(rep, engine);
  finish_report(rep, cert, 49, cfg.certify);
  if (rep.bareiss_rank_check && *rep.bareiss_rank_check != rep.nullity) {
    rep.note = "bareiss cross-check disagrees with modular nullity";
    rep.exit_code = 3;
    rep.match = false;
  }
  return rep;
}

VerificationReport run_cr2_g2(const Config& cfg) {
  validate_config(cfg);
  VerificationReport rep = base_report(cfg, "cr2-g2");
  Rng rng = Rng::substream(cfg.seed, suite_stream_id("cr2-g2"));
  const bool compat = cfg.frames == "appendix-compat";

  auto t0 = Clock::now();
  ConstraintSystem sys = torsion_antisym_g2();
  {
    std::vector<Frame> triples;
    for (int i = 0; i < 300; ++i) triples.push_back(random_triple7(rng, cfg.rng_range));
    sys.add_block(torsion_sample_block(triples, "torsion-samples[0,300)"));
  }
  rep.timings.assembly_ms = ms_since(t0);
  RankEngine engine(sys, default_primes(cfg.primes));

  auto make_block = [&](Rng& r, int64_t count, std::string label) {
    std::vector<Frame> frames;
    frames.reserve(count);
    for (int64_t i = 0; i < count; ++i)
      frames.push_back(compat ? appendix_compat_frame7(r) : hermitian_frame7(r, cfg.rng_range));
    return cr2_g2_block(frames, std::move(label), /*verify_frames=*/!compat);
  };
  RankCertificate cert = stabilized_run(cfg, sys, rng, cfg.samples.value_or(10), 0, "cr2-frames",
                                        make_block, rep, engine);
  maybe_dump(cfg, sys);

  if (cfg.bareiss_crosscheck) rep.bareiss_rank_check = bareiss_nullity_check(sys);

  t0 = Clock::now();
  if (cfg.certify && !compat) cert = engine.certify(cert, {});
  if (compat) cert.level = CertLevel::non_certified;
  rep.timings.certification_ms = ms_since(t0);

  record_blocks(rep, engine);
  finish_report(rep, cert, 0, cfg.certify || compat);
  if (rep.bareiss_rank_check && *rep.bareiss_rank_check != rep.nullity) {
    rep.note = "bareiss cross-check disagrees with modular nullity";
    rep.exit_code = 3;
    rep.match = false;
  }
  return rep;
}

VerificationReport run_cr2_spin7(const Config& cfg) {
  validate_config(cfg);
  VerificationReport rep = base_report(cfg, "cr2-spin7");
  Rng rng = Rng::substream(cfg.seed, suite_stream_id("cr2-spin7"));

  auto t0 = Clock::now();
  ConstraintSystem sys = w_antisym_spin7();
  rep.timings.assembly_ms = ms_since(t0);
  RankEngine engine(sys, default_primes(cfg.primes));

  // phase A: the w system alone; its stabilized nullity is the recorded dim W
  auto make_w_block = [&](Rng& r, int64_t count, std::string label) {
    std::vector<WSample> samples;
    samples.reserve(count);
    for (int64_t i = 0; i < count; ++i) {
      DenseMatrix q = random_orthogonal(8, 3, r, cfg.rng_range);
      WSample s;
      s.eta2.assign(q.a.begin(), q.a.begin() + 8);
      s.eta3.assign(q.a.begin() + 8, q.a.begin() + 16);
      s.eta4.assign(q.a.begin() + 16, q.a.begin() + 24);
      s.eta1.assign(q.a.begin() + 24, q.a.begin() + 32);
      samples.push_back(std::move(s));
    }
    return w_sample_block(samples, std::move(label));
  };
  RankCertificate cert = stabilized_run(cfg, sys, rng, cfg.w_samples.value_or(700), 0,
                                        "w-samples", make_w_block, rep, engine);
  rep.w_samples = rep.samples;
  rep.dim_w = cert.claimed_nullity;

  // phase B: second-CR rows over hermitian 8-frames
  auto make_frame_block = [&](Rng& r, int64_t count, std::string label) {
    std::vector<Frame> frames;
    frames.reserve(count);
    for (int64_t i = 0; i < count; ++i) frames.push_back(hermitian_frame8(r, cfg.rng_range));
    return cr2_spin7_block(frames, std::move(label));
  };
  int64_t frame_samples = cfg.samples.value_or(10);
  size_t trace_before = rep.nullity_trace.size();
  if (frame_samples > 0) {
    cert = stabilized_run(cfg, sys, rng, frame_samples, 0, "cr2-frames", make_frame_block, rep,
                          engine);
  }
  rep.samples = frame_samples > 0 ? rep.samples : 0;
  (void)trace_before;
  maybe_dump(cfg, sys);

  t0 = Clock::now();
  if (cfg.certify) cert = engine.certify(cert, {});
  rep.timings.certification_ms = ms_since(t0);

  record_blocks(rep, engine);
  finish_report(rep, cert, 0, cfg.certify);
  return rep;
}

VerificationReport run_red2(const Config& cfg) {
  validate_config(cfg);
  VerificationReport rep = base_report(cfg, "red2");
  auto t0 = Clock::now();
  bool ok = true;
  // evaluate at (1,0), (0,1), (1,1) and compare against the closed form
  for (auto [a1, a3] : {std::pair<int, int>{1, 0}, {0, 1}, {1, 1}, {0, 0}}) {
    DenseMatrix lhs = octonion_plane_commutator(Rational(a1), Rational(a3));
    DenseMatrix rhs = octonion_plane_commutator_closed_form(Rational(a1), Rational(a3));
    if (!(lhs == rhs)) ok = false;
    if ((a1 || a3) && is_zero_matrix(lhs)) ok = false;
    if (!a1 && !a3 && !is_zero_matrix(lhs)) ok = false;
  }
  // vanishes only at the origin: the two coefficient operators are
  // linearly independent (exact Gram determinant nonzero)
  DenseMatrix c10 = octonion_plane_commutator(Rational(1), Rational(0));
  DenseMatrix c01 = octonion_plane_commutator(Rational(0), Rational(1));
  Rational g11 = killing_inner(c10, c10);
  Rational g12 = killing_inner(c10, c01);
  Rational g22 = killing_inner(c01, c01);
  if (g11 * g22 - g12 * g12 == 0) ok = false;
  if (g11 != Rational(2)) ok = false;  // norm^2 of the unit-coefficient commutator
  rep.timings.elimination_ms = ms_since(t0);
  rep.nullity = ok ? 0 : 1;
  rep.expected = 0;
  rep.level = ok ? "fully-certified" : "heuristic";
  rep.match = ok;
  rep.exit_code = ok ? 0 : 2;
  return rep;
}

std::vector<VerificationReport> run_all(const Config& cfg) {
  std::vector<VerificationReport> out;
  out.push_back(run_ac_dim(cfg, 7));
  out.push_back(run_ac_dim(cfg, 8));
  out.push_back(run_cr1_g2(cfg));
  out.push_back(run_torsion_g2(cfg));
  out.push_back(run_cr2_g2(cfg));
  out.push_back(run_cr1_spin7(cfg));
  out.push_back(run_cr2_spin7(cfg));
  out.push_back(run_red2(cfg));
  return out;
}

}  // namespace vcpcert
