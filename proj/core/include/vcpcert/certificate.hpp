#ifndef VCPCERT_CERTIFICATE_HPP
#define VCPCERT_CERTIFICATE_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vcpcert/constraint_system.hpp"
#include "vcpcert/modular.hpp"

namespace vcpcert {

enum class CertLevel { heuristic, witness_certified, fully_certified, non_certified };
std::string to_string(CertLevel level);

// Result of a rank/nullity computation. The soundness contract:
//   nullity_true <= ncols - max per-prime rank           (always)
//   nullity_true >= number of exactly verified witnesses (when present)
// fully_certified means both bounds coincide with claimed_nullity.
struct RankCertificate {
  int64_t ncols = 0;
  std::vector<std::pair<uint64_t, int64_t>> prime_ranks;
  int64_t claimed_nullity = 0;
  CertLevel level = CertLevel::heuristic;
  bool primes_agree = true;
  int64_t witness_count = 0;
  std::string note;
};

// Drives per-prime eliminators over a (growable) constraint system. Feeding is
// parallel across primes and deterministic: every prime consumes the identical
// block stream in order.
class RankEngine {
 public:
  RankEngine(const ConstraintSystem& system, std::vector<uint64_t> primes);

  // Feeds blocks added since the last call (all of them on the first call).
  void feed_new_blocks();

  // Per-block emitted row counts (counted modulo the first prime).
  const std::vector<std::pair<std::string, int64_t>>& block_rows() const { return block_rows_; }

  RankCertificate heuristic_certificate();

  // Upgrades a heuristic certificate.
  //  - claimed_nullity == 0: full column rank modulo one prime proves rank
  //    over Q; fully certified with no witnesses.
  //  - otherwise: verify supplied witnesses if they already span, else lift a
  //    modular nullspace basis through CRT + rational reconstruction. Every
  //    witness is verified at exact residual zero against every row, and
  //    independence is confirmed by a modular rank of the witness matrix.
  // On lift failure the prime set is doubled (up to 16) and retried; if that
  // fails the certificate stays heuristic with a note.
  RankCertificate certify(const RankCertificate& heuristic,
                          const std::vector<std::vector<BigInt>>& known_witnesses);

  // Exact rational nullspace basis as primitive integer vectors.
  std::vector<std::vector<BigInt>> lift_nullspace(std::string* error);

  // Exact residual check of witnesses against every row of the system.
  // Symmetry blocks are checked row by row; dense contraction rows are
  // checked through the system's class map once the symmetry rows passed.
  bool verify_witnesses(const std::vector<std::vector<BigInt>>& witnesses, std::string* note) const;

  const std::vector<uint64_t>& primes() const { return primes_; }

 private:
  bool grow_primes();

  const ConstraintSystem& sys_;
  std::vector<uint64_t> primes_;
  std::vector<std::unique_ptr<PrimeEliminator>> elim_;
  size_t fed_blocks_ = 0;
  std::vector<std::pair<std::string, int64_t>> block_rows_;
};

// Spec-level convenience wrappers.
RankCertificate multi_prime_nullity(const ConstraintSystem& system, int prime_count);
RankCertificate certify_nullity(const ConstraintSystem& system, const RankCertificate& heuristic,
                                const std::vector<std::vector<BigInt>>& known_witnesses = {});

// Balanced rational reconstruction of x mod m (|num|, den <= sqrt(m/2)).
std::optional<Rational> rational_reconstruct(const BigInt& x, const BigInt& m);

}  // namespace vcpcert

#endif
