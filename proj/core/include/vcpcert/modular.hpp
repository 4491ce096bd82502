#ifndef VCPCERT_MODULAR_HPP
#define VCPCERT_MODULAR_HPP

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "vcpcert/constraint_system.hpp"
#include "vcpcert/rational.hpp"

namespace vcpcert {

// Deterministic descending list of the 16 largest primes below 2^31; the
// default prime count is 3. Word-size residues leave headroom for delayed
// reduction in the elimination inner loops.
std::span<const uint64_t> prime_table();
std::vector<uint64_t> default_primes(int k);

uint64_t invmod(uint64_t a, uint64_t p);
uint64_t rational_mod(const Rational& r, uint64_t p);
uint64_t bigint_mod(const BigInt& v, uint64_t p);

// Sparse-aware Gaussian elimination over F_p with structural preprocessing:
// rows with one nonzero zero out a variable, rows with two nonzeros become
// substitutions x_col = ratio * x_root held in a union-find with
// multiplicative path weights. The symmetry families of the constraint
// systems are exactly such rows, so they eliminate ~90% of the variables
// before the dense phase ever runs. Remaining rows are rewritten over class
// roots and reduced into a dense row-echelon core.
//
// Rank is exact for the row multiset reduced mod p, hence always a lower
// bound for the rank over Q of the integer system. Deterministic given the
// row order.
class PrimeEliminator {
 public:
  PrimeEliminator(uint64_t p, int64_t ncols);

  uint64_t prime() const { return p_; }
  int64_t ncols() const { return ncols_; }

  void add_row(std::span<const ModEntry> row);
  int64_t rank();
  int64_t nullity() { return ncols_ - rank(); }

  struct Resolution {
    int64_t root;
    uint64_t ratio;  // x_col = ratio * x_root
    bool zero;
  };
  Resolution resolve(int64_t col);

  // Free columns: roots that are neither zeroed nor dense-phase pivots
  // (includes columns never touched by any row). Sorted ascending.
  std::vector<int64_t> free_roots();
  std::vector<int64_t> pivot_roots();

  // Nullspace basis vector attached to a free root f: x_f = 1, all other free
  // roots 0, pivot roots determined by the reduced echelon core. Returns the
  // nonzero values on root columns.
  std::vector<std::pair<int64_t, uint64_t>> basis_on_roots(int64_t f);

 private:
  void rebuild();
  void fold_row(const std::vector<ModEntry>& row);
  std::vector<ModEntry> rewrite(std::span<const ModEntry> row);
  void dispatch(std::vector<ModEntry>&& row, bool allow_core);
  void ensure_rref();

  uint64_t p_;
  int64_t ncols_;
  std::vector<int64_t> parent_;  // parent_[c] == c for roots
  std::vector<uint32_t> ratio_;  // vs parent
  std::vector<uint8_t> zero_;    // valid on roots
  int64_t subst_rank_ = 0;

  std::vector<std::vector<ModEntry>> core_;
  size_t folded_ = 0;
  uint64_t subst_version_ = 0;
  uint64_t echelon_version_ = ~0ull;

  std::vector<int64_t> universe_;  // sorted root cols spanned by the echelon
  std::unordered_map<int64_t, int32_t> upos_;
  std::vector<std::vector<uint32_t>> ech_;  // echelon rows, dense over universe
  std::vector<int32_t> ech_pivot_;          // pivot position per echelon row
  std::vector<int32_t> row_of_pos_;         // pivot position -> echelon row, -1 if none
  bool rref_done_ = false;
};

// Exact fraction-free (Bareiss) rank over the integers; cross-validation path
// for small systems only (entry growth is exponential in the rank).
int64_t bareiss_rank(std::vector<std::vector<BigInt>> m);

}  // namespace vcpcert

#endif
