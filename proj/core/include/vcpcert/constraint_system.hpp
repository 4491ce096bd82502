#ifndef VCPCERT_CONSTRAINT_SYSTEM_HPP
#define VCPCERT_CONSTRAINT_SYSTEM_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "vcpcert/rational.hpp"
#include "vcpcert/tensor.hpp"

namespace vcpcert {

struct ExactEntry {
  int64_t col;
  BigInt val;
};

struct ModEntry {
  int64_t col;
  uint32_t val;
};

using ExactRowFn = std::function<void(std::span<const ExactEntry>)>;
using ModRowFn = std::function<void(std::span<const ModEntry>)>;

// One homogeneous family of integer constraint rows over the flattened tensor
// variables. Rows are generated on demand, in a fixed deterministic order;
// identically-zero rows are skipped. emit_exact delivers each row as the
// primitive integer row (denominators cleared, content divided out), which
// has the same nullspace as the defining rational functional.
class RowBlock {
 public:
  explicit RowBlock(std::string label) : label_(std::move(label)) {}
  virtual ~RowBlock() = default;

  const std::string& label() const { return label_; }
  virtual void emit_exact(const ExactRowFn& fn) const = 0;
  virtual void emit_mod(uint64_t p, const ModRowFn& fn) const = 0;

  // True for the +-1 index-permutation families that define a SignedClassMap;
  // witness verification treats those rows as the symmetry authority and may
  // compress the remaining (dense) rows through the map.
  virtual bool pure_symmetry() const { return false; }
  // True when rows are dense multilinear contractions, safe to verify via the
  // system's class map once the symmetry rows are verified.
  virtual bool compressible() const { return false; }

 private:
  std::string label_;
};

// Rows x_t + c * x_{sigma(t)} = 0 over all index tuples t, for a slot
// permutation sigma and c in {+1,-1}. Fixed points emit (1+c) x_t, dropped
// when c = -1.
class PermSymmetryBlock final : public RowBlock {
 public:
  PermSymmetryBlock(std::string label, int dim, std::vector<int> slot_perm, int coeff);
  void emit_exact(const ExactRowFn& fn) const override;
  void emit_mod(uint64_t p, const ModRowFn& fn) const override;
  bool pure_symmetry() const override { return true; }

 private:
  int dim_;
  std::vector<int> perm_;
  int coeff_;
};

// First Bianchi family: x_{ijkl} + x_{iklj} + x_{iljk} = 0 over all tuples.
class BianchiBlock final : public RowBlock {
 public:
  BianchiBlock(std::string label, int dim);
  void emit_exact(const ExactRowFn& fn) const override;
  void emit_mod(uint64_t p, const ModRowFn& fn) const override;

 private:
  int dim_;
};

// Dense sampled rows: each row is a signed sum of outer products of rational
// vectors, one slot per tensor index. Covers the first-CR entries, the
// torsion annihilation samples and the second-CR four-term rows.
class ContractionBlock final : public RowBlock {
 public:
  struct Term {
    int sign;
    std::vector<DenseVector> slots;  // one vector per tensor slot
  };
  struct RowSpec {
    std::vector<Term> terms;
  };

  ContractionBlock(std::string label, int dim, int rank, std::vector<RowSpec> rows);
  void emit_exact(const ExactRowFn& fn) const override;
  void emit_mod(uint64_t p, const ModRowFn& fn) const override;
  bool compressible() const override { return true; }

  const std::vector<RowSpec>& rows() const { return rows_; }
  int dim() const { return dim_; }
  int rank() const { return rank_; }

 private:
  int dim_;
  int rank_;
  int64_t ncols_;
  std::vector<RowSpec> rows_;
};

// Literal integer rows; used by tests and the rank-engine micro examples.
class ExplicitBlock final : public RowBlock {
 public:
  ExplicitBlock(std::string label, std::vector<std::vector<std::pair<int64_t, long>>> rows);
  void emit_exact(const ExactRowFn& fn) const override;
  void emit_mod(uint64_t p, const ModRowFn& fn) const override;

 private:
  std::vector<std::vector<std::pair<int64_t, long>>> rows_;
};

// A growable stack of row blocks over one flat variable space. Provenance is
// per block; a tensor satisfies the system iff every emitted row pairs to
// zero with its coefficient vector.
class ConstraintSystem {
 public:
  explicit ConstraintSystem(int64_t ncols) : ncols_(ncols) {}

  int64_t ncols() const { return ncols_; }
  void add_block(std::shared_ptr<const RowBlock> b) { blocks_.push_back(std::move(b)); }
  void stack(ConstraintSystem&& other);
  const std::vector<std::shared_ptr<const RowBlock>>& blocks() const { return blocks_; }

  void set_symmetry_map(std::shared_ptr<const SignedClassMap> m) { map_ = std::move(m); }
  const SignedClassMap* symmetry_map() const { return map_.get(); }

  // Header line (JSON object) followed by one "row col value" triple per
  // nonzero of every emitted row.
  void dump(std::ostream& os) const;

 private:
  int64_t ncols_;
  std::vector<std::shared_ptr<const RowBlock>> blocks_;
  std::shared_ptr<const SignedClassMap> map_;
};

}  // namespace vcpcert

#endif
