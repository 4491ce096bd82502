#include "vcpcert/constraint_system.hpp"

#include <ostream>

#include "vcpcert/modular.hpp"

namespace vcpcert {

namespace {

// flat index walker for rank-r dim-n tensors, row-major (last slot fastest)
template <typename Fn>
void for_each_tuple(int dim, int rank, Fn&& fn) {
  std::vector<int> idx(rank, 0);
  while (true) {
    fn(std::span<const int>(idx));
    int s = rank - 1;
    while (s >= 0 && ++idx[s] == dim) {
      idx[s] = 0;
      --s;
    }
    if (s < 0) break;
  }
}

int64_t flat_of(std::span<const int> idx, int dim) {
  int64_t f = 0;
  for (int v : idx) f = f * dim + v;
  return f;
}

}  // namespace

PermSymmetryBlock::PermSymmetryBlock(std::string label, int dim, std::vector<int> slot_perm,
                                     int coeff)
    : RowBlock(std::move(label)), dim_(dim), perm_(std::move(slot_perm)), coeff_(coeff) {}

void PermSymmetryBlock::emit_exact(const ExactRowFn& fn) const {
  const int rank = static_cast<int>(perm_.size());
  std::vector<ExactEntry> row;
  std::vector<int> moved(rank);
  for_each_tuple(dim_, rank, [&](std::span<const int> idx) {
    for (int s = 0; s < rank; ++s) moved[s] = idx[perm_[s]];
    int64_t a = flat_of(idx, dim_);
    int64_t b = flat_of(moved, dim_);
    row.clear();
    if (a == b) {
      if (coeff_ == -1) return;  // identically zero
      row.push_back({a, BigInt(2)});
    } else {
      if (a < b) {
        row.push_back({a, BigInt(1)});
        row.push_back({b, BigInt(coeff_)});
      } else {
        row.push_back({b, BigInt(coeff_)});
        row.push_back({a, BigInt(1)});
      }
    }
    fn(row);
  });
}

void PermSymmetryBlock::emit_mod(uint64_t p, const ModRowFn& fn) const {
  const int rank = static_cast<int>(perm_.size());
  std::vector<ModEntry> row;
  std::vector<int> moved(rank);
  const uint32_t neg1 = static_cast<uint32_t>(p - 1);
  for_each_tuple(dim_, rank, [&](std::span<const int> idx) {
    for (int s = 0; s < rank; ++s) moved[s] = idx[perm_[s]];
    int64_t a = flat_of(idx, dim_);
    int64_t b = flat_of(moved, dim_);
    row.clear();
    if (a == b) {
      if (coeff_ == -1) return;
      row.push_back({a, 2u});
    } else {
      uint32_t cb = coeff_ == 1 ? 1u : neg1;
      if (a < b) {
        row.push_back({a, 1u});
        row.push_back({b, cb});
      } else {
        row.push_back({b, cb});
        row.push_back({a, 1u});
      }
    }
    fn(row);
  });
}

BianchiBlock::BianchiBlock(std::string label, int dim) : RowBlock(std::move(label)), dim_(dim) {}

namespace {
template <typename Entry, typename Value>
void emit_bianchi(int dim, const std::function<void(std::span<const Entry>)>& fn,
                  const Value& one) {
  std::vector<Entry> row;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        for (int l = 0; l < dim; ++l) {
          int64_t f1 = ((static_cast<int64_t>(i) * dim + j) * dim + k) * dim + l;
          int64_t f2 = ((static_cast<int64_t>(i) * dim + k) * dim + l) * dim + j;
          int64_t f3 = ((static_cast<int64_t>(i) * dim + l) * dim + j) * dim + k;
          row.clear();
          row.push_back({f1, one});
          row.push_back({f2, one});
          row.push_back({f3, one});
          std::sort(row.begin(), row.end(),
                    [](const Entry& a, const Entry& b) { return a.col < b.col; });
          // combine equal columns
          std::vector<Entry> out;
          for (auto& e : row) {
            if (!out.empty() && out.back().col == e.col)
              out.back().val = out.back().val + e.val;
            else
              out.push_back(std::move(e));
          }
          fn(out);
        }
}
}  // namespace

void BianchiBlock::emit_exact(const ExactRowFn& fn) const {
  emit_bianchi<ExactEntry, BigInt>(dim_, fn, BigInt(1));
}

void BianchiBlock::emit_mod(uint64_t p, const ModRowFn& fn) const {
  (void)p;
  emit_bianchi<ModEntry, uint32_t>(dim_, fn, 1u);
}

ContractionBlock::ContractionBlock(std::string label, int dim, int rank,
                                   std::vector<RowSpec> rows)
    : RowBlock(std::move(label)), dim_(dim), rank_(rank), rows_(std::move(rows)) {
  ncols_ = 1;
  for (int i = 0; i < rank_; ++i) ncols_ *= dim_;
}

namespace {

// integer form of a slot vector: entries * (lcm of denominators)
struct ScaledSlot {
  std::vector<BigInt> ints;
  BigInt scale;
};

ScaledSlot scale_slot(const DenseVector& slot) {
  ScaledSlot out;
  out.scale = denominator_lcm(slot);
  out.ints = clear_denominators(slot);
  return out;
}

}  // namespace

void ContractionBlock::emit_exact(const ExactRowFn& fn) const {
  // Integerize each slot (scale by its denominator lcm), accumulate terms
  // over the integers, bring terms to the common scale, then divide the row
  // by its content: the primitive integer row of the rational functional.
  std::vector<BigInt> dense(static_cast<size_t>(ncols_));
  std::vector<ExactEntry> row;
  for (const RowSpec& spec : rows_) {
    std::vector<std::vector<BigInt>> term_rows;
    BigInt common = 1;
    std::vector<BigInt> scales;
    for (const Term& t : spec.terms) {
      std::vector<BigInt> acc{BigInt(t.sign)};
      BigInt scale = 1;
      for (const DenseVector& slot : t.slots) {
        ScaledSlot ss = scale_slot(slot);
        scale *= ss.scale;
        std::vector<BigInt> next(acc.size() * ss.ints.size());
        size_t pos = 0;
        for (const BigInt& a : acc)
          for (const BigInt& s : ss.ints) next[pos++] = a * s;
        acc = std::move(next);
      }
      mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), scale.get_mpz_t());
      scales.push_back(std::move(scale));
      term_rows.push_back(std::move(acc));
    }
    for (auto& c : dense) c = 0;
    for (size_t t = 0; t < term_rows.size(); ++t) {
      BigInt mult = common / scales[t];
      for (size_t f = 0; f < dense.size(); ++f)
        if (term_rows[t][f] != 0) dense[f] += mult * term_rows[t][f];
    }
    row.clear();
    for (int64_t f = 0; f < ncols_; ++f)
      if (dense[f] != 0) row.push_back({f, dense[f]});
    if (row.empty()) continue;
    std::vector<BigInt> vals;
    vals.reserve(row.size());
    for (const auto& e : row) vals.push_back(e.val);
    BigInt g = content(vals);
    if (g > 1)
      for (auto& e : row) e.val /= g;
    fn(row);
  }
}

void ContractionBlock::emit_mod(uint64_t p, const ModRowFn& fn) const {
  // Rows are emitted up to one positive scalar (the common denominator lcm of
  // the row's terms), which leaves rank and nullspace unchanged. Per-term
  // multipliers bring every term to that common scale. Falls back to exact
  // residues in the (never observed) case p divides the common scale.
  std::vector<uint64_t> dense(static_cast<size_t>(ncols_));
  std::vector<ModEntry> row;
  std::vector<uint64_t> sm;
  for (const RowSpec& spec : rows_) {
    BigInt common = 1;
    std::vector<BigInt> scales;
    scales.reserve(spec.terms.size());
    for (const Term& t : spec.terms) {
      BigInt scale = 1;
      for (const DenseVector& slot : t.slots) scale *= denominator_lcm(slot);
      mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), scale.get_mpz_t());
      scales.push_back(std::move(scale));
    }
    const bool scaled_route = bigint_mod(common, p) != 0;
    std::fill(dense.begin(), dense.end(), 0);
    for (size_t ti = 0; ti < spec.terms.size(); ++ti) {
      const Term& t = spec.terms[ti];
      uint64_t head = t.sign >= 0 ? static_cast<uint64_t>(t.sign)
                                  : p - static_cast<uint64_t>(-t.sign);
      if (scaled_route) head = head * bigint_mod(common / scales[ti], p) % p;
      std::vector<uint64_t> acc{head};
      for (const DenseVector& slot : t.slots) {
        sm.resize(slot.size());
        if (scaled_route) {
          BigInt lcm = denominator_lcm(slot);
          for (size_t i = 0; i < slot.size(); ++i) {
            BigInt scaled = slot[i].get_num() * (lcm / slot[i].get_den());
            sm[i] = bigint_mod(scaled, p);
          }
        } else {
          for (size_t i = 0; i < slot.size(); ++i) sm[i] = rational_mod(slot[i], p);
        }
        std::vector<uint64_t> next(acc.size() * sm.size());
        size_t pos = 0;
        for (uint64_t a : acc)
          for (uint64_t s : sm) next[pos++] = a * s % p;
        acc = std::move(next);
      }
      for (size_t f = 0; f < dense.size(); ++f) {
        dense[f] += acc[f];
        if (dense[f] >= p) dense[f] -= p;
      }
    }
    row.clear();
    for (int64_t f = 0; f < ncols_; ++f)
      if (dense[f]) row.push_back({f, static_cast<uint32_t>(dense[f])});
    if (row.empty()) continue;
    fn(row);
  }
}

ExplicitBlock::ExplicitBlock(std::string label,
                             std::vector<std::vector<std::pair<int64_t, long>>> rows)
    : RowBlock(std::move(label)), rows_(std::move(rows)) {}

void ExplicitBlock::emit_exact(const ExactRowFn& fn) const {
  std::vector<ExactEntry> row;
  for (const auto& r : rows_) {
    row.clear();
    for (const auto& [c, v] : r)
      if (v != 0) row.push_back({c, BigInt(v)});
    if (!row.empty()) fn(row);
  }
}

void ExplicitBlock::emit_mod(uint64_t p, const ModRowFn& fn) const {
  std::vector<ModEntry> row;
  for (const auto& r : rows_) {
    row.clear();
    for (const auto& [c, v] : r) {
      long m = v % static_cast<long>(p);
      if (m < 0) m += static_cast<long>(p);
      if (m != 0) row.push_back({c, static_cast<uint32_t>(m)});
    }
    if (!row.empty()) fn(row);
  }
}

void ConstraintSystem::stack(ConstraintSystem&& other) {
  for (auto& b : other.blocks_) blocks_.push_back(std::move(b));
  if (!map_ && other.map_) map_ = std::move(other.map_);
}

void ConstraintSystem::dump(std::ostream& os) const {
  // count rows first
  int64_t nrows = 0;
  std::vector<std::pair<std::string, int64_t>> counts;
  for (const auto& b : blocks_) {
    int64_t n = 0;
    b->emit_exact([&](std::span<const ExactEntry>) { ++n; });
    counts.emplace_back(b->label(), n);
    nrows += n;
  }
  os << "{\"format\":\"vcpcert-system\",\"version\":1,\"ncols\":" << ncols_
     << ",\"nrows\":" << nrows << ",\"blocks\":[";
  for (size_t i = 0; i < counts.size(); ++i) {
    if (i) os << ",";
    os << "{\"label\":\"" << counts[i].first << "\",\"rows\":" << counts[i].second << "}";
  }
  os << "]}\n";
  int64_t r = 0;
  for (const auto& b : blocks_) {
    b->emit_exact([&](std::span<const ExactEntry> row) {
      for (const auto& e : row) os << r << " " << e.col << " " << e.val.get_str() << "\n";
      ++r;
    });
  }
}

}  // namespace vcpcert
