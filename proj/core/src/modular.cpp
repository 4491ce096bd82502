#include "vcpcert/modular.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace vcpcert {

namespace {
constexpr uint64_t kPrimes[16] = {
    2147483647ull, 2147483629ull, 2147483587ull, 2147483579ull, 2147483563ull, 2147483549ull,
    2147483543ull, 2147483497ull, 2147483489ull, 2147483477ull, 2147483423ull, 2147483399ull,
    2147483353ull, 2147483323ull, 2147483269ull, 2147483249ull};
}

std::span<const uint64_t> prime_table() { return kPrimes; }

std::vector<uint64_t> default_primes(int k) {
  if (k < 1 || k > 16) throw std::invalid_argument("default_primes: k must be in [1,16]");
  return std::vector<uint64_t>(kPrimes, kPrimes + k);
}

uint64_t invmod(uint64_t a, uint64_t p) {
  // Fermat; p prime, a != 0 mod p
  uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

uint64_t bigint_mod(const BigInt& v, uint64_t p) {
  BigInt m = v % static_cast<unsigned long>(p);
  if (m < 0) m += static_cast<unsigned long>(p);
  return m.get_ui();
}

uint64_t rational_mod(const Rational& r, uint64_t p) {
  uint64_t num = bigint_mod(r.get_num(), p);
  uint64_t den = bigint_mod(r.get_den(), p);
  return num * invmod(den, p) % p;
}

PrimeEliminator::PrimeEliminator(uint64_t p, int64_t ncols) : p_(p), ncols_(ncols) {
  parent_.resize(ncols);
  for (int64_t i = 0; i < ncols; ++i) parent_[i] = i;
  ratio_.assign(ncols, 1);
  zero_.assign(ncols, 0);
}

PrimeEliminator::Resolution PrimeEliminator::resolve(int64_t col) {
  int64_t direct = parent_[col];
  if (direct == col) return {col, 1, zero_[col] != 0};
  if (parent_[direct] == direct) return {direct, ratio_[col], zero_[direct] != 0};
  // find root with ratio composition
  int64_t c = col;
  uint64_t r = 1;
  while (parent_[c] != c) {
    r = r * ratio_[c] % p_;
    c = parent_[c];
  }
  // second pass: compress paths of length >= 2
  int64_t walk = col;
  uint64_t acc = r;
  while (parent_[walk] != walk) {
    int64_t next = parent_[walk];
    uint64_t step = ratio_[walk];
    parent_[walk] = c;
    ratio_[walk] = static_cast<uint32_t>(acc);
    acc = acc * invmod(step, p_) % p_;
    walk = next;
  }
  return {c, r, zero_[c] != 0};
}

std::vector<ModEntry> PrimeEliminator::rewrite(std::span<const ModEntry> row) {
  std::vector<ModEntry> out;
  out.reserve(row.size());
  for (const ModEntry& e : row) {
    Resolution res = resolve(e.col);
    if (res.zero) continue;
    uint64_t v = static_cast<uint64_t>(e.val) * res.ratio % p_;
    if (v) out.push_back({res.root, static_cast<uint32_t>(v)});
  }
  std::sort(out.begin(), out.end(),
            [](const ModEntry& a, const ModEntry& b) { return a.col < b.col; });
  // combine duplicates
  size_t w = 0;
  for (size_t i = 0; i < out.size();) {
    int64_t c = out[i].col;
    uint64_t v = 0;
    while (i < out.size() && out[i].col == c) {
      v += out[i].val;
      if (v >= p_) v -= p_;
      ++i;
    }
    if (v) out[w++] = {c, static_cast<uint32_t>(v)};
  }
  out.resize(w);
  return out;
}

void PrimeEliminator::dispatch(std::vector<ModEntry>&& row, bool allow_core) {
  if (row.empty()) return;
  if (row.size() == 1) {
    int64_t r = row[0].col;
    if (!zero_[r]) {
      zero_[r] = 1;
      ++subst_rank_;
      ++subst_version_;
    }
    return;
  }
  if (row.size() == 2) {
    // a*x_u + b*x_v = 0; make the smaller column the root
    int64_t u = row[0].col, v = row[1].col;
    uint64_t a = row[0].val, b = row[1].val;
    // x_v = (-a/b) x_u
    parent_[v] = u;
    ratio_[v] = static_cast<uint32_t>((p_ - a) * invmod(b, p_) % p_);
    if (zero_[v]) zero_[u] = 1;  // v was a zeroed root: the class is zero
    ++subst_rank_;
    ++subst_version_;
    return;
  }
  assert(allow_core);
  (void)allow_core;
  core_.push_back(std::move(row));
}

void PrimeEliminator::add_row(std::span<const ModEntry> row) {
  dispatch(rewrite(row), true);
}

void PrimeEliminator::fold_row(const std::vector<ModEntry>& row) {
  // dense over universe positions; entries kept < 2^63 with lazy reduction
  // (one conditional subtract per update instead of a division)
  const size_t width = universe_.size();
  const uint64_t excess = (uint64_t(1) << 63) / p_ * p_;  // largest multiple of p <= 2^63
  std::vector<uint64_t> tmp(width, 0);
  for (const ModEntry& e : row) tmp[static_cast<size_t>(upos_.at(e.col))] = e.val;
  for (size_t pos = 0; pos < width; ++pos) {
    if (!tmp[pos]) continue;
    tmp[pos] %= p_;
    if (!tmp[pos]) continue;
    int32_t found = row_of_pos_[pos];
    if (found >= 0) {
      uint64_t f = p_ - tmp[pos];  // tmp += f * ech row (ech row has 1 at pivot)
      const uint32_t* er = ech_[static_cast<size_t>(found)].data();
      uint64_t* t = tmp.data();
      for (size_t j = pos; j < width; ++j) {
        uint64_t v = t[j] + f * er[j];
        t[j] = v - (excess & static_cast<uint64_t>(static_cast<int64_t>(v) >> 63));
      }
      tmp[pos] = 0;
    } else {
      uint64_t inv = invmod(tmp[pos], p_);
      std::vector<uint32_t> nr(width, 0);
      for (size_t j = pos; j < width; ++j) {
        uint64_t v = tmp[j] % p_;
        if (v) nr[j] = static_cast<uint32_t>(v * inv % p_);
      }
      row_of_pos_[pos] = static_cast<int32_t>(ech_.size());
      ech_.push_back(std::move(nr));
      ech_pivot_.push_back(static_cast<int32_t>(pos));
      return;
    }
  }
}

void PrimeEliminator::rebuild() {
  // fixpoint: rewrite all core rows; rows shrinking to <=2 nonzeros become
  // substitutions and everything is rewritten again
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::vector<ModEntry>> keep;
    keep.reserve(core_.size());
    for (auto& r : core_) {
      std::vector<ModEntry> w = rewrite(r);
      if (w.size() <= 2) {
        if (!w.empty()) {
          dispatch(std::move(w), false);
          changed = true;
        }
      } else {
        keep.push_back(std::move(w));
      }
    }
    core_ = std::move(keep);
  }
  universe_.clear();
  upos_.clear();
  for (const auto& r : core_)
    for (const ModEntry& e : r) universe_.push_back(e.col);
  std::sort(universe_.begin(), universe_.end());
  universe_.erase(std::unique(universe_.begin(), universe_.end()), universe_.end());
  for (size_t i = 0; i < universe_.size(); ++i) upos_[universe_[i]] = static_cast<int32_t>(i);
  ech_.clear();
  ech_pivot_.clear();
  row_of_pos_.assign(universe_.size(), -1);
  for (const auto& r : core_) fold_row(r);
  folded_ = core_.size();
  echelon_version_ = subst_version_;
  rref_done_ = false;
}

int64_t PrimeEliminator::rank() {
  if (echelon_version_ != subst_version_) {
    rebuild();
  } else if (folded_ < core_.size()) {
    // incremental: no substitution changed since the echelon was built
    bool need_rebuild = false;
    for (size_t i = folded_; i < core_.size() && !need_rebuild; ++i)
      for (const ModEntry& e : core_[i])
        if (!upos_.contains(e.col)) {
          need_rebuild = true;
          break;
        }
    if (need_rebuild) {
      rebuild();
    } else {
      for (size_t i = folded_; i < core_.size(); ++i) fold_row(core_[i]);
      folded_ = core_.size();
      rref_done_ = false;
    }
  }
  return subst_rank_ + static_cast<int64_t>(ech_.size());
}

void PrimeEliminator::ensure_rref() {
  rank();
  if (rref_done_) return;
  // sort echelon rows by pivot, then eliminate pivot columns upwards
  std::vector<size_t> order(ech_.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return ech_pivot_[a] < ech_pivot_[b]; });
  std::vector<std::vector<uint32_t>> rows;
  std::vector<int32_t> pivots;
  rows.reserve(ech_.size());
  for (size_t i : order) {
    rows.push_back(std::move(ech_[i]));
    pivots.push_back(ech_pivot_[i]);
  }
  const size_t width = universe_.size();
  for (size_t r = rows.size(); r-- > 0;) {
    for (size_t above = 0; above < r; ++above) {
      uint64_t c = rows[above][static_cast<size_t>(pivots[r])];
      if (!c) continue;
      uint64_t f = p_ - c;
      const std::vector<uint32_t>& pr = rows[r];
      std::vector<uint32_t>& ar = rows[above];
      for (size_t j = static_cast<size_t>(pivots[r]); j < width; ++j)
        if (pr[j]) ar[j] = static_cast<uint32_t>((ar[j] + f * pr[j]) % p_);
    }
  }
  ech_ = std::move(rows);
  ech_pivot_ = std::move(pivots);
  row_of_pos_.assign(universe_.size(), -1);
  for (size_t r = 0; r < ech_pivot_.size(); ++r)
    row_of_pos_[static_cast<size_t>(ech_pivot_[r])] = static_cast<int32_t>(r);
  rref_done_ = true;
}

std::vector<int64_t> PrimeEliminator::pivot_roots() {
  ensure_rref();
  std::vector<int64_t> out;
  out.reserve(ech_pivot_.size());
  for (int32_t pos : ech_pivot_) out.push_back(universe_[static_cast<size_t>(pos)]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int64_t> PrimeEliminator::free_roots() {
  ensure_rref();
  std::vector<uint8_t> pivot(universe_.size(), 0);
  for (int32_t pos : ech_pivot_) pivot[static_cast<size_t>(pos)] = 1;
  std::vector<int64_t> out;
  for (int64_t c = 0; c < ncols_; ++c) {
    if (parent_[c] != c || zero_[c]) continue;
    auto it = upos_.find(c);
    if (it != upos_.end() && pivot[static_cast<size_t>(it->second)]) continue;
    out.push_back(c);
  }
  return out;
}

std::vector<std::pair<int64_t, uint64_t>> PrimeEliminator::basis_on_roots(int64_t f) {
  ensure_rref();
  std::vector<std::pair<int64_t, uint64_t>> out;
  out.emplace_back(f, 1);
  auto it = upos_.find(f);
  if (it == upos_.end()) return out;  // free column outside the core: isolated
  const size_t fpos = static_cast<size_t>(it->second);
  for (size_t r = 0; r < ech_.size(); ++r) {
    uint64_t c = ech_[r][fpos];
    if (!c) continue;
    // pivot value: x_pivot = -c * x_f
    out.emplace_back(universe_[static_cast<size_t>(ech_pivot_[r])], p_ - c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int64_t bareiss_rank(std::vector<std::vector<BigInt>> m) {
  if (m.empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  BigInt prev = 1;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j) {
        BigInt num = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        m[i][j] = num / prev;  // exact by the Bareiss identity
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int64_t>(r);
}

}  // namespace vcpcert
