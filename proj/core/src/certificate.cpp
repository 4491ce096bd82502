#include "vcpcert/certificate.hpp"

#include <algorithm>
#include <thread>

namespace vcpcert {

std::string to_string(CertLevel level) {
  switch (level) {
    case CertLevel::heuristic: return "heuristic";
    case CertLevel::witness_certified: return "witness-certified";
    case CertLevel::fully_certified: return "fully-certified";
    case CertLevel::non_certified: return "non-certified";
  }
  return "?";
}

RankEngine::RankEngine(const ConstraintSystem& system, std::vector<uint64_t> primes)
    : sys_(system), primes_(std::move(primes)) {
  for (uint64_t p : primes_) elim_.push_back(std::make_unique<PrimeEliminator>(p, sys_.ncols()));
}

void RankEngine::feed_new_blocks() {
  const auto& blocks = sys_.blocks();
  if (fed_blocks_ >= blocks.size()) return;
  auto feed_one = [&](size_t prime_idx, bool count) {
    for (size_t b = fed_blocks_; b < blocks.size(); ++b) {
      int64_t rows = 0;
      blocks[b]->emit_mod(primes_[prime_idx], [&](std::span<const ModEntry> row) {
        elim_[prime_idx]->add_row(row);
        ++rows;
      });
      if (count) block_rows_.emplace_back(blocks[b]->label(), rows);
    }
  };
  std::vector<std::thread> threads;
  for (size_t i = 1; i < primes_.size(); ++i)
    threads.emplace_back([&, i] { feed_one(i, false); });
  feed_one(0, true);
  for (auto& t : threads) t.join();
  fed_blocks_ = blocks.size();
}

RankCertificate RankEngine::heuristic_certificate() {
  feed_new_blocks();
  RankCertificate cert;
  cert.ncols = sys_.ncols();
  std::vector<int64_t> ranks(primes_.size());
  {
    std::vector<std::thread> threads;
    for (size_t i = 1; i < primes_.size(); ++i)
      threads.emplace_back([&, i] { ranks[i] = elim_[i]->rank(); });
    ranks[0] = elim_[0]->rank();
    for (auto& t : threads) t.join();
  }
  int64_t max_rank = 0;
  for (size_t i = 0; i < primes_.size(); ++i) {
    cert.prime_ranks.emplace_back(primes_[i], ranks[i]);
    max_rank = std::max(max_rank, ranks[i]);
  }
  for (int64_t r : ranks) cert.primes_agree = cert.primes_agree && (r == max_rank);
  cert.claimed_nullity = cert.ncols - max_rank;
  cert.level = CertLevel::heuristic;
  return cert;
}

std::optional<Rational> rational_reconstruct(const BigInt& x, const BigInt& m) {
  BigInt bound;
  mpz_sqrt(bound.get_mpz_t(), BigInt(m / 2).get_mpz_t());
  BigInt r0 = m, r1 = x % m;
  if (r1 < 0) r1 += m;
  BigInt t0 = 0, t1 = 1;
  while (r1 > bound) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    BigInt t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0) return std::nullopt;
  BigInt num = r1, den = t1;
  if (den < 0) {
    den = -den;
    num = -num;
  }
  if (den > bound) return std::nullopt;
  // require num = x*den mod m (it does by construction) and gcd condition
  BigInt g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1) {
    num /= g;
    den /= g;
  }
  Rational out(num, den);
  out.canonicalize();
  return out;
}

namespace {

BigInt crt_combine(std::span<const uint64_t> residues, std::span<const uint64_t> primes) {
  BigInt x = 0, m = 1;
  for (size_t i = 0; i < primes.size(); ++i) {
    BigInt p(static_cast<unsigned long>(primes[i]));
    // solve x' = x mod m, x' = r_i mod p
    BigInt mi_inv;
    BigInt mm = m % p;
    mpz_invert(mi_inv.get_mpz_t(), mm.get_mpz_t(), p.get_mpz_t());
    BigInt diff = (BigInt(static_cast<unsigned long>(residues[i])) - x % p + p) % p;
    x += m * ((diff * mi_inv) % p);
    m *= p;
  }
  return x;
}

}  // namespace

std::vector<std::vector<BigInt>> RankEngine::lift_nullspace(std::string* error) {
  feed_new_blocks();
  for (auto& e : elim_) e->rank();
  // structural agreement across primes
  std::vector<int64_t> free0 = elim_[0]->free_roots();
  std::vector<int64_t> piv0 = elim_[0]->pivot_roots();
  for (size_t i = 1; i < elim_.size(); ++i) {
    if (elim_[i]->free_roots() != free0 || elim_[i]->pivot_roots() != piv0) {
      if (error) *error = "per-prime elimination structure disagrees";
      return {};
    }
  }
  const size_t k = primes_.size();
  std::vector<std::vector<BigInt>> out;
  out.reserve(free0.size());
  BigInt modulus = 1;
  for (uint64_t p : primes_) modulus *= static_cast<unsigned long>(p);

  for (int64_t f : free0) {
    // gather per-prime root values
    std::vector<std::vector<std::pair<int64_t, uint64_t>>> per_prime(k);
    for (size_t i = 0; i < k; ++i) per_prime[i] = elim_[i]->basis_on_roots(f);
    // union of root columns
    std::vector<int64_t> roots;
    for (const auto& v : per_prime)
      for (const auto& [c, val] : v) roots.push_back(c);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    // CRT + reconstruct root values
    std::vector<std::pair<int64_t, Rational>> root_vals;
    for (int64_t r : roots) {
      std::vector<uint64_t> residues(k, 0);
      for (size_t i = 0; i < k; ++i) {
        const auto& v = per_prime[i];
        auto it = std::lower_bound(v.begin(), v.end(), std::make_pair(r, uint64_t(0)));
        if (it != v.end() && it->first == r) residues[i] = it->second;
      }
      BigInt x = crt_combine(residues, primes_);
      auto q = rational_reconstruct(x, modulus);
      if (!q) {
        if (error) *error = "rational reconstruction failed";
        return {};
      }
      root_vals.emplace_back(r, *q);
    }
    // expand to full coordinates
    std::vector<Rational> full(static_cast<size_t>(sys_.ncols()));
    auto value_of_root = [&](int64_t r) -> const Rational* {
      auto it = std::lower_bound(root_vals.begin(), root_vals.end(), r,
                                 [](const auto& a, int64_t b) { return a.first < b; });
      if (it != root_vals.end() && it->first == r) return &it->second;
      return nullptr;
    };
    bool ok = true;
    for (int64_t c = 0; c < sys_.ncols() && ok; ++c) {
      auto res = elim_[0]->resolve(c);
      if (res.zero) continue;
      const Rational* rv = value_of_root(res.root);
      if (!rv || is_zero(*rv)) continue;
      if (res.ratio == 1) {
        full[c] = *rv;
      } else if (res.ratio == primes_[0] - 1) {
        full[c] = -*rv;
      } else {
        // general ratio: reconstruct the column value from all primes
        std::vector<uint64_t> residues(k, 0);
        for (size_t i = 0; i < k; ++i) {
          auto ri = elim_[i]->resolve(c);
          const auto& v = per_prime[i];
          auto it = std::lower_bound(v.begin(), v.end(), std::make_pair(ri.root, uint64_t(0)));
          uint64_t rootval = (it != v.end() && it->first == ri.root) ? it->second : 0;
          residues[i] = ri.zero ? 0 : ri.ratio * rootval % primes_[i];
        }
        BigInt x = crt_combine(residues, primes_);
        auto q = rational_reconstruct(x, modulus);
        if (!q) {
          ok = false;
          break;
        }
        full[c] = *q;
      }
    }
    if (!ok) {
      if (error) *error = "rational reconstruction failed";
      return {};
    }
    // primitive integer vector
    std::vector<BigInt> ints = clear_denominators(full);
    BigInt g = content(ints);
    if (g > 1)
      for (BigInt& v : ints) v /= g;
    out.push_back(std::move(ints));
  }
  return out;
}

bool RankEngine::verify_witnesses(const std::vector<std::vector<BigInt>>& witnesses,
                                  std::string* note) const {
  const SignedClassMap* map = sys_.symmetry_map();
  // 1. symmetry and sparse blocks: exact dot per row
  for (const auto& block : sys_.blocks()) {
    if (block->compressible()) continue;
    bool ok = true;
    block->emit_exact([&](std::span<const ExactEntry> row) {
      if (!ok) return;
      for (const auto& w : witnesses) {
        BigInt acc = 0;
        for (const ExactEntry& e : row) acc += e.val * w[static_cast<size_t>(e.col)];
        if (acc != 0) {
          ok = false;
          return;
        }
      }
    });
    if (!ok) {
      if (note) *note = "nonzero residual in block '" + block->label() + "'";
      return false;
    }
  }
  // 2. dense contraction blocks, compressed through the class map when
  //    available (valid now that the symmetry rows are verified)
  std::vector<std::vector<BigInt>> compressed;
  if (map) {
    compressed.reserve(witnesses.size());
    for (const auto& w : witnesses) {
      std::vector<BigInt> c(static_cast<size_t>(map->nclasses));
      for (int32_t cls = 0; cls < map->nclasses; ++cls)
        c[cls] = w[static_cast<size_t>(map->representative_of[cls])];
      compressed.push_back(std::move(c));
    }
  }
  for (const auto& block : sys_.blocks()) {
    if (!block->compressible()) continue;
    bool ok = true;
    std::vector<BigInt> crow(map ? static_cast<size_t>(map->nclasses) : 0);
    block->emit_exact([&](std::span<const ExactEntry> row) {
      if (!ok) return;
      if (map) {
        for (auto& v : crow) v = 0;
        for (const ExactEntry& e : row) {
          int32_t cls = map->class_of[static_cast<size_t>(e.col)];
          if (cls < 0) continue;
          if (map->sign_of[static_cast<size_t>(e.col)] > 0)
            crow[cls] += e.val;
          else
            crow[cls] -= e.val;
        }
        for (const auto& cw : compressed) {
          BigInt acc = 0;
          for (size_t i = 0; i < crow.size(); ++i)
            if (crow[i] != 0 && cw[i] != 0) acc += crow[i] * cw[i];
          if (acc != 0) {
            ok = false;
            return;
          }
        }
      } else {
        for (const auto& w : witnesses) {
          BigInt acc = 0;
          for (const ExactEntry& e : row) acc += e.val * w[static_cast<size_t>(e.col)];
          if (acc != 0) {
            ok = false;
            return;
          }
        }
      }
    });
    if (!ok) {
      if (note) *note = "nonzero residual in block '" + block->label() + "'";
      return false;
    }
  }
  return true;
}

bool RankEngine::grow_primes() {
  size_t target = std::min<size_t>(primes_.size() * 2, prime_table().size());
  if (target <= primes_.size()) return false;
  auto table = prime_table();
  while (primes_.size() < target) {
    uint64_t p = table[primes_.size()];
    primes_.push_back(p);
    elim_.push_back(std::make_unique<PrimeEliminator>(p, sys_.ncols()));
    // feed the new eliminator everything so far
    for (size_t b = 0; b < fed_blocks_; ++b)
      sys_.blocks()[b]->emit_mod(p, [&](std::span<const ModEntry> row) {
        elim_.back()->add_row(row);
      });
  }
  return true;
}

RankCertificate RankEngine::certify(const RankCertificate& heuristic,
                                    const std::vector<std::vector<BigInt>>& known_witnesses) {
  RankCertificate cert = heuristic;
  if (cert.claimed_nullity == 0) {
    // full column rank modulo one prime already proves rank over Q
    cert.level = CertLevel::fully_certified;
    return cert;
  }
  std::vector<std::vector<BigInt>> witnesses;
  if (static_cast<int64_t>(known_witnesses.size()) == cert.claimed_nullity) {
    witnesses = known_witnesses;
  } else {
    std::string err;
    witnesses = lift_nullspace(&err);
    if (witnesses.empty() || static_cast<int64_t>(witnesses.size()) != cert.claimed_nullity) {
      if (grow_primes()) {
        feed_new_blocks();
        RankCertificate h2 = heuristic_certificate();
        return certify(h2, known_witnesses);
      }
      cert.note = "lift failed: " + err;
      return cert;
    }
  }
  std::string note;
  if (!verify_witnesses(witnesses, &note)) {
    cert.note = "witness mismatch: " + note;
    return cert;  // stays heuristic
  }
  cert.witness_count = static_cast<int64_t>(witnesses.size());
  cert.level = CertLevel::witness_certified;
  // independence: rank of the witness matrix modulo a fresh prime
  uint64_t p = prime_table()[primes_.size() < prime_table().size() ? primes_.size() : 0];
  PrimeEliminator indep(p, sys_.ncols());
  std::vector<ModEntry> row;
  for (const auto& w : witnesses) {
    row.clear();
    for (size_t c = 0; c < w.size(); ++c) {
      if (w[c] == 0) continue;
      uint64_t v = bigint_mod(w[c], p);
      if (v) row.push_back({static_cast<int64_t>(c), static_cast<uint32_t>(v)});
    }
    indep.add_row(row);
  }
  if (indep.rank() == cert.claimed_nullity) {
    cert.level = CertLevel::fully_certified;
  } else {
    cert.note = "witness independence not confirmed mod " + std::to_string(p);
  }
  return cert;
}

RankCertificate multi_prime_nullity(const ConstraintSystem& system, int prime_count) {
  RankEngine engine(system, default_primes(prime_count));
  return engine.heuristic_certificate();
}

RankCertificate certify_nullity(const ConstraintSystem& system, const RankCertificate& heuristic,
                                const std::vector<std::vector<BigInt>>& known_witnesses) {
  RankEngine engine(system, default_primes(static_cast<int>(heuristic.prime_ranks.size())));
  return engine.certify(heuristic, known_witnesses);
}

}  // namespace vcpcert
