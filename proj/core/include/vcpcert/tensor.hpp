#ifndef VCPCERT_TENSOR_HPP
#define VCPCERT_TENSOR_HPP

#include <cstdint>
#include <vector>

#include "vcpcert/linalg.hpp"

namespace vcpcert {

// Rank-4 coefficient array over exact rationals with the fixed flattening
// index(i,j,k,l) = l + n*k + n^2*j + n^3*i. Houses curvature variables R_ijkl
// (convention R_ijkl = <R(e_i,e_j)e_k, e_l>) and dim-7 torsion variables
// A_ijkl. No symmetry is imposed at the type level.
struct Tensor4 {
  int n = 0;
  std::vector<Rational> coeffs;

  Tensor4() = default;
  explicit Tensor4(int dim) : n(dim), coeffs(static_cast<size_t>(dim) * dim * dim * dim) {}

  size_t index(int i, int j, int k, int l) const {
    return static_cast<size_t>(((i * n + j) * n + k)) * n + l;
  }
  Rational& at(int i, int j, int k, int l) { return coeffs[index(i, j, k, l)]; }
  const Rational& at(int i, int j, int k, int l) const { return coeffs[index(i, j, k, l)]; }

  bool operator==(const Tensor4&) const = default;
};

// Rank-5 analogue for the dim-8 torsion space inside V* (x) Lambda^4 V*:
// index(i,j,k,l,m) = m + n*l + n^2*k + n^3*j + n^4*i.
struct Tensor5 {
  int n = 0;
  std::vector<Rational> coeffs;

  Tensor5() = default;
  explicit Tensor5(int dim)
      : n(dim), coeffs(static_cast<size_t>(dim) * dim * dim * dim * dim) {}

  size_t index(int i, int j, int k, int l, int m) const {
    return static_cast<size_t>((((i * n + j) * n + k) * n + l)) * n + m;
  }
  Rational& at(int i, int j, int k, int l, int m) { return coeffs[index(i, j, k, l, m)]; }
  const Rational& at(int i, int j, int k, int l, int m) const {
    return coeffs[index(i, j, k, l, m)];
  }
};

// Signed canonicalization of a flat variable space under an index-permutation
// symmetry group: every flat index maps to (class id, sign), or to class -1
// when the symmetry forces the coordinate to vanish. Used to compress dense
// rows and witnesses once a vector is known to satisfy the symmetry rows.
struct SignedClassMap {
  int64_t ncols_full = 0;
  int32_t nclasses = 0;
  std::vector<int32_t> class_of;           // -1 => forced zero
  std::vector<int8_t> sign_of;             // 0 on forced-zero columns
  std::vector<int64_t> representative_of;  // class id -> a flat index with sign +1

  // Curvature symmetries: antisymmetry in (i,j), antisymmetry in (k,l), and
  // pair exchange (ij)<->(kl). 231 classes for n=7, 406 for n=8.
  static SignedClassMap curvature(int n);

  // First slot free, last `tail` slots fully antisymmetric, on a rank
  // (1+tail) tensor of dimension n. 245 classes for (7,3), 560 for (8,4).
  static SignedClassMap head_tail_antisym(int n, int tail);
};

// Constant-sectional-curvature witness R_ijkl = delta_jk delta_il - delta_ik delta_jl.
// Solves the curvature symmetry+Bianchi rows and every first-CR row exactly.
Tensor4 curvature_identity_witness(int n);

// Drops all components with any index 0 (the real octonion direction),
// reindexing 1..7 -> 0..6.
Tensor4 restrict_curvature_8to7(const Tensor4& r8);

// Contracts the unit vector xi into the first slot of the 4-form part and
// expresses the rest in the orthonormal basis of xi-perp from
// orthonormal_complement_basis: out(a;b,c,d) = A(e_a; xi ^ e_b ^ e_c ^ e_d).
Tensor4 restrict_torsion_8to7(const Tensor5& a8, const DenseVector& xi);

}  // namespace vcpcert

#endif
