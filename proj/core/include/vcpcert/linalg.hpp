#ifndef VCPCERT_LINALG_HPP
#define VCPCERT_LINALG_HPP

#include <span>
#include <vector>

#include "vcpcert/rational.hpp"

namespace vcpcert {

using DenseVector = std::vector<Rational>;

// Small dense matrix over exact rationals, row-major. Everything here stays
// within the <= 8-dimensional geometry; the big systems live elsewhere.
struct DenseMatrix {
  int nrows = 0;
  int ncols = 0;
  std::vector<Rational> a;

  DenseMatrix() = default;
  DenseMatrix(int r, int c) : nrows(r), ncols(c), a(static_cast<size_t>(r) * c) {}

  Rational& at(int i, int j) { return a[static_cast<size_t>(i) * ncols + j]; }
  const Rational& at(int i, int j) const { return a[static_cast<size_t>(i) * ncols + j]; }

  static DenseMatrix identity(int n);
  bool operator==(const DenseMatrix&) const = default;
};

Rational dot(const DenseVector& u, const DenseVector& v);
DenseVector matvec(const DenseMatrix& m, const DenseVector& v);
DenseMatrix matmul(const DenseMatrix& x, const DenseMatrix& y);
DenseMatrix transpose(const DenseMatrix& m);
DenseMatrix sub(const DenseMatrix& x, const DenseMatrix& y);
DenseMatrix add_scaled(const DenseMatrix& x, const DenseMatrix& y, const Rational& s);
bool is_zero_matrix(const DenseMatrix& m);
bool is_zero_vector(const DenseVector& v);

// Inverse stereographic projection of an integer point onto the unit sphere
// S^{n-1}, n = s.size()+1: coordinates 2*s_i/(1+|s|^2), last (|s|^2-1)/(1+|s|^2).
// The image is exactly unit for every integer input.
DenseVector stereographic(std::span<const long> s);

// Householder reflection H = I - (2/<z,z>) z z^T. H is orthogonal, symmetric,
// Hz = -z and Hw = w for w perpendicular to z. Throws ZeroVectorError on z = 0.
DenseMatrix reflection(const DenseVector& z);

// P = I - sum v_i v_i^T for pairwise orthonormal v_i. P^2 = P, P^T = P,
// P v_i = 0. Throws NotOrthonormalError when the Gram matrix is not the identity.
DenseMatrix projection_complement(std::span<const DenseVector> vs);

// Scales a rational row by the lcm of its denominators; the result is an
// integer row with the same zero set and sign pattern.
std::vector<BigInt> clear_denominators(std::span<const Rational> row);

// Exact determinant by cofactor expansion (division-free), n <= 8 only.
Rational determinant_exact(const DenseMatrix& m);

// Killing metric on so(n): <X,Y> = -1/2 tr(XY).
Rational killing_inner(const DenseMatrix& x, const DenseMatrix& y);

}  // namespace vcpcert

#endif
