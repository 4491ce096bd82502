#include "vcpcert/linalg.hpp"

#include <cstdlib>

#include "vcpcert/errors.hpp"

namespace vcpcert {

BigInt denominator_lcm(std::span<const Rational> values) {
  BigInt l = 1;
  for (const Rational& v : values) {
    BigInt d = v.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

BigInt content(std::span<const BigInt> values) {
  BigInt g = 0;
  for (const BigInt& v : values) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  return g;
}

DenseMatrix DenseMatrix::identity(int n) {
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Rational dot(const DenseVector& u, const DenseVector& v) {
  Rational s = 0;
  for (size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

DenseVector matvec(const DenseMatrix& m, const DenseVector& v) {
  DenseVector out(m.nrows, Rational(0));
  for (int i = 0; i < m.nrows; ++i) {
    Rational s = 0;
    for (int j = 0; j < m.ncols; ++j) s += m.at(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

DenseMatrix matmul(const DenseMatrix& x, const DenseMatrix& y) {
  DenseMatrix out(x.nrows, y.ncols);
  for (int i = 0; i < x.nrows; ++i) {
    for (int k = 0; k < x.ncols; ++k) {
      const Rational& xv = x.at(i, k);
      if (is_zero(xv)) continue;
      for (int j = 0; j < y.ncols; ++j) out.at(i, j) += xv * y.at(k, j);
    }
  }
  return out;
}

DenseMatrix transpose(const DenseMatrix& m) {
  DenseMatrix out(m.ncols, m.nrows);
  for (int i = 0; i < m.nrows; ++i)
    for (int j = 0; j < m.ncols; ++j) out.at(j, i) = m.at(i, j);
  return out;
}

DenseMatrix sub(const DenseMatrix& x, const DenseMatrix& y) {
  DenseMatrix out(x.nrows, x.ncols);
  for (size_t i = 0; i < x.a.size(); ++i) out.a[i] = x.a[i] - y.a[i];
  return out;
}

DenseMatrix add_scaled(const DenseMatrix& x, const DenseMatrix& y, const Rational& s) {
  DenseMatrix out(x.nrows, x.ncols);
  for (size_t i = 0; i < x.a.size(); ++i) out.a[i] = x.a[i] + s * y.a[i];
  return out;
}

bool is_zero_matrix(const DenseMatrix& m) {
  for (const Rational& v : m.a)
    if (!is_zero(v)) return false;
  return true;
}

bool is_zero_vector(const DenseVector& v) {
  for (const Rational& c : v)
    if (!is_zero(c)) return false;
  return true;
}

DenseVector stereographic(std::span<const long> s) {
  const int n = static_cast<int>(s.size()) + 1;
  BigInt sum2 = 0;
  for (long c : s) sum2 += BigInt(c) * c;
  BigInt den = sum2 + 1;
  DenseVector v(n);
  for (int i = 0; i + 1 < n; ++i) {
    Rational r(BigInt(2 * s[i]), den);
    r.canonicalize();
    v[i] = r;
  }
  Rational last(sum2 - 1, den);
  last.canonicalize();
  v[n - 1] = last;
  return v;
}

DenseMatrix reflection(const DenseVector& z) {
  const int n = static_cast<int>(z.size());
  Rational zz = dot(z, z);
  if (is_zero(zz)) throw ZeroVectorError("reflection: zero vector");
  Rational f = Rational(2) / zz;
  DenseMatrix h = DenseMatrix::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h.at(i, j) -= f * z[i] * z[j];
  return h;
}

DenseMatrix projection_complement(std::span<const DenseVector> vs) {
  if (vs.empty()) throw NotOrthonormalError("projection_complement: empty list");
  const int n = static_cast<int>(vs[0].size());
  for (size_t a = 0; a < vs.size(); ++a) {
    for (size_t b = 0; b < vs.size(); ++b) {
      Rational g = dot(vs[a], vs[b]);
      if (g != Rational(a == b ? 1 : 0))
        throw NotOrthonormalError("projection_complement: Gram matrix is not the identity");
    }
  }
  DenseMatrix p = DenseMatrix::identity(n);
  for (const DenseVector& v : vs)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) p.at(i, j) -= v[i] * v[j];
  return p;
}

std::vector<BigInt> clear_denominators(std::span<const Rational> row) {
  BigInt l = denominator_lcm(row);
  std::vector<BigInt> out;
  out.reserve(row.size());
  for (const Rational& v : row) {
    BigInt scaled = v.get_num() * (l / v.get_den());
    out.push_back(scaled);
  }
  return out;
}

namespace {
Rational det_rec(const DenseMatrix& m, std::vector<int>& cols, int row) {
  const int k = static_cast<int>(cols.size());
  if (k == 1) return m.at(row, cols[0]);
  Rational acc = 0;
  for (int i = 0; i < k; ++i) {
    const Rational& pivot = m.at(row, cols[i]);
    if (is_zero(pivot)) continue;
    std::vector<int> rest;
    rest.reserve(k - 1);
    for (int j = 0; j < k; ++j)
      if (j != i) rest.push_back(cols[j]);
    Rational minor = det_rec(m, rest, row + 1);
    if (i % 2 == 0)
      acc += pivot * minor;
    else
      acc -= pivot * minor;
  }
  return acc;
}
}  // namespace

Rational determinant_exact(const DenseMatrix& m) {
  if (m.nrows != m.ncols || m.nrows > 8)
    throw std::invalid_argument("determinant_exact: square with n <= 8 required");
  std::vector<int> cols(m.ncols);
  for (int i = 0; i < m.ncols; ++i) cols[i] = i;
  return det_rec(m, cols, 0);
}

Rational killing_inner(const DenseMatrix& x, const DenseMatrix& y) {
  Rational tr = 0;
  for (int i = 0; i < x.nrows; ++i)
    for (int k = 0; k < x.ncols; ++k) tr += x.at(i, k) * y.at(k, i);
  return Rational(-1, 2) * tr;
}

}  // namespace vcpcert
