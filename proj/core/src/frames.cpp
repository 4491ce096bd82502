#include "vcpcert/frames.hpp"

#include "vcpcert/cross_product.hpp"
#include "vcpcert/errors.hpp"

namespace vcpcert {

namespace {

std::vector<DenseVector> matrix_rows(const DenseMatrix& m) {
  std::vector<DenseVector> rows(m.nrows);
  for (int i = 0; i < m.nrows; ++i) {
    rows[i].assign(m.a.begin() + static_cast<size_t>(i) * m.ncols,
                   m.a.begin() + static_cast<size_t>(i + 1) * m.ncols);
  }
  return rows;
}

bool gram_is_identity(const std::vector<DenseVector>& rows) {
  for (size_t a = 0; a < rows.size(); ++a)
    for (size_t b = a; b < rows.size(); ++b)
      if (dot(rows[a], rows[b]) != Rational(a == b ? 1 : 0)) return false;
  return true;
}

DenseVector vec_sub(const DenseVector& a, const DenseVector& b) {
  DenseVector out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

// Reflect rows[start..] through the hyperplane orthogonal to z; earlier rows
// are orthogonal to z by construction and would be fixed anyway.
void reflect_tail(std::vector<DenseVector>& rows, const DenseVector& z, size_t start) {
  if (is_zero_vector(z)) return;  // target already in place: identity
  DenseMatrix h = reflection(z);
  for (size_t i = start; i < rows.size(); ++i) rows[i] = matvec(h, rows[i]);
}

}  // namespace

DenseMatrix random_orthogonal(int n, int k, Rng& rng, int range) {
  DenseMatrix q = DenseMatrix::identity(n);
  for (int r = 0; r < k; ++r) {
    std::vector<long> s(n - 1);
    for (long& c : s) c = static_cast<long>(rng.below(static_cast<uint64_t>(range) + 1));
    q = matmul(q, reflection(stereographic(s)));
  }
  return q;
}

Frame random_pair7(Rng& rng, int range) {
  DenseMatrix q = random_orthogonal(7, 2, rng, range);
  auto rows = matrix_rows(q);
  return Frame{FrameKind::pair7, {rows[0], rows[1]}};
}

Frame random_triple7(Rng& rng, int range) {
  DenseMatrix q = random_orthogonal(7, 3, rng, range);
  auto rows = matrix_rows(q);
  return Frame{FrameKind::triple7, {rows[0], rows[1], rows[2]}};
}

Frame random_triple8(Rng& rng, int range) {
  DenseMatrix q = random_orthogonal(8, 3, rng, range);
  auto rows = matrix_rows(q);
  return Frame{FrameKind::triple8, {rows[0], rows[1], rows[2]}};
}

namespace {

Frame hermitian_frame7_once(Rng& rng, int range) {
  const auto& cp = CrossProduct7::instance();
  auto rows = matrix_rows(random_orthogonal(7, 2, rng, range));
  DenseVector v = rows[0];
  DenseVector w1 = rows[1];
  DenseVector w4 = cp.cross(v, w1);
  reflect_tail(rows, vec_sub(w4, rows[2]), 2);
  rows[2] = w4;
  DenseVector w2 = rows[3];
  DenseVector w5 = cp.cross(v, w2);
  reflect_tail(rows, vec_sub(w5, rows[4]), 4);
  rows[4] = w5;
  DenseVector w3 = rows[5];
  DenseVector w6 = cp.cross(v, w3);
  return Frame{FrameKind::hermitian7, {v, w1, w2, w3, w4, w5, w6}};
}

Frame hermitian_frame8_once(Rng& rng, int range) {
  const auto& cp = CrossProduct8::instance();
  auto rows = matrix_rows(random_orthogonal(8, 3, rng, range));
  DenseVector v1 = rows[0];
  DenseVector v2 = rows[1];
  DenseVector w1 = rows[2];
  DenseVector w4 = cp.cross(v1, v2, w1);
  reflect_tail(rows, vec_sub(w4, rows[3]), 3);
  rows[3] = w4;
  DenseVector w2 = rows[4];
  DenseVector w5 = cp.cross(v1, v2, w2);
  reflect_tail(rows, vec_sub(w5, rows[5]), 5);
  rows[5] = w5;
  DenseVector w3 = rows[6];
  DenseVector w6 = cp.cross(v1, v2, w3);
  return Frame{FrameKind::hermitian8, {v1, v2, w1, w2, w3, w4, w5, w6}};
}

}  // namespace

Frame hermitian_frame7(Rng& rng, int range) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    Frame f = hermitian_frame7_once(rng, range);
    if (verify_frame(f)) return f;
  }
  throw DegenerateDrawError("hermitian_frame7: repeated degenerate draws");
}

Frame hermitian_frame8(Rng& rng, int range) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    Frame f = hermitian_frame8_once(rng, range);
    if (verify_frame(f)) return f;
  }
  throw DegenerateDrawError("hermitian_frame8: repeated degenerate draws");
}

Frame appendix_compat_frame7(Rng& rng) {
  const auto& cp = CrossProduct7::instance();
  DenseMatrix a = random_orthogonal(7, 3, rng, 1);
  DenseMatrix at = transpose(a);
  auto cols = matrix_rows(at);  // columns of a
  DenseVector u1 = cols[0], u2 = cols[1], u3 = cols[2];
  DenseVector u3good = cp.cross(u1, u2);
  DenseMatrix b =
      is_zero_vector(vec_sub(u3good, u3)) ? DenseMatrix::identity(7) : reflection(vec_sub(u3good, u3));
  DenseMatrix c = transpose(matmul(b, a));
  auto rows = matrix_rows(c);
  DenseVector v = rows[6];
  DenseMatrix jv = cp.jay(v);
  rows[3] = matvec(jv, rows[0]);
  rows[4] = matvec(jv, rows[1]);
  rows[5] = matvec(jv, rows[2]);
  // consumer convention of the historical code: v is read from row 0
  return Frame{FrameKind::hermitian7, {rows[0], rows[1], rows[2], rows[3], rows[4], rows[5], rows[6]}};
}

bool verify_frame(const Frame& f) {
  if (!gram_is_identity(f.vectors)) return false;
  switch (f.kind) {
    case FrameKind::pair7:
      return f.vectors.size() == 2 && f.vectors[0].size() == 7;
    case FrameKind::triple7:
      return f.vectors.size() == 3 && f.vectors[0].size() == 7;
    case FrameKind::triple8:
      return f.vectors.size() == 3 && f.vectors[0].size() == 8;
    case FrameKind::hermitian7: {
      if (f.vectors.size() != 7 || f.vectors[0].size() != 7) return false;
      const auto& cp = CrossProduct7::instance();
      for (int k = 0; k < 3; ++k)
        if (cp.cross(f.vectors[0], f.vectors[1 + k]) != f.vectors[4 + k]) return false;
      return true;
    }
    case FrameKind::hermitian8: {
      if (f.vectors.size() != 8 || f.vectors[0].size() != 8) return false;
      const auto& cp = CrossProduct8::instance();
      for (int k = 0; k < 3; ++k)
        if (cp.cross(f.vectors[0], f.vectors[1], f.vectors[2 + k]) != f.vectors[5 + k])
          return false;
      return true;
    }
  }
  return false;
}

std::vector<DenseVector> orthonormal_complement_basis(const DenseVector& xi) {
  if (dot(xi, xi) != Rational(1)) throw NotUnitError("orthonormal_complement_basis: |xi| != 1");
  const int n = static_cast<int>(xi.size());
  DenseVector last(n, Rational(0));
  last[n - 1] = 1;
  DenseVector z = vec_sub(xi, last);
  DenseMatrix h = is_zero_vector(z) ? DenseMatrix::identity(n) : reflection(z);
  std::vector<DenseVector> basis;
  basis.reserve(n - 1);
  for (int i = 0; i + 1 < n; ++i) {
    DenseVector e(n, Rational(0));
    e[i] = 1;
    basis.push_back(matvec(h, e));
  }
  return basis;
}

}  // namespace vcpcert
