#include "vcpcert/cross_product.hpp"

#include <algorithm>

#include "vcpcert/errors.hpp"

namespace vcpcert {

namespace {

// sign of the permutation sorting t, 0 if t has a repeated entry
template <size_t R>
int perm_sign(std::array<int, R> t) {
  int s = 1;
  for (size_t i = 0; i < R; ++i) {
    for (size_t j = i + 1; j < R; ++j) {
      if (t[i] == t[j]) return 0;
      if (t[i] > t[j]) s = -s;
    }
  }
  return s;
}

}  // namespace

CrossProduct7::CrossProduct7() {
  // nonzero unordered triples, 0-based labels
  struct Term {
    std::array<int, 3> t;
    int s;
  };
  const Term terms[] = {{{0, 1, 2}, 1},  {{0, 3, 4}, 1},  {{0, 5, 6}, 1}, {{1, 3, 5}, 1},
                        {{1, 4, 6}, -1}, {{2, 3, 6}, -1}, {{2, 4, 5}, -1}};
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      for (int k = 0; k < 7; ++k) {
        std::array<int, 3> idx{i, j, k};
        std::array<int, 3> sorted = idx;
        std::sort(sorted.begin(), sorted.end());
        for (const Term& term : terms) {
          if (sorted == term.t) {
            eps_[(i * 7 + j) * 7 + k] = static_cast<int8_t>(term.s * perm_sign(idx));
            break;
          }
        }
      }
}

const CrossProduct7& CrossProduct7::instance() {
  static const CrossProduct7 table;
  return table;
}

DenseVector CrossProduct7::cross(const DenseVector& u, const DenseVector& v) const {
  DenseVector out(7, Rational(0));
  for (int i = 0; i < 7; ++i) {
    if (is_zero(u[i])) continue;
    for (int j = 0; j < 7; ++j) {
      if (is_zero(v[j])) continue;
      for (int k = 0; k < 7; ++k) {
        int e = eps(i, j, k);
        if (e == 1)
          out[k] += u[i] * v[j];
        else if (e == -1)
          out[k] -= u[i] * v[j];
      }
    }
  }
  return out;
}

DenseMatrix CrossProduct7::jay(const DenseVector& v) const {
  DenseMatrix m(7, 7);
  for (int k = 0; k < 7; ++k)
    for (int j = 0; j < 7; ++j) {
      Rational s = 0;
      for (int i = 0; i < 7; ++i) {
        int e = eps(i, j, k);
        if (e == 1)
          s += v[i];
        else if (e == -1)
          s -= v[i];
      }
      m.at(k, j) = s;
    }
  return m;
}

CrossProduct8::CrossProduct8() {
  struct Term {
    std::array<int, 4> t;
    int s;
  };
  const Term terms[] = {{{0, 1, 2, 3}, 1},  {{0, 1, 4, 5}, 1},  {{0, 1, 6, 7}, 1},
                        {{0, 2, 4, 6}, 1},  {{0, 2, 5, 7}, -1}, {{0, 3, 4, 7}, -1},
                        {{0, 3, 5, 6}, -1}, {{4, 5, 6, 7}, 1},  {{2, 3, 6, 7}, 1},
                        {{2, 3, 4, 5}, 1},  {{1, 3, 5, 7}, 1},  {{1, 3, 4, 6}, -1},
                        {{1, 2, 5, 6}, -1}, {{1, 2, 4, 7}, -1}};
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      for (int c = 0; c < 8; ++c)
        for (int d = 0; d < 8; ++d) {
          std::array<int, 4> idx{a, b, c, d};
          std::array<int, 4> sorted = idx;
          std::sort(sorted.begin(), sorted.end());
          for (const Term& term : terms) {
            if (sorted == term.t) {
              eps_[((a * 8 + b) * 8 + c) * 8 + d] = static_cast<int8_t>(term.s * perm_sign(idx));
              break;
            }
          }
        }
}

const CrossProduct8& CrossProduct8::instance() {
  static const CrossProduct8 table;
  return table;
}

DenseVector CrossProduct8::cross(const DenseVector& u, const DenseVector& v,
                                 const DenseVector& w) const {
  DenseVector out(8, Rational(0));
  for (int a = 0; a < 8; ++a) {
    if (is_zero(u[a])) continue;
    for (int b = 0; b < 8; ++b) {
      if (is_zero(v[b])) continue;
      Rational uv = u[a] * v[b];
      for (int c = 0; c < 8; ++c) {
        if (is_zero(w[c])) continue;
        for (int d = 0; d < 8; ++d) {
          int e = eps(a, b, c, d);
          if (e == 1)
            out[d] += uv * w[c];
          else if (e == -1)
            out[d] -= uv * w[c];
        }
      }
    }
  }
  return out;
}

DenseMatrix CrossProduct8::jay(const DenseVector& v1, const DenseVector& v2) const {
  DenseMatrix m(8, 8);
  for (int a = 0; a < 8; ++a) {
    if (is_zero(v1[a])) continue;
    for (int b = 0; b < 8; ++b) {
      if (is_zero(v2[b])) continue;
      Rational f = v1[a] * v2[b];
      for (int c = 0; c < 8; ++c)
        for (int d = 0; d < 8; ++d) {
          int e = eps(a, b, c, d);
          if (e == 1)
            m.at(d, c) += f;
          else if (e == -1)
            m.at(d, c) -= f;
        }
    }
  }
  return m;
}

DenseVector octonion_multiply(const DenseVector& x, const DenseVector& y) {
  const Rational& x0 = x[0];
  const Rational& y0 = y[0];
  Rational im_dot = 0;
  for (int i = 1; i < 8; ++i) im_dot += x[i] * y[i];
  DenseVector imx(x.begin() + 1, x.end());
  DenseVector imy(y.begin() + 1, y.end());
  DenseVector cr = CrossProduct7::instance().cross(imx, imy);
  DenseVector out(8);
  out[0] = x0 * y0 - im_dot;
  for (int i = 0; i < 7; ++i) out[1 + i] = x0 * y[1 + i] + y0 * x[1 + i] + cr[i];
  return out;
}

DenseVector octonion_conjugate(const DenseVector& x) {
  DenseVector out(8);
  out[0] = x[0];
  for (int i = 1; i < 8; ++i) out[i] = -x[i];
  return out;
}

DenseVector triple_cross_harvey_lawson(const DenseVector& u, const DenseVector& v,
                                       const DenseVector& w) {
  DenseVector vbar = octonion_conjugate(v);
  DenseVector a = octonion_multiply(octonion_multiply(u, vbar), w);
  DenseVector b = octonion_multiply(octonion_multiply(w, vbar), u);
  DenseVector out(8);
  for (int i = 0; i < 8; ++i) out[i] = (a[i] - b[i]) / 2;
  return out;
}

DenseMatrix epsilon_embed(const DenseVector& xi, const DenseVector& w) {
  if (!is_zero(dot(xi, w)))
    throw NotOrthogonalError("epsilon_embed: arguments must be orthogonal");
  const int n = static_cast<int>(xi.size());
  DenseMatrix m(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m.at(a, b) = w[a] * xi[b] - xi[a] * w[b];
  return m;
}

namespace {
DenseVector basis8(int i) {
  DenseVector v(8, Rational(0));
  v[i] = 1;
  return v;
}
}  // namespace

DenseMatrix octonion_plane_commutator(const Rational& a1, const Rational& a3) {
  DenseMatrix j = CrossProduct8::instance().jay(basis8(2), basis8(4));
  DenseMatrix x(8, 8);
  x = add_scaled(x, epsilon_embed(basis8(0), basis8(1)), a1);
  x = add_scaled(x, epsilon_embed(basis8(0), basis8(3)), a3);
  return sub(matmul(j, x), matmul(x, j));
}

DenseMatrix octonion_plane_commutator_closed_form(const Rational& a1, const Rational& a3) {
  DenseMatrix m(8, 8);
  m = add_scaled(m, epsilon_embed(basis8(6), basis8(1)), a1);
  m = add_scaled(m, epsilon_embed(basis8(6), basis8(3)), a3);
  m = add_scaled(m, epsilon_embed(basis8(0), basis8(7)), -a1);
  m = add_scaled(m, epsilon_embed(basis8(0), basis8(5)), -a3);
  return m;
}

}  // namespace vcpcert
