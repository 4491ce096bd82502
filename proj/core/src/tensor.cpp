#include "vcpcert/tensor.hpp"

#include <map>
#include <tuple>

#include "vcpcert/errors.hpp"
#include "vcpcert/frames.hpp"

namespace vcpcert {

SignedClassMap SignedClassMap::curvature(int n) {
  SignedClassMap m;
  const int64_t total = static_cast<int64_t>(n) * n * n * n;
  m.ncols_full = total;
  m.class_of.assign(total, -1);
  m.sign_of.assign(total, 0);
  std::map<std::tuple<int, int, int, int>, int32_t> ids;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          int64_t f = ((static_cast<int64_t>(i) * n + j) * n + k) * n + l;
          if (i == j || k == l) continue;
          int s = 1;
          int a = i, b = j, c = k, d = l;
          if (a > b) {
            std::swap(a, b);
            s = -s;
          }
          if (c > d) {
            std::swap(c, d);
            s = -s;
          }
          if (std::make_pair(a, b) > std::make_pair(c, d)) {
            std::swap(a, c);
            std::swap(b, d);
          }
          auto key = std::make_tuple(a, b, c, d);
          auto it = ids.find(key);
          int32_t id;
          if (it == ids.end()) {
            id = static_cast<int32_t>(ids.size());
            ids.emplace(key, id);
            m.representative_of.push_back(((static_cast<int64_t>(a) * n + b) * n + c) * n + d);
          } else {
            id = it->second;
          }
          m.class_of[f] = id;
          m.sign_of[f] = static_cast<int8_t>(s);
        }
  m.nclasses = static_cast<int32_t>(ids.size());
  return m;
}

SignedClassMap SignedClassMap::head_tail_antisym(int n, int tail) {
  SignedClassMap m;
  int64_t total = n;
  for (int t = 0; t < tail; ++t) total *= n;
  m.ncols_full = total;
  m.class_of.assign(total, -1);
  m.sign_of.assign(total, 0);
  std::map<std::vector<int>, int32_t> ids;
  std::vector<int> idx(1 + tail, 0);
  for (int64_t f = 0; f < total; ++f) {
    int64_t rem = f;
    for (int t = tail; t >= 1; --t) {
      idx[t] = static_cast<int>(rem % n);
      rem /= n;
    }
    idx[0] = static_cast<int>(rem);
    // sort the tail, tracking parity; bail on repeats
    std::vector<int> t(idx.begin() + 1, idx.end());
    int s = 1;
    bool repeat = false;
    for (size_t a = 0; a < t.size() && !repeat; ++a)
      for (size_t b = a + 1; b < t.size(); ++b) {
        if (t[a] == t[b]) {
          repeat = true;
          break;
        }
        if (t[a] > t[b]) s = -s;
      }
    if (repeat) continue;
    std::vector<int> key(1 + tail);
    key[0] = idx[0];
    std::vector<int> sorted = t;
    std::sort(sorted.begin(), sorted.end());
    for (int a = 0; a < tail; ++a) key[1 + a] = sorted[a];
    auto it = ids.find(key);
    int32_t id;
    if (it == ids.end()) {
      id = static_cast<int32_t>(ids.size());
      ids.emplace(key, id);
      int64_t rep = key[0];
      for (int a = 0; a < tail; ++a) rep = rep * n + key[1 + a];
      m.representative_of.push_back(rep);
    } else {
      id = it->second;
    }
    m.class_of[f] = id;
    m.sign_of[f] = static_cast<int8_t>(s);
  }
  m.nclasses = static_cast<int32_t>(ids.size());
  return m;
}

Tensor4 curvature_identity_witness(int n) {
  Tensor4 r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      r.at(i, j, j, i) += 1;
      r.at(i, j, i, j) -= 1;
    }
  return r;
}

Tensor4 restrict_curvature_8to7(const Tensor4& r8) {
  Tensor4 out(7);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      for (int k = 0; k < 7; ++k)
        for (int l = 0; l < 7; ++l) out.at(i, j, k, l) = r8.at(i + 1, j + 1, k + 1, l + 1);
  return out;
}

Tensor4 restrict_torsion_8to7(const Tensor5& a8, const DenseVector& xi) {
  std::vector<DenseVector> basis = orthonormal_complement_basis(xi);  // throws NotUnit
  // contract xi into slot 2 (the first 4-form slot): B(i;k,l,m) = sum_j A(i;j,k,l,m) xi_j
  const int n = a8.n;
  std::vector<Rational> b(static_cast<size_t>(n) * n * n * n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l)
        for (int m = 0; m < n; ++m) {
          Rational s = 0;
          for (int j = 0; j < n; ++j) {
            const Rational& c = a8.at(i, j, k, l, m);
            if (!is_zero(c) && !is_zero(xi[j])) s += c * xi[j];
          }
          b[((static_cast<size_t>(i) * n + k) * n + l) * n + m] = s;
        }
  // change all four remaining slots to the complement basis
  Tensor4 out(7);
  for (int a = 0; a < 7; ++a)
    for (int c = 0; c < 7; ++c)
      for (int d = 0; d < 7; ++d)
        for (int e = 0; e < 7; ++e) {
          Rational s = 0;
          for (int i = 0; i < n; ++i) {
            if (is_zero(basis[a][i])) continue;
            for (int k = 0; k < n; ++k) {
              if (is_zero(basis[c][k])) continue;
              Rational f1 = basis[a][i] * basis[c][k];
              for (int l = 0; l < n; ++l) {
                if (is_zero(basis[d][l])) continue;
                Rational f2 = f1 * basis[d][l];
                for (int m = 0; m < n; ++m) {
                  const Rational& bb = b[((static_cast<size_t>(i) * n + k) * n + l) * n + m];
                  if (!is_zero(bb) && !is_zero(basis[e][m])) s += f2 * basis[e][m] * bb;
                }
              }
            }
          }
          out.at(a, c, d, e) = s;
        }
  return out;
}

}  // namespace vcpcert
