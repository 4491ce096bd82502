#ifndef VCPCERT_CROSS_PRODUCT_HPP
#define VCPCERT_CROSS_PRODUCT_HPP

#include <array>
#include <cstdint>

#include "vcpcert/linalg.hpp"

namespace vcpcert {

// Structure constants of the 2-fold cross product on R^7, i.e. the
// coefficients of the associative 3-form
//   e123 + e145 + e167 + e246 - e257 - e347 - e356   (labels 1..7)
// extended by full antisymmetry and stored as an expanded sign table over all
// ordered triples, so lookups never compute permutation signs.
class CrossProduct7 {
 public:
  static const CrossProduct7& instance();

  int eps(int i, int j, int k) const { return eps_[(i * 7 + j) * 7 + k]; }

  // (u x v)_k = sum_{i,j} eps(i,j,k) u_i v_j
  DenseVector cross(const DenseVector& u, const DenseVector& v) const;

  // Matrix of w -> v x w. For unit v, jay(v)^2 = -projection_complement({v}).
  DenseMatrix jay(const DenseVector& v) const;

 private:
  CrossProduct7();
  std::array<int8_t, 343> eps_{};
};

// Structure constants of the 3-fold cross product on R^8: coefficients of the
// Cayley 4-form
//   e0123 + e0145 + e0167 + e0246 - e0257 - e0347 - e0356
//   + e4567 + e2367 + e2345 + e1357 - e1346 - e1256 - e1247  (labels 0..7)
// extended by full antisymmetry. Restricting to quadruples containing index 0
// reproduces the 7-dimensional table above.
class CrossProduct8 {
 public:
  static const CrossProduct8& instance();

  int eps(int a, int b, int c, int d) const { return eps_[((a * 8 + b) * 8 + c) * 8 + d]; }

  // (chi(u,v,w))_d = sum eps(a,b,c,d) u_a v_b w_c
  DenseVector cross(const DenseVector& u, const DenseVector& v, const DenseVector& w) const;

  // Matrix of w -> chi(v1,v2,w). For an orthonormal pair,
  // jay(v1,v2)^2 = -projection_complement({v1,v2}).
  DenseMatrix jay(const DenseVector& v1, const DenseVector& v2) const;

 private:
  CrossProduct8();
  std::array<int8_t, 4096> eps_{};
};

// Octonion product on R^8 reconstructed from the 7-dimensional table:
//   x*y = x0*y + y0*x - x0*y0*e0 - <Im x, Im y>*e0 + cross7(Im x, Im y).
// e0 is a two-sided identity and |x*y| = |x||y| exactly.
DenseVector octonion_multiply(const DenseVector& x, const DenseVector& y);
DenseVector octonion_conjugate(const DenseVector& x);

// Harvey-Lawson triple product (u vbar) w - (w vbar) u, halved. Serves as the
// independent oracle for CrossProduct8::cross; the two agree on every ordered
// basis triple up to the single global constant below.
DenseVector triple_cross_harvey_lawson(const DenseVector& u, const DenseVector& v,
                                       const DenseVector& w);

// Determined by exhaustive comparison over all 8^3 basis triples (frozen in
// the test suite): triple_cross_harvey_lawson == kTripleCrossSign * cross8.
inline constexpr int kTripleCrossSign = -1;

// Skew operator eps(xi,w) = w xi^T - xi w^T, i.e. X -> <xi,X> w - <w,X> xi.
// Requires <xi,w> = 0 (throws NotOrthogonalError otherwise).
DenseMatrix epsilon_embed(const DenseVector& xi, const DenseVector& w);

// Commutator [J, a1*eps(e0,e1) + a3*eps(e0,e3)] on R^8, where J is the matrix
// of w -> chi(e2,e4,w). Closed form (octonion_plane_commutator_closed_form):
//   a1*eps(e6,e1) + a3*eps(e6,e3) - a1*eps(e0,e7) - a3*eps(e0,e5),
// which vanishes iff a1 = a3 = 0.
DenseMatrix octonion_plane_commutator(const Rational& a1, const Rational& a3);
DenseMatrix octonion_plane_commutator_closed_form(const Rational& a1, const Rational& a3);

}  // namespace vcpcert

#endif
