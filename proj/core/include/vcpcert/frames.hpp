#ifndef VCPCERT_FRAMES_HPP
#define VCPCERT_FRAMES_HPP

#include <vector>

#include "vcpcert/linalg.hpp"
#include "vcpcert/rng.hpp"

namespace vcpcert {

enum class FrameKind { pair7, triple7, triple8, hermitian7, hermitian8 };

// An ordered tuple of exactly orthonormal rational vectors. For the hermitian
// kinds the ordering is (v, w1..w6) resp. (v1, v2, w1..w6) with
// w_{3+k} = v x w_k resp. w_{3+k} = chi(v1,v2,w_k) for k in {1,2,3}.
struct Frame {
  FrameKind kind;
  std::vector<DenseVector> vectors;
};

// Product of k reflections through hyperplanes orthogonal to stereographic
// images of random integer vectors with coordinates in {0..range}. Exactly
// orthogonal, all entries rational, deterministic per rng stream.
DenseMatrix random_orthogonal(int n, int k, Rng& rng, int range);

Frame random_pair7(Rng& rng, int range);
Frame random_triple7(Rng& rng, int range);
Frame random_triple8(Rng& rng, int range);

// Adapted frames built by the reflection-correction procedure: after fixing
// v (resp. the pair v1,v2) and w1, each remaining w_k is rotated into place by
// a reflection through w_{3+k} - row (identity when the difference is zero),
// which fixes everything already constructed. The result satisfies the
// hermitian Frame invariants exactly; a final exact verification guards the
// construction and redraws on failure (bounded, then DegenerateDrawError).
Frame hermitian_frame7(Rng& rng, int range);
Frame hermitian_frame8(Rng& rng, int range);

// Reproduction of a historical frame construction that places the adapted
// vectors differently from where its consumer reads them; the emitted tuple is
// not verified hermitian and anything computed from it is non-certified.
// Draws integer coordinates from {0,1} regardless of range.
Frame appendix_compat_frame7(Rng& rng);

// Exact check of the Frame invariants (Gram identity + kind-specific adaptation).
bool verify_frame(const Frame& f);

// Rows: an orthonormal rational basis of the hyperplane orthogonal to the unit
// vector xi (built from the reflection mapping the last basis vector to xi).
// Throws NotUnitError unless <xi,xi> = 1.
std::vector<DenseVector> orthonormal_complement_basis(const DenseVector& xi);

}  // namespace vcpcert

#endif
