#ifndef VCPCERT_ASSEMBLY_HPP
#define VCPCERT_ASSEMBLY_HPP

#include <memory>
#include <span>
#include <string>

#include "vcpcert/constraint_system.hpp"
#include "vcpcert/frames.hpp"

namespace vcpcert {

// Algebraic-curvature system over the n^4 flattened variables R_ijkl:
//   R_ijkl + R_jikl = 0, R_ijkl - R_klij = 0, R_ijlk + R_ijkl = 0,
//   R_ijkl + R_iklj + R_iljk = 0.
// Nullity n^2(n^2-1)/12 (196 for n=7, 336 for n=8).
ConstraintSystem ac_rows(int n);

// First-CR rows for an orthonormal pair (w1,w2) in R^7: the 49 entries of
//   M = P R(w1,w2) P J - J P R(w1,w2) P,
// P = projection_complement({w2}), J = jay7(w2), R(w1,w2)_kl = w1^i w2^j R_ijkl.
// One block; stack onto ac_rows(7).
ConstraintSystem cr1_rows_g2(std::span<const Frame> pairs, const std::string& label = "cr1-pairs");
std::shared_ptr<const RowBlock> cr1_g2_block(std::span<const Frame> pairs, std::string label);

// First-CR rows for orthonormal triples (w1,w2,w3) in R^8: 64 entries of
// M = P R(w1,w3) P J - J P R(w1,w3) P with P = projection_complement({w1,w2}),
// J = jay8(w1,w2).
ConstraintSystem cr1_rows_spin7(std::span<const Frame> triples,
                                const std::string& label = "cr1-triples");
std::shared_ptr<const RowBlock> cr1_spin7_block(std::span<const Frame> triples, std::string label);

// Torsion space T(V) for (R^7, x): antisymmetry of the last three slots of
// A_ijkl plus one sampled row A(x; y ^ z ^ (y x z)) = 0 per orthonormal triple.
ConstraintSystem torsion_rows_g2(std::span<const Frame> triples);
ConstraintSystem torsion_antisym_g2();
std::shared_ptr<const RowBlock> torsion_sample_block(std::span<const Frame> triples,
                                                     std::string label);

// Second-CR rows over hermitian (v,w1..w6) frames: for (j,p,q) in [1,6]^3
//   A(v x w_q; v^w_j^w_p) - A(v x w_p; v^w_j^w_q)
//   + A(w_q; v^(v x w_j)^w_p) - A(w_p; v^(v x w_j)^w_q) = 0.
// verify_frames=false admits unverified tuples (the appendix-compat
// archaeology mode); anything built that way is non-certified.
ConstraintSystem cr2_rows_g2(std::span<const Frame> frames,
                             const std::string& label = "cr2-frames");
std::shared_ptr<const RowBlock> cr2_g2_block(std::span<const Frame> frames, std::string label,
                                             bool verify_frames = true);

// W(R^8) inside V* (x) Lambda^4 V* over the 8^5 variables A_i;jklm: full
// antisymmetry of the last four slots plus sampled rows
// A(eta1; eta2^eta3^eta4^chi(eta2,eta3,eta4)) = 0 with (eta2,eta3,eta4)
// orthonormal.
struct WSample {
  DenseVector eta1, eta2, eta3, eta4;
};
ConstraintSystem w_rows_spin7(std::span<const WSample> samples);
ConstraintSystem w_antisym_spin7();
std::shared_ptr<const RowBlock> w_sample_block(std::span<const WSample> samples,
                                               std::string label);

// Second-CR rows over hermitian 8-frames (v1,v2,w1..w6), the 4-form slot fed
// v1 ^ v2 ^ . ^ . and J = jay8(v1,v2).
ConstraintSystem cr2_rows_spin7(std::span<const Frame> frames,
                                const std::string& label = "cr2-frames");
std::shared_ptr<const RowBlock> cr2_spin7_block(std::span<const Frame> frames, std::string label);

}  // namespace vcpcert

#endif
