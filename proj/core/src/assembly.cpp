#include "vcpcert/assembly.hpp"

#include "vcpcert/cross_product.hpp"
#include "vcpcert/errors.hpp"

namespace vcpcert {

namespace {

int64_t pow_i64(int64_t b, int e) {
  int64_t r = 1;
  while (e--) r *= b;
  return r;
}

void require_kind(const Frame& f, FrameKind kind, const char* what) {
  if (f.kind != kind || !verify_frame(f)) throw InvalidFrameError(what);
}

void require_orthonormal(const Frame& f, const char* what) {
  if (!verify_frame(f)) throw NotOrthonormalError(what);
}

DenseVector matrix_row(const DenseMatrix& m, int i) {
  DenseVector r(m.ncols);
  for (int j = 0; j < m.ncols; ++j) r[j] = m.at(i, j);
  return r;
}

DenseVector matrix_col(const DenseMatrix& m, int j) {
  DenseVector c(m.nrows);
  for (int i = 0; i < m.nrows; ++i) c[i] = m.at(i, j);
  return c;
}

// Entries of P R P J - J P R P as 2-term contraction rows over R_ijkl:
// coeff(i,j,k,l) of entry (a,b) = u^i v^j (P[a,k] (PJ)[l,b] - (JP)[a,k] P[l,b]).
void append_cr1_rows(std::vector<ContractionBlock::RowSpec>& rows, const DenseVector& u,
                     const DenseVector& v, const DenseMatrix& proj, const DenseMatrix& jay) {
  const int n = proj.nrows;
  DenseMatrix pj = matmul(proj, jay);
  DenseMatrix jp = matmul(jay, proj);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      ContractionBlock::RowSpec spec;
      spec.terms.push_back({+1, {u, v, matrix_row(proj, a), matrix_col(pj, b)}});
      spec.terms.push_back({-1, {u, v, matrix_row(jp, a), matrix_col(proj, b)}});
      rows.push_back(std::move(spec));
    }
  }
}

}  // namespace

ConstraintSystem ac_rows(int n) {
  ConstraintSystem sys(pow_i64(n, 4));
  sys.add_block(std::make_shared<PermSymmetryBlock>("curvature-antisym-12", n,
                                                    std::vector<int>{1, 0, 2, 3}, 1));
  sys.add_block(std::make_shared<PermSymmetryBlock>("curvature-pair-swap", n,
                                                    std::vector<int>{2, 3, 0, 1}, -1));
  sys.add_block(std::make_shared<PermSymmetryBlock>("curvature-antisym-34", n,
                                                    std::vector<int>{0, 1, 3, 2}, 1));
  sys.add_block(std::make_shared<BianchiBlock>("bianchi", n));
  sys.set_symmetry_map(std::make_shared<SignedClassMap>(SignedClassMap::curvature(n)));
  return sys;
}

std::shared_ptr<const RowBlock> cr1_g2_block(std::span<const Frame> pairs, std::string label) {
  const auto& cp = CrossProduct7::instance();
  std::vector<ContractionBlock::RowSpec> rows;
  rows.reserve(pairs.size() * 49);
  for (const Frame& f : pairs) {
    require_orthonormal(f, "cr1_rows_g2: pair not exactly orthonormal");
    if (f.kind != FrameKind::pair7) throw InvalidFrameError("cr1_rows_g2: pair7 frame required");
    const DenseVector& w1 = f.vectors[0];
    const DenseVector& w2 = f.vectors[1];
    std::vector<DenseVector> span_w2{w2};
    append_cr1_rows(rows, w1, w2, projection_complement(span_w2), cp.jay(w2));
  }
  return std::make_shared<ContractionBlock>(std::move(label), 7, 4, std::move(rows));
}

ConstraintSystem cr1_rows_g2(std::span<const Frame> pairs, const std::string& label) {
  ConstraintSystem sys(pow_i64(7, 4));
  sys.add_block(cr1_g2_block(pairs, label));
  return sys;
}

std::shared_ptr<const RowBlock> cr1_spin7_block(std::span<const Frame> triples, std::string label) {
  const auto& cp = CrossProduct8::instance();
  std::vector<ContractionBlock::RowSpec> rows;
  rows.reserve(triples.size() * 64);
  for (const Frame& f : triples) {
    require_orthonormal(f, "cr1_rows_spin7: triple not exactly orthonormal");
    if (f.kind != FrameKind::triple8)
      throw InvalidFrameError("cr1_rows_spin7: triple8 frame required");
    const DenseVector& w1 = f.vectors[0];
    const DenseVector& w2 = f.vectors[1];
    const DenseVector& w3 = f.vectors[2];
    std::vector<DenseVector> span_w12{w1, w2};
    append_cr1_rows(rows, w1, w3, projection_complement(span_w12), cp.jay(w1, w2));
  }
  return std::make_shared<ContractionBlock>(std::move(label), 8, 4, std::move(rows));
}

ConstraintSystem cr1_rows_spin7(std::span<const Frame> triples, const std::string& label) {
  ConstraintSystem sys(pow_i64(8, 4));
  sys.add_block(cr1_spin7_block(triples, label));
  return sys;
}

ConstraintSystem torsion_antisym_g2() {
  ConstraintSystem sys(pow_i64(7, 4));
  sys.add_block(std::make_shared<PermSymmetryBlock>("torsion-antisym-23", 7,
                                                    std::vector<int>{0, 2, 1, 3}, 1));
  sys.add_block(std::make_shared<PermSymmetryBlock>("torsion-antisym-34", 7,
                                                    std::vector<int>{0, 1, 3, 2}, 1));
  sys.set_symmetry_map(std::make_shared<SignedClassMap>(SignedClassMap::head_tail_antisym(7, 3)));
  return sys;
}

std::shared_ptr<const RowBlock> torsion_sample_block(std::span<const Frame> triples,
                                                     std::string label) {
  const auto& cp = CrossProduct7::instance();
  std::vector<ContractionBlock::RowSpec> rows;
  rows.reserve(triples.size());
  for (const Frame& f : triples) {
    require_orthonormal(f, "torsion_rows_g2: triple not exactly orthonormal");
    if (f.kind != FrameKind::triple7)
      throw InvalidFrameError("torsion_rows_g2: triple7 frame required");
    const DenseVector& x = f.vectors[0];
    const DenseVector& y = f.vectors[1];
    const DenseVector& z = f.vectors[2];
    ContractionBlock::RowSpec spec;
    spec.terms.push_back({+1, {x, y, z, cp.cross(y, z)}});
    rows.push_back(std::move(spec));
  }
  return std::make_shared<ContractionBlock>(std::move(label), 7, 4, std::move(rows));
}

ConstraintSystem torsion_rows_g2(std::span<const Frame> triples) {
  ConstraintSystem sys = torsion_antisym_g2();
  sys.add_block(torsion_sample_block(triples, "torsion-samples"));
  return sys;
}

std::shared_ptr<const RowBlock> cr2_g2_block(std::span<const Frame> frames, std::string label,
                                             bool verify_frames) {
  const auto& cp = CrossProduct7::instance();
  std::vector<ContractionBlock::RowSpec> rows;
  rows.reserve(frames.size() * 216);
  for (const Frame& f : frames) {
    if (f.kind != FrameKind::hermitian7 || f.vectors.size() != 7)
      throw InvalidFrameError("cr2_rows_g2: hermitian7 frame required");
    if (verify_frames && !verify_frame(f))
      throw InvalidFrameError("cr2_rows_g2: frame invariants violated");
    const DenseVector& v = f.vectors[0];
    DenseMatrix jv = cp.jay(v);
    std::span<const DenseVector> w(f.vectors.data() + 1, 6);
    for (int q = 0; q < 6; ++q)
      for (int j = 0; j < 6; ++j)
        for (int p = 0; p < 6; ++p) {
          ContractionBlock::RowSpec spec;
          spec.terms.push_back({+1, {matvec(jv, w[q]), v, w[j], w[p]}});
          spec.terms.push_back({-1, {matvec(jv, w[p]), v, w[j], w[q]}});
          spec.terms.push_back({+1, {w[q], v, matvec(jv, w[j]), w[p]}});
          spec.terms.push_back({-1, {w[p], v, matvec(jv, w[j]), w[q]}});
          rows.push_back(std::move(spec));
        }
  }
  return std::make_shared<ContractionBlock>(std::move(label), 7, 4, std::move(rows));
}

ConstraintSystem cr2_rows_g2(std::span<const Frame> frames, const std::string& label) {
  ConstraintSystem sys(pow_i64(7, 4));
  sys.add_block(cr2_g2_block(frames, label));
  return sys;
}

ConstraintSystem w_antisym_spin7() {
  ConstraintSystem sys(pow_i64(8, 5));
  sys.add_block(std::make_shared<PermSymmetryBlock>("w-antisym-23", 8,
                                                    std::vector<int>{0, 2, 1, 3, 4}, 1));
  sys.add_block(std::make_shared<PermSymmetryBlock>("w-antisym-34", 8,
                                                    std::vector<int>{0, 1, 3, 2, 4}, 1));
  sys.add_block(std::make_shared<PermSymmetryBlock>("w-antisym-45", 8,
                                                    std::vector<int>{0, 1, 2, 4, 3}, 1));
  sys.set_symmetry_map(std::make_shared<SignedClassMap>(SignedClassMap::head_tail_antisym(8, 4)));
  return sys;
}

std::shared_ptr<const RowBlock> w_sample_block(std::span<const WSample> samples,
                                               std::string label) {
  const auto& cp = CrossProduct8::instance();
  std::vector<ContractionBlock::RowSpec> rows;
  rows.reserve(samples.size());
  for (const WSample& s : samples) {
    for (const DenseVector* a : {&s.eta2, &s.eta3, &s.eta4})
      for (const DenseVector* b : {&s.eta2, &s.eta3, &s.eta4})
        if (dot(*a, *b) != Rational(a == b ? 1 : 0))
          throw NotOrthonormalError("w_rows_spin7: (eta2,eta3,eta4) not exactly orthonormal");
    ContractionBlock::RowSpec spec;
    spec.terms.push_back({+1, {s.eta1, s.eta2, s.eta3, s.eta4, cp.cross(s.eta2, s.eta3, s.eta4)}});
    rows.push_back(std::move(spec));
  }
  return std::make_shared<ContractionBlock>(std::move(label), 8, 5, std::move(rows));
}

ConstraintSystem w_rows_spin7(std::span<const WSample> samples) {
  ConstraintSystem sys = w_antisym_spin7();
  sys.add_block(w_sample_block(samples, "w-samples"));
  return sys;
}

std::shared_ptr<const RowBlock> cr2_spin7_block(std::span<const Frame> frames, std::string label) {
  const auto& cp = CrossProduct8::instance();
  std::vector<ContractionBlock::RowSpec> rows;
  rows.reserve(frames.size() * 216);
  for (const Frame& f : frames) {
    if (f.kind != FrameKind::hermitian8 || f.vectors.size() != 8)
      throw InvalidFrameError("cr2_rows_spin7: hermitian8 frame required");
    if (!verify_frame(f)) throw InvalidFrameError("cr2_rows_spin7: frame invariants violated");
    const DenseVector& v1 = f.vectors[0];
    const DenseVector& v2 = f.vectors[1];
    DenseMatrix jv = cp.jay(v1, v2);
    std::span<const DenseVector> w(f.vectors.data() + 2, 6);
    for (int q = 0; q < 6; ++q)
      for (int j = 0; j < 6; ++j)
        for (int p = 0; p < 6; ++p) {
          ContractionBlock::RowSpec spec;
          spec.terms.push_back({+1, {matvec(jv, w[q]), v1, v2, w[j], w[p]}});
          spec.terms.push_back({-1, {matvec(jv, w[p]), v1, v2, w[j], w[q]}});
          spec.terms.push_back({+1, {w[q], v1, v2, matvec(jv, w[j]), w[p]}});
          spec.terms.push_back({-1, {w[p], v1, v2, matvec(jv, w[j]), w[q]}});
          rows.push_back(std::move(spec));
        }
  }
  return std::make_shared<ContractionBlock>(std::move(label), 8, 5, std::move(rows));
}

ConstraintSystem cr2_rows_spin7(std::span<const Frame> frames, const std::string& label) {
  ConstraintSystem sys(pow_i64(8, 5));
  sys.add_block(cr2_spin7_block(frames, label));
  return sys;
}

}  // namespace vcpcert
