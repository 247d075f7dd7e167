#include "hopfcat/modflat.hpp"

namespace hopfcat {

void FgModule::validate() const {
  if (rel.rows() != gens && !(gens == 0 && rel.rows() == 0))
    throw bad_input("relation matrix row count must equal generator count");
}

IntMatrix FgModule::full_relations() const {
  validate();
  if (ring_n == 0) return rel;
  IntMatrix ring(gens, gens);
  for (std::size_t i = 0; i < gens; ++i) ring.at(i, i) = ring_n;
  return rel.cols() == 0 ? ring : rel.hstack(ring);
}

std::vector<mpz_class> FgModule::invariant_factors() const {
  IntMatrix full = full_relations();
  std::vector<mpz_class> out;
  if (gens == 0) return out;
  SnfResult s = snf(full);
  std::size_t r = std::min(s.D.rows(), s.D.cols());
  for (std::size_t i = 0; i < r; ++i) {
    const mpz_class& d = s.D.at(i, i);
    if (d != 1) out.push_back(d);
  }
  // Generators without a diagonal entry are free of rank one.
  for (std::size_t i = r; i < gens; ++i) out.push_back(0);
  return out;
}

bool FgModule::is_zero() const { return invariant_factors().empty(); }

FgModule cyclic_module(unsigned long ring_n, const mpz_class& order) {
  FgModule m;
  m.ring_n = ring_n;
  m.gens = 1;
  m.rel = IntMatrix(1, 1);
  m.rel.at(0, 0) = order;
  m.validate();
  return m;
}

FgModule free_module(unsigned long ring_n, std::size_t rank) {
  FgModule m;
  m.ring_n = ring_n;
  m.gens = rank;
  m.rel = IntMatrix(rank, 0);
  return m;
}

void ModMap::validate() const {
  source.validate();
  target.validate();
  if (source.ring_n != target.ring_n)
    throw bad_input("module map across different base rings");
  if (mat.rows() != target.gens || mat.cols() != source.gens)
    throw bad_input("module map shape mismatch");
  IntMatrix full_src = source.full_relations();
  IntMatrix full_tgt = target.full_relations();
  IntMatrix image = mat * full_src;
  for (std::size_t j = 0; j < image.cols(); ++j) {
    std::vector<mpz_class> col(image.rows());
    for (std::size_t i = 0; i < image.rows(); ++i) col[i] = image.at(i, j);
    if (!in_column_lattice(full_tgt, col))
      throw bad_input("map does not respect relations (column " +
                      std::to_string(j) + ")");
  }
}

ModMap identity_modmap(const FgModule& m) {
  ModMap f;
  f.source = m;
  f.target = m;
  f.mat = IntMatrix::identity(m.gens);
  return f;
}

FgModule tensor_fg(const FgModule& m, const FgModule& n) {
  if (m.ring_n != n.ring_n) throw bad_input("tensor across base rings");
  FgModule out;
  out.ring_n = m.ring_n;
  out.gens = m.gens * n.gens;
  IntMatrix left = ikron(m.rel, IntMatrix::identity(n.gens));
  IntMatrix right = ikron(IntMatrix::identity(m.gens), n.rel);
  if (left.cols() == 0)
    out.rel = right;
  else if (right.cols() == 0)
    out.rel = left;
  else
    out.rel = left.hstack(right);
  return out;
}

namespace {

// Lattice of { v : F v lies in the column lattice of R }: project the
// integer kernel of [F | R] onto the first block of coordinates.
IntMatrix preimage_lattice(const IntMatrix& f, const IntMatrix& r) {
  IntMatrix stacked = r.cols() == 0 ? f : f.hstack(r);
  IntMatrix k = int_kernel(stacked);
  IntMatrix out(f.cols(), k.cols());
  for (std::size_t i = 0; i < f.cols(); ++i)
    for (std::size_t j = 0; j < k.cols(); ++j) out.at(i, j) = k.at(i, j);
  return out;
}

// Intersection of two column lattices in the same ambient Z^n.
IntMatrix lattice_intersect(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() == 0 || b.cols() == 0) return IntMatrix(a.rows(), 0);
  IntMatrix nb(b.rows(), b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) nb.at(i, j) = -b.at(i, j);
  IntMatrix k = int_kernel(a.hstack(nb));
  IntMatrix coeff(a.cols(), k.cols());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < k.cols(); ++j) coeff.at(i, j) = k.at(i, j);
  return a * coeff;
}

}  // namespace

JointlyMonicResult is_jointly_monic(const FgModule& source,
                                    const std::vector<ModMap>& family) {
  source.validate();
  IntMatrix common = IntMatrix::identity(source.gens);
  for (const auto& f : family) {
    f.validate();
    if (f.source.ring_n != source.ring_n || f.source.gens != source.gens ||
        !(f.source.rel == source.rel))
      throw bad_input("family members must share the source presentation");
    IntMatrix ki = preimage_lattice(f.mat, f.target.full_relations());
    common = lattice_intersect(common, ki);
  }
  // The source relations always land in every kernel preimage; the family
  // is jointly monic iff nothing else does.
  IntMatrix full_src = source.full_relations();
  JointlyMonicResult out;
  out.monic = true;
  for (std::size_t j = 0; j < common.cols(); ++j) {
    std::vector<mpz_class> col(common.rows());
    for (std::size_t i = 0; i < common.rows(); ++i) col[i] = common.at(i, j);
    if (!in_column_lattice(full_src, col)) {
      out.monic = false;
      out.witness = col;
      return out;
    }
  }
  return out;
}

FlatnessResult flatness_test_finite_ring(const FgModule& m) {
  m.validate();
  if (m.ring_n == 0)
    throw bad_input("flatness test needs a finite base ring Z/n");
  IntMatrix full = m.full_relations();
  FlatnessResult out;
  for (mpz_class d = 1; d <= m.ring_n; ++d) {
    if (m.ring_n % d != 0) continue;
    // (d) (x) M -> M is injective iff the d-torsion of M is (n/d)M.
    IntMatrix scale(m.gens, m.gens);
    for (std::size_t i = 0; i < m.gens; ++i) scale.at(i, i) = d;
    IntMatrix torsion = preimage_lattice(scale, full);
    mpz_class q = m.ring_n / d;
    IntMatrix target(m.gens, m.gens);
    for (std::size_t i = 0; i < m.gens; ++i) target.at(i, i) = q;
    IntMatrix allowed = full.hstack(target);
    for (std::size_t j = 0; j < torsion.cols(); ++j) {
      std::vector<mpz_class> col(torsion.rows());
      for (std::size_t i = 0; i < torsion.rows(); ++i)
        col[i] = torsion.at(i, j);
      if (!in_column_lattice(allowed, col)) {
        out.flat = false;
        out.witness_divisor = d;
        return out;
      }
    }
  }
  out.flat = true;
  return out;
}

PreservationResult preserves_jointly_monic(const FgModule& m,
                                           const FgModule& source,
                                           const std::vector<ModMap>& family) {
  auto base = is_jointly_monic(source, family);
  if (!base.monic)
    throw bad_input("input family is not jointly monic");
  FgModule tsrc = tensor_fg(source, m);
  std::vector<ModMap> tensored;
  IntMatrix idm = IntMatrix::identity(m.gens);
  for (const auto& f : family) {
    ModMap g;
    g.source = tsrc;
    g.target = tensor_fg(f.target, m);
    g.mat = ikron(f.mat, idm);
    tensored.push_back(std::move(g));
  }
  auto res = is_jointly_monic(tsrc, tensored);
  PreservationResult out;
  out.preserved = res.monic;
  out.witness = res.witness;
  return out;
}

}  // namespace hopfcat
