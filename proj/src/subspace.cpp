#include "hopfcat/subspace.hpp"

namespace hopfcat {

Subspace Subspace::zero(std::size_t ambient, const FieldSpec& f) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = ExactMatrix(0, ambient, f);
  return s;
}

Subspace Subspace::full(std::size_t ambient, const FieldSpec& f) {
  return span_rows(ExactMatrix::identity(ambient, f));
}

Subspace Subspace::span_rows(const ExactMatrix& gens) {
  RrefResult rr = rref(gens);
  Subspace s;
  s.ambient_ = gens.cols();
  s.basis_ = rr.R.rows_slice(0, rr.rank);
  s.pivots_ = rr.pivots;
  return s;
}

Subspace Subspace::span_cols(const ExactMatrix& gens) {
  return span_rows(gens.transpose());
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
  if (v.size() != ambient_) throw bad_input("subspace ambient mismatch");
  std::vector<Scalar> w = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    const Scalar c = w[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      w[j] = w[j] - c * basis_.at(i, j);
  }
  for (const auto& c : w)
    if (!c.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i) {
    std::vector<Scalar> v;
    for (std::size_t j = 0; j < ambient_; ++j)
      v.push_back(other.basis_.at(i, j));
    if (!contains(v)) return false;
  }
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (ambient_ != o.ambient_) throw bad_input("intersect ambient mismatch");
  if (dim() == 0 || o.dim() == 0) return zero(ambient_, field());
  // v = B1^T a = B2^T b  <=>  (a,b) in ker [B1^T | -B2^T]
  ExactMatrix b1 = basis_cols();
  ExactMatrix b2 = o.basis_cols().scaled(-Scalar::one(field()));
  ExactMatrix k = kernel_basis(b1.hstack(b2));
  ExactMatrix vecs(ambient_, k.cols(), field());
  for (std::size_t t = 0; t < k.cols(); ++t) {
    std::vector<Scalar> a;
    for (std::size_t i = 0; i < dim(); ++i) a.push_back(k.at(i, t));
    std::vector<Scalar> v = b1.apply(a);
    for (std::size_t i = 0; i < ambient_; ++i) vecs.set(i, t, v[i]);
  }
  return span_cols(vecs);
}

Subspace Subspace::sum(const Subspace& o) const {
  if (ambient_ != o.ambient_) throw bad_input("sum ambient mismatch");
  return span_rows(basis_.vstack(o.basis_));
}

Subspace Subspace::preimage(const ExactMatrix& m) const {
  if (m.rows() != ambient_) throw bad_input("preimage shape mismatch");
  if (dim() == 0) return span_cols(kernel_basis(m));
  ExactMatrix stacked = m.hstack(basis_cols().scaled(-Scalar::one(field())));
  ExactMatrix k = kernel_basis(stacked);
  ExactMatrix vecs(m.cols(), k.cols(), m.field());
  for (std::size_t t = 0; t < k.cols(); ++t)
    for (std::size_t i = 0; i < m.cols(); ++i) vecs.set(i, t, k.at(i, t));
  return span_cols(vecs);
}

std::vector<Scalar> Subspace::reduce_mod(const std::vector<Scalar>& v) const {
  std::vector<Scalar> w = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    const Scalar c = w[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      w[j] = w[j] - c * basis_.at(i, j);
  }
  std::vector<bool> is_pivot(ambient_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<Scalar> out;
  for (std::size_t j = 0; j < ambient_; ++j)
    if (!is_pivot[j]) out.push_back(w[j]);
  return out;
}

ExactMatrix Subspace::quotient_map() const {
  ExactMatrix q(ambient_ - dim(), ambient_, field());
  std::vector<bool> is_pivot(ambient_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  // reduce each standard basis vector, read off complement coordinates
  for (std::size_t j = 0; j < ambient_; ++j) {
    std::vector<Scalar> e(ambient_, Scalar::zero(field()));
    e[j] = Scalar::one(field());
    std::vector<Scalar> r = reduce_mod(e);
    for (std::size_t i = 0; i < r.size(); ++i) q.set(i, j, r[i]);
  }
  return q;
}

ExactMatrix Subspace::section() const {
  ExactMatrix s(ambient_, ambient_ - dim(), field());
  std::vector<bool> is_pivot(ambient_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::size_t t = 0;
  for (std::size_t j = 0; j < ambient_; ++j)
    if (!is_pivot[j]) s.set(j, t++, Scalar::one(field()));
  return s;
}

}  // namespace hopfcat
