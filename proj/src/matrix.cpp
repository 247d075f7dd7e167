#include "hopfcat/matrix.hpp"

namespace hopfcat {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols,
                         const FieldSpec& f)
    : rows_(rows), cols_(cols), spec_(f),
      entries_(rows * cols, Scalar::zero(f)) {}

ExactMatrix ExactMatrix::identity(std::size_t n, const FieldSpec& f) {
  ExactMatrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
  return m;
}

ExactMatrix ExactMatrix::from_columns(
    const std::vector<std::vector<Scalar>>& cols, std::size_t rows,
    const FieldSpec& f) {
  ExactMatrix m(rows, cols.size(), f);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw bad_input("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m.set(i, j, cols[j][i]);
  }
  return m;
}

void ExactMatrix::set(std::size_t i, std::size_t j, const Scalar& v) {
  if (v.field() != spec_)
    throw bad_input("mixed field specs in matrix entry");
  entries_[i * cols_ + j] = v;
}

bool ExactMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || spec_ != o.spec_) return false;
  for (std::size_t k = 0; k < entries_.size(); ++k)
    if (entries_[k] != o.entries_[k]) return false;
  return true;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw bad_input("shape mismatch in matrix addition");
  ExactMatrix m(rows_, cols_, spec_);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    m.entries_[k] = entries_[k] + o.entries_[k];
  return m;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  return *this + o.scaled(-Scalar::one(spec_));
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw bad_input("shape mismatch in matrix product");
  if (spec_ != o.spec_) throw bad_input("mixed field specs in matrix product");
  ExactMatrix m(rows_, o.cols_, spec_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (!b.is_zero()) m.entries_[i * o.cols_ + j] += a * b;
      }
    }
  return m;
}

ExactMatrix ExactMatrix::scaled(const Scalar& c) const {
  ExactMatrix m(rows_, cols_, spec_);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    m.entries_[k] = entries_[k] * c;
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix m(cols_, rows_, spec_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.set(j, i, at(i, j));
  return m;
}

ExactMatrix ExactMatrix::hstack(const ExactMatrix& o) const {
  if (rows_ != o.rows_) throw bad_input("hstack row mismatch");
  ExactMatrix m(rows_, cols_ + o.cols_, spec_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m.set(i, j, at(i, j));
    for (std::size_t j = 0; j < o.cols_; ++j) m.set(i, cols_ + j, o.at(i, j));
  }
  return m;
}

ExactMatrix ExactMatrix::vstack(const ExactMatrix& o) const {
  if (cols_ != o.cols_) throw bad_input("vstack column mismatch");
  ExactMatrix m(rows_ + o.rows_, cols_, spec_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.set(i, j, at(i, j));
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.set(rows_ + i, j, o.at(i, j));
  return m;
}

ExactMatrix ExactMatrix::column(std::size_t j) const {
  ExactMatrix m(rows_, 1, spec_);
  for (std::size_t i = 0; i < rows_; ++i) m.set(i, 0, at(i, j));
  return m;
}

std::vector<Scalar> ExactMatrix::column_vec(std::size_t j) const {
  std::vector<Scalar> v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return v;
}

ExactMatrix ExactMatrix::rows_slice(std::size_t from, std::size_t count) const {
  ExactMatrix m(count, cols_, spec_);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.set(i, j, at(from + i, j));
  return m;
}

std::vector<Scalar> ExactMatrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw bad_input("vector length mismatch in apply");
  std::vector<Scalar> r(rows_, Scalar::zero(spec_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

RrefResult rref(const ExactMatrix& m) {
  RrefResult out{m, {}, 0};
  ExactMatrix& a = out.R;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = a.rows();
    for (std::size_t i = r; i < a.rows(); ++i)
      if (!a.at(i, c).is_zero()) { piv = i; break; }
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) {
        Scalar tmp = a.at(r, j);
        a.set(r, j, a.at(piv, j));
        a.set(piv, j, tmp);
      }
    Scalar inv = a.at(r, c).inverse();
    for (std::size_t j = 0; j < a.cols(); ++j) a.set(r, j, a.at(r, j) * inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      Scalar f = a.at(i, c);
      for (std::size_t j = 0; j < a.cols(); ++j)
        a.set(i, j, a.at(i, j) - f * a.at(r, j));
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

ExactMatrix kernel_basis(const ExactMatrix& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);

  ExactMatrix k(m.cols(), free_cols.size(), m.field());
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    std::size_t f = free_cols[t];
    k.set(f, t, Scalar::one(m.field()));
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
      k.set(rr.pivots[i], t, -rr.R.at(i, f));
  }
  return k;
}

std::optional<SolveResult> solve(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows()) throw bad_input("solve: A.rows != B.rows");
  if (a.field() != b.field()) throw bad_input("solve: mixed field specs");
  RrefResult rr = rref(a.hstack(b));
  // Inconsistent iff some pivot lands in the B block.
  for (auto p : rr.pivots)
    if (p >= a.cols()) return std::nullopt;
  ExactMatrix x(a.cols(), b.cols(), a.field());
  for (std::size_t i = 0; i < rr.pivots.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      x.set(rr.pivots[i], j, rr.R.at(i, a.cols() + j));
  return SolveResult{x, kernel_basis(a)};
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.field() != b.field()) throw bad_input("kron: mixed field specs");
  ExactMatrix m(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& s = a.at(i, j);
      if (s.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!b.at(k, l).is_zero())
            m.set(i * b.rows() + k, j * b.cols() + l, s * b.at(k, l));
    }
  return m;
}

ExactMatrix tensor_swap(std::size_t d1, std::size_t d2, const FieldSpec& f) {
  ExactMatrix s(d2 * d1, d1 * d2, f);
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t j = 0; j < d2; ++j)
      s.set(j * d1 + i, i * d2 + j, Scalar::one(f));
  return s;
}

std::size_t rank(const ExactMatrix& m) { return rref(m).rank; }

}  // namespace hopfcat
