#include "hopfcat/intmatrix.hpp"

namespace hopfcat {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw bad_input("IntMatrix product shape mismatch");
  IntMatrix m(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        m.at(i, j) += at(i, k) * o.at(k, j);
    }
  return m;
}

IntMatrix IntMatrix::hstack(const IntMatrix& o) const {
  if (rows_ != o.rows_) throw bad_input("IntMatrix hstack mismatch");
  IntMatrix m(rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) m.at(i, cols_ + j) = o.at(i, j);
  }
  return m;
}

IntMatrix IntMatrix::vstack(const IntMatrix& o) const {
  if (cols_ != o.cols_) throw bad_input("IntMatrix vstack mismatch");
  IntMatrix m(rows_ + o.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(rows_ + i, j) = o.at(i, j);
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

bool IntMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (e != 0) return false;
  return true;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}
void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}
// row a -= q * row b
void row_op(IntMatrix& m, std::size_t a, std::size_t b, const mpz_class& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) -= q * m.at(b, j);
}
void col_op(IntMatrix& m, std::size_t a, std::size_t b, const mpz_class& q) {
  for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, a) -= q * m.at(i, b);
}
void negate_row(IntMatrix& m, std::size_t a) {
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) = -m.at(a, j);
}

}  // namespace

SnfResult snf(const IntMatrix& m) {
  SnfResult out{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  IntMatrix& d = out.D;
  IntMatrix& u = out.U;
  IntMatrix& v = out.V;
  std::size_t n = std::min(d.rows(), d.cols());

  for (std::size_t t = 0; t < n; ++t) {
    // find a nonzero pivot in the trailing block
    std::size_t pi = d.rows(), pj = 0;
    for (std::size_t i = t; i < d.rows() && pi == d.rows(); ++i)
      for (std::size_t j = t; j < d.cols(); ++j)
        if (d.at(i, j) != 0) { pi = i; pj = j; break; }
    if (pi == d.rows()) break;
    if (pi != t) { swap_rows(d, t, pi); swap_rows(u, t, pi); }
    if (pj != t) { swap_cols(d, t, pj); swap_cols(v, t, pj); }

    bool dirty = true;
    while (dirty) {
      dirty = false;
      // clear column t
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d.at(i, t) == 0) continue;
        mpz_class q = d.at(i, t) / d.at(t, t);
        row_op(d, i, t, q);
        row_op(u, i, t, q);
        if (d.at(i, t) != 0) {  // remainder smaller; swap up and retry
          swap_rows(d, t, i);
          swap_rows(u, t, i);
          dirty = true;
        }
      }
      // clear row t
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d.at(t, j) == 0) continue;
        mpz_class q = d.at(t, j) / d.at(t, t);
        col_op(d, j, t, q);
        col_op(v, j, t, q);
        if (d.at(t, j) != 0) {
          swap_cols(d, t, j);
          swap_cols(v, t, j);
          dirty = true;
        }
      }
      if (dirty) continue;
      // divisibility fixup: pivot must divide the trailing block
      for (std::size_t i = t + 1; i < d.rows() && !dirty; ++i)
        for (std::size_t j = t + 1; j < d.cols() && !dirty; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            // add row i to row t, then restart elimination
            row_op(d, t, i, mpz_class(-1));
            row_op(u, t, i, mpz_class(-1));
            dirty = true;
          }
    }
    if (d.at(t, t) < 0) { negate_row(d, t); negate_row(u, t); }
  }
  return out;
}

IntMatrix ikron(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          m.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    }
  return m;
}

IntMatrix int_kernel(const IntMatrix& m) {
  SnfResult s = snf(m);
  std::size_t n = std::min(m.rows(), m.cols());
  std::vector<std::size_t> zero_cols;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (j >= n || s.D.at(j, j) == 0) zero_cols.push_back(j);
  IntMatrix k(m.cols(), zero_cols.size());
  for (std::size_t t = 0; t < zero_cols.size(); ++t)
    for (std::size_t i = 0; i < m.cols(); ++i)
      k.at(i, t) = s.V.at(i, zero_cols[t]);
  return k;
}

std::optional<std::vector<mpz_class>> int_solve(
    const IntMatrix& m, const std::vector<mpz_class>& b) {
  if (b.size() != m.rows()) throw bad_input("int_solve length mismatch");
  SnfResult s = snf(m);
  // D y = U b, x = V y
  std::vector<mpz_class> ub(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j)
      ub[i] += s.U.at(i, j) * b[j];
  std::size_t n = std::min(m.rows(), m.cols());
  std::vector<mpz_class> y(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class di = i < n ? s.D.at(i, i) : mpz_class(0);
    if (di == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      if (ub[i] % di != 0) return std::nullopt;
      y[i] = ub[i] / di;
    }
  }
  std::vector<mpz_class> x(m.cols(), 0);
  for (std::size_t i = 0; i < m.cols(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) x[i] += s.V.at(i, j) * y[j];
  return x;
}

bool in_column_lattice(const IntMatrix& m, const std::vector<mpz_class>& b) {
  return int_solve(m, b).has_value();
}

}  // namespace hopfcat
