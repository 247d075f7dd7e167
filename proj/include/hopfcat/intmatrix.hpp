#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "hopfcat/field.hpp"

namespace hopfcat {

// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const mpz_class& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  mpz_class& at(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }

  bool operator==(const IntMatrix& o) const;
  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix hstack(const IntMatrix& o) const;
  IntMatrix vstack(const IntMatrix& o) const;
  IntMatrix transpose() const;
  bool is_zero() const;

 private:
  std::size_t rows_, cols_;
  std::vector<mpz_class> entries_;
};

struct SnfResult {
  IntMatrix U, D, V;  // D = U * M * V, U and V unimodular
};

// Smith normal form: D diagonal with nonnegative invariant factors
// d_i | d_{i+1}.
SnfResult snf(const IntMatrix& m);

// Kronecker product (same index convention as the field version).
IntMatrix ikron(const IntMatrix& a, const IntMatrix& b);

// Basis of the integer kernel lattice { v : Mv = 0 }, as matrix columns.
IntMatrix int_kernel(const IntMatrix& m);

// One integer solution of Mx = b, if any.
std::optional<std::vector<mpz_class>> int_solve(const IntMatrix& m,
                                                const std::vector<mpz_class>& b);

// True iff b lies in the column lattice of M.
bool in_column_lattice(const IntMatrix& m, const std::vector<mpz_class>& b);

}  // namespace hopfcat
