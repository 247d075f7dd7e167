#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hopfcat/field.hpp"

namespace hopfcat {

// Dense matrix of exact scalars, row-major. All entries share one FieldSpec.
//
// Tensor convention used throughout the library: the basis of V (x) W is
// indexed by (i, j) |-> i * dim(W) + j, which is exactly what kron() realizes.
class ExactMatrix {
 public:
  ExactMatrix() : rows_(0), cols_(0), spec_(FieldSpec::rationals()) {}
  ExactMatrix(std::size_t rows, std::size_t cols, const FieldSpec& f);

  static ExactMatrix identity(std::size_t n, const FieldSpec& f);
  static ExactMatrix from_columns(const std::vector<std::vector<Scalar>>& cols,
                                  std::size_t rows, const FieldSpec& f);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return spec_; }

  const Scalar& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  void set(std::size_t i, std::size_t j, const Scalar& v);

  bool is_zero() const;
  bool operator==(const ExactMatrix& o) const;
  bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix scaled(const Scalar& c) const;
  ExactMatrix transpose() const;

  ExactMatrix hstack(const ExactMatrix& o) const;
  ExactMatrix vstack(const ExactMatrix& o) const;
  ExactMatrix column(std::size_t j) const;
  std::vector<Scalar> column_vec(std::size_t j) const;
  ExactMatrix rows_slice(std::size_t from, std::size_t count) const;

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

 private:
  std::size_t rows_, cols_;
  FieldSpec spec_;
  std::vector<Scalar> entries_;
};

struct RrefResult {
  ExactMatrix R;
  std::vector<std::size_t> pivots;
  std::size_t rank;
};

// Reduced row echelon form (pivot entries 1, pivot columns elementary).
RrefResult rref(const ExactMatrix& m);

// Canonical basis of { v : Mv = 0 } in the reduced-echelon parametrization:
// one vector per free column, with entry 1 at that column. Returned as the
// columns of a cols(M) x nullity matrix.
ExactMatrix kernel_basis(const ExactMatrix& m);

struct SolveResult {
  ExactMatrix particular;  // one solution of AX = B
  ExactMatrix kernel;      // kernel_basis(A)
};

// Solves AX = B; nullopt iff inconsistent. The particular solution is the
// canonical one with zeros at all free coordinates.
std::optional<SolveResult> solve(const ExactMatrix& a, const ExactMatrix& b);

// Kronecker product under the fixed tensor-index convention.
ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

// The symmetry V (x) W -> W (x) V as a permutation matrix (d2*d1) x (d1*d2)
// on the fixed index convention.
ExactMatrix tensor_swap(std::size_t d1, std::size_t d2, const FieldSpec& f);

std::size_t rank(const ExactMatrix& m);

}  // namespace hopfcat
