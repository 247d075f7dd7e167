#pragma once

#include "hopfcat/matrix.hpp"

namespace hopfcat {

// A subspace of a coordinate space, held in canonical form: basis vectors are
// the rows of a reduced-row-echelon matrix. Two equal subspaces compare equal.
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  static Subspace zero(std::size_t ambient, const FieldSpec& f);
  static Subspace full(std::size_t ambient, const FieldSpec& f);
  // Span of the given vectors (rows of `gens`).
  static Subspace span_rows(const ExactMatrix& gens);
  // Span of the columns of `gens`.
  static Subspace span_cols(const ExactMatrix& gens);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const FieldSpec& field() const { return basis_.field(); }
  const ExactMatrix& basis_rows() const { return basis_; }
  ExactMatrix basis_cols() const { return basis_.transpose(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const std::vector<Scalar>& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const;

  Subspace intersect(const Subspace& o) const;
  Subspace sum(const Subspace& o) const;

  // { v : M v in *this }, where M maps the preimage ambient into ours.
  Subspace preimage(const ExactMatrix& m) const;

  // Coordinates of v modulo this subspace, expressed on the complement basis
  // { e_j : j not a pivot column }.
  std::vector<Scalar> reduce_mod(const std::vector<Scalar>& v) const;

  // Quotient map ambient -> ambient - dim() onto the canonical complement
  // basis, and the section embedding the complement back.
  ExactMatrix quotient_map() const;
  ExactMatrix section() const;

 private:
  std::size_t ambient_;
  ExactMatrix basis_;                 // dim x ambient, RREF
  std::vector<std::size_t> pivots_;
};

}  // namespace hopfcat
