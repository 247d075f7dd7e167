#pragma once

#include "hopfcat/vcategory.hpp"

namespace hopfcat {

// An antipode: S_{xy}: A_xy -> A_yx per ordered pair.
struct Antipode {
  std::map<ObjPair, ExactMatrix> components;

  const ExactMatrix& at(const std::string& x, const std::string& y) const;
};

struct AntipodeResult {
  std::optional<Antipode> antipode;
  // Certified uniqueness: the homogeneous systems all have zero kernel.
  bool unique = false;
  // On failure: which pair's linear system is inconsistent.
  std::string inconsistency;
};

// Assembles the two antipode equations per pair as one linear system in the
// entries of S_{xy} and solves it exactly.
AntipodeResult solve_antipode(const SemiHopfCategory& a);

// Empty report iff: both antipode equations hold; S is an anti-V-functor;
// each component is an anti-coalgebra morphism (equivalently S is a semi-Hopf
// morphism into variant(a, opcop)).
std::vector<std::string> check_antipode_properties(const SemiHopfCategory& a,
                                                   const Antipode& s);

// The direct sum of all homs of a finite semi-Hopf category, with block
// multiplication, unit = sum of the j_x, and block-diagonal delta/epsilon.
struct WeakBialgebraData {
  std::size_t dim = 0;
  ExactMatrix mult;        // dim x dim^2
  ExactMatrix unit;        // dim x 1
  Coalgebra coalg;         // delta, epsilon on the flattened space
  std::optional<ExactMatrix> antipode;  // dim x dim when supplied
  std::map<ObjPair, std::size_t> offsets;
  // Which of the verifiable axioms hold; the list is the subset expressible
  // from this data, not a full weak-bialgebra certification.
  std::vector<std::string> report;
  bool delta_of_unit_is_unit_tensor_unit = false;
  bool degenerate = false;  // empty object set
};

WeakBialgebraData flatten_weak_hopf(const SemiHopfCategory& a,
                                    const Antipode* s = nullptr);

}  // namespace hopfcat
