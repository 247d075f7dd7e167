#pragma once

#include <string>
#include <vector>

#include "hopfcat/subspace.hpp"

namespace hopfcat {

// A finite-dimensional coalgebra: delta's columns are the comultiplications
// of the basis vectors (dim^2 x dim under the fixed tensor-index convention),
// epsilon is 1 x dim.
struct Coalgebra {
  std::size_t dim = 0;
  ExactMatrix delta;
  ExactMatrix epsilon;

  const FieldSpec& field() const { return epsilon.field(); }
  void validate_shapes() const;
};

// Empty report iff the coalgebra axioms hold; otherwise one line per failed
// axiom with a witness basis index.
std::vector<std::string> check_coalgebra(const Coalgebra& c);

// delta^n: dim^n x dim; delta^0 = epsilon, delta^1 = id,
// delta^n = (delta^{n-1} (x) id) o delta.
ExactMatrix iterate_delta(const Coalgebra& c, std::size_t n);

// Largest J inside W with epsilon(J) = 0 and delta(J) in J(x)C + C(x)J,
// by descending fixed-point iteration.
Subspace largest_coideal_in(const Coalgebra& c, const Subspace& w);

// Largest E inside W with delta(E) in E(x)E.
Subspace largest_subcoalgebra_in(const Coalgebra& c, const Subspace& w);

// Quotient of C by a coideal J, on the canonical complement basis.
// If q_out is non-null the quotient map is stored there.
Coalgebra quotient_coalgebra(const Coalgebra& c, const Subspace& j,
                             ExactMatrix* q_out = nullptr);

// Subcoalgebra structure induced on a delta-stable subspace.
struct SubCoalgebra {
  Subspace space;
  Coalgebra coalg;
  ExactMatrix inclusion;  // ambient x dim(space)
};
SubCoalgebra induced_subcoalgebra(const Coalgebra& c, const Subspace& e);

// Empty report iff f is a coalgebra morphism from c to d.
std::vector<std::string> check_coalgebra_morphism(const Coalgebra& c,
                                                  const Coalgebra& d,
                                                  const ExactMatrix& f);

// The couniversal factorization of a linear map gamma: C -> V through the
// cofree coalgebra on V, represented by its jointly monic component family
// gamma_k = gamma^{(x)k} o delta^k for k = 0..K. K is certified: the
// intersection of the component kernels up to K equals the independently
// computed largest coideal inside ker gamma.
struct CofreeFactorization {
  Coalgebra source;
  std::size_t target_dim = 0;
  ExactMatrix gamma;
  std::vector<ExactMatrix> components;  // gamma_0 .. gamma_K
  std::size_t stabilization = 0;        // K
  Subspace kernel;                      // ker of the universal map
  Coalgebra image;                      // source / kernel
  ExactMatrix quotient;                 // the strong epi e: source -> image
};
CofreeFactorization cofree_factorization(const Coalgebra& c,
                                         const ExactMatrix& gamma);

// Equalizer of two coalgebra morphisms f, g: c -> d, as the largest
// subcoalgebra inside ker(f - g).
SubCoalgebra equalizer_coalg(const Coalgebra& c, const Coalgebra& d,
                             const ExactMatrix& f, const ExactMatrix& g);

// Co-opposite: delta replaced by swap o delta.
Coalgebra cop(const Coalgebra& c);

// Tensor product coalgebra on the fixed index convention.
Coalgebra tensor_coalgebra(const Coalgebra& a, const Coalgebra& b);

// The one-dimensional trivial coalgebra (the unit object).
Coalgebra trivial_coalgebra(const FieldSpec& f);

// Coalgebra with every basis vector grouplike.
Coalgebra grouplike_coalgebra(std::size_t dim, const FieldSpec& f);

// The n x n matrix coalgebra: delta(e_ij) = sum_k e_ik (x) e_kj,
// epsilon(e_ij) = [i == j]; basis index of e_ij is i*n + j.
Coalgebra matrix_coalgebra(std::size_t n, const FieldSpec& f);

}  // namespace hopfcat
