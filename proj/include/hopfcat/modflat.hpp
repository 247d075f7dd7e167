#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfcat/intmatrix.hpp"

namespace hopfcat {

// Finitely generated module over Z (ring_n = 0) or Z/n (ring_n = n > 0),
// presented as the cokernel of an integer relation matrix: gens rows, one
// column per relation. Over Z/n the ring relations n*e_i are implicit and
// appended by full_relations().
struct FgModule {
  unsigned long ring_n = 0;
  std::size_t gens = 0;
  IntMatrix rel;  // gens x (number of relations)

  void validate() const;
  IntMatrix full_relations() const;
  // Nontrivial invariant factors of the presentation (1s dropped, 0s kept
  // for free ranks over Z; over Z/n every factor divides n).
  std::vector<mpz_class> invariant_factors() const;
  bool is_zero() const;
};

FgModule cyclic_module(unsigned long ring_n, const mpz_class& order);
FgModule free_module(unsigned long ring_n, std::size_t rank);

// A module map as an integer matrix on generators; valid iff it carries the
// source relations into the target relation lattice.
struct ModMap {
  FgModule source, target;
  IntMatrix mat;  // target.gens x source.gens

  void validate() const;
};

ModMap identity_modmap(const FgModule& m);

// Presentation tensor product: generators are pairs, relations are the
// source relations tensored with generators on either side.
FgModule tensor_fg(const FgModule& m, const FgModule& n);

struct JointlyMonicResult {
  bool monic = false;
  // A generator of the common kernel that is nonzero in the source module.
  std::optional<std::vector<mpz_class>> witness;
};

// True iff the only common-kernel elements of the family are relations of
// the shared source. An empty family is jointly monic only on the zero
// module; the witness is then any nonzero element.
JointlyMonicResult is_jointly_monic(const FgModule& source,
                                    const std::vector<ModMap>& family);

struct FlatnessResult {
  bool flat = false;
  // First divisor d of n for which (d) (x) M -> M fails to be injective.
  std::optional<mpz_class> witness_divisor;
};

// Exhaustive ideal criterion over Z/n: M is flat iff for every divisor d of
// n the multiplication map (d) (x) M -> M is injective, i.e. the d-torsion
// of M is (n/d)M. Errors on ring Z.
FlatnessResult flatness_test_finite_ring(const FgModule& m);

struct PreservationResult {
  bool preserved = false;
  std::optional<std::vector<mpz_class>> witness;  // element of source (x) M
};

// Tensors every member of a jointly monic family with m and re-tests joint
// monicity. Errors if the input family is not jointly monic.
PreservationResult preserves_jointly_monic(const FgModule& m,
                                           const FgModule& source,
                                           const std::vector<ModMap>& family);

}  // namespace hopfcat
