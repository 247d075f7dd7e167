#pragma once

#include <tuple>

#include "hopfcat/coalgebra.hpp"
#include "hopfcat/vgraph.hpp"

namespace hopfcat {

using ObjTriple = std::tuple<std::string, std::string, std::string>;

// A small category enriched in vector spaces: composition tensors
// m_{xyz}: A_xy (x) A_yz -> A_xz (diagrammatic order) and unit vectors
// j_x in A_xx.
struct VCategory {
  VGraph graph;
  std::map<ObjTriple, ExactMatrix> m;  // dim A_xz x (dim A_xy * dim A_yz)
  std::map<std::string, ExactMatrix> j;  // dim A_xx x 1

  const ExactMatrix& comp(const std::string& x, const std::string& y,
                          const std::string& z) const;
  const ExactMatrix& unit(const std::string& x) const;
  void validate_shapes() const;
};

std::vector<std::string> check_vcategory(const VCategory& a);

struct SemiHopfCategory {
  VCategory cat;
  std::map<ObjPair, Coalgebra> coalgebras;

  const Coalgebra& coalg(const std::string& x, const std::string& y) const;
  void validate_shapes() const;
};

std::vector<std::string> check_semihopf(const SemiHopfCategory& a);

enum class Variant { op, cop, opcop };
Variant parse_variant(const std::string& s);

VCategory opposite_vcategory(const VCategory& a);
SemiHopfCategory variant(const SemiHopfCategory& a, Variant which);

// A morphism of semi-Hopf categories: object map plus per-hom linear maps.
struct SemiHopfMorphism {
  std::map<std::string, std::string> f0;
  std::map<ObjPair, ExactMatrix> components;  // at source pair (x,y)
};

// Empty report iff f is a semi-Hopf morphism from a to b.
std::vector<std::string> check_semihopf_morphism(const SemiHopfCategory& a,
                                                 const SemiHopfCategory& b,
                                                 const SemiHopfMorphism& f);

// Couniversal image factorization of an identity-on-objects family of linear
// maps gamma_xy: C_xy -> A_xy into a V-category A: quotient C by the largest
// family of coideals inside ker gamma that is also a two-sided categorical
// ideal, yielding the semi-Hopf image together with the component families.
struct CoreflectResult {
  SemiHopfCategory image;
  std::map<ObjPair, Subspace> kernel;
  std::map<ObjPair, ExactMatrix> quotient;
  std::map<ObjPair, std::vector<ExactMatrix>> components;  // per hom gamma_k
};
CoreflectResult coreflect_image_semihopf(
    const SemiHopfCategory& c, const std::map<ObjPair, ExactMatrix>& gamma,
    const VCategory& a);

}  // namespace hopfcat
