#pragma once

#include <map>
#include <string>
#include <vector>

#include "hopfcat/matrix.hpp"

namespace hopfcat {

using ObjPair = std::pair<std::string, std::string>;

// A finite graph enriched in finite-dimensional vector spaces: a list of
// objects plus a hom dimension for every ordered pair (missing entries mean
// dimension zero).
struct VGraph {
  std::vector<std::string> objects;
  std::map<ObjPair, std::size_t> hom_dims;
  FieldSpec field = FieldSpec::rationals();

  std::size_t dim(const std::string& x, const std::string& y) const;
  bool has_object(const std::string& x) const;
  void validate() const;
};

struct VGraphMorphism {
  VGraph source, target;
  std::map<std::string, std::string> f0;
  // component at (x,y): dim target(f0 x, f0 y) x dim source(x, y)
  std::map<ObjPair, ExactMatrix> components;

  const ExactMatrix& component(const std::string& x, const std::string& y) const;
  void validate() const;
};

VGraphMorphism identity_morphism(const VGraph& g);
VGraphMorphism compose(const VGraphMorphism& g, const VGraphMorphism& f);

struct ClassifyResult {
  bool mono = false;
  bool epi = false;
  // On mono failure: a nonzero kernel vector of some component (or a pair of
  // objects collapsed by f0). On epi failure: the uncovered hom.
  std::string mono_witness;
  std::string epi_witness;
};

ClassifyResult classify_morphism(const VGraphMorphism& f);

VGraph opposite_graph(const VGraph& a);

// A finite diagram of V-graphs: nodes plus arrows between node indices.
struct VGraphDiagram {
  std::vector<VGraph> nodes;
  struct Arrow {
    std::size_t src, tgt;
    VGraphMorphism f;  // f.source = nodes[src], f.target = nodes[tgt]
  };
  std::vector<Arrow> arrows;
};

struct VGraphLimit {
  VGraph apex;
  std::vector<VGraphMorphism> projections;  // one per diagram node
};

// Limit of a finite diagram: objects are compatible tuples, homs are joint
// equalizer subspaces inside the product of the component homs.
VGraphLimit limit_finite_diagram(const VGraphDiagram& d);

}  // namespace hopfcat
