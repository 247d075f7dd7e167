#pragma once

#include <optional>

#include "hopfcat/vcategory.hpp"

namespace hopfcat {

// The free V-category on a V-graph, truncated at chain length L. Each hom
// (x,y) is a direct sum of chain summands: one per sequence of intermediate
// objects z_1..z_{l-1}, of dimension prod of the letter hom dimensions, plus
// the one-dimensional unit summand at (x,x) for length 0. Basis order: by
// length, then chain enumeration order, then tensor index within the chain.
struct TruncatedFreeCat {
  VGraph base;
  std::size_t max_len = 0;

  struct Segment {
    std::size_t length;
    std::vector<std::string> via;  // z_1..z_{l-1}
    std::size_t offset;            // within the assembled hom
    std::size_t dim;
    std::vector<std::size_t> letter_dims;  // l letter factors
  };
  std::map<ObjPair, std::vector<Segment>> segments;
  std::map<ObjPair, std::size_t> dims;

  // The assembled hom dimensions as a V-graph.
  VGraph hom_graph() const;

  // Locate the segment and in-segment index of a basis element.
  std::pair<const Segment*, std::size_t> locate(const std::string& x,
                                                const std::string& y,
                                                std::size_t idx) const;

  // Concatenation of basis elements; nullopt iff the combined length exceeds
  // the truncation bound (the boundary is flagged, never silently zeroed).
  std::optional<std::size_t> compose_basis(const std::string& x,
                                           const std::string& y,
                                           const std::string& z,
                                           std::size_t i, std::size_t k) const;
};

TruncatedFreeCat free_vcategory_truncated(const VGraph& g, std::size_t max_len);

// Free semi-Hopf category on a graph of coalgebras, truncated: the underlying
// truncated category plus, per hom, the direct-sum coalgebra whose chain
// summands are tensor products of the letter coalgebras (units grouplike).
struct TruncatedFreeSemiHopf {
  TruncatedFreeCat cat;
  std::map<ObjPair, Coalgebra> coalgebras;
};

TruncatedFreeSemiHopf free_semihopf_truncated(
    const VGraph& g, const std::map<ObjPair, Coalgebra>& letters,
    std::size_t max_len);

}  // namespace hopfcat
