#pragma once

#include <optional>

#include "hopfcat/vcategory.hpp"

namespace hopfcat {

// Plain directed multigraph: the Set-enriched input data.
struct FinGraph {
  std::vector<std::string> vertices;
  struct Edge {
    std::string id, src, tgt;
  };
  std::vector<Edge> edges;

  void validate() const;
  std::size_t vertex_index(const std::string& v) const;
};

// A directed path, stored as edge indices (diagrammatic order).
struct Path {
  std::vector<std::size_t> edges;
};

// free_category_paths(G, L)[{x,y}][l] = all paths of length l from x to y,
// in lexicographic order on edge indices.
std::map<ObjPair, std::vector<std::vector<Path>>> free_category_paths(
    const FinGraph& g, std::size_t max_len);

struct SignedLetter {
  std::size_t edge;
  bool inv;
  bool operator==(const SignedLetter& o) const {
    return edge == o.edge && inv == o.inv;
  }
  // Canonical letter order: by edge, plain before inverse.
  bool operator<(const SignedLetter& o) const {
    return edge != o.edge ? edge < o.edge : inv < o.inv;
  }
};

// A word in the free groupoid with no adjacent cancelling pair.
struct ReducedWord {
  std::vector<SignedLetter> letters;
  std::string src, tgt;

  bool operator==(const ReducedWord& o) const;
  // Canonical order: length, then lexicographic on letters.
  bool operator<(const ReducedWord& o) const;
  std::string str(const FinGraph& g) const;
};

// Free cancellation; the endpoints must chain correctly in g.
ReducedWord reduce_word(const FinGraph& g,
                        const std::vector<SignedLetter>& letters,
                        const std::string& src);
ReducedWord inverse_word(const ReducedWord& w);
ReducedWord concat_words(const FinGraph& g, const ReducedWord& a,
                         const ReducedWord& b);

// All reduced words of length <= max_len per vertex pair, bucketed by length
// and canonically ordered within each bucket.
std::map<ObjPair, std::vector<std::vector<ReducedWord>>> free_groupoid_words(
    const FinGraph& g, std::size_t max_len);

// A finite category given by an explicit composition table.
struct FinCategory {
  std::vector<std::string> objects;
  struct Arrow {
    std::string id, src, tgt;
  };
  std::vector<Arrow> arrows;
  std::map<std::string, std::size_t> identity;  // object -> arrow index
  // compose[{f,g}] = index of fg for f: x->y, g: y->z (diagrammatic).
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> compose;

  void validate() const;
  std::optional<std::size_t> comp(std::size_t f, std::size_t g) const;
};

// The subcategory of two-sided invertible arrows.
FinCategory core_groupoid(const FinCategory& c);

bool is_groupoid(const FinCategory& c);

// Free vector spaces on hom sets, arrows grouplike, composition linearized.
// For groupoids the linearized inversion is returned as the antipode data
// (a per-pair matrix family).
struct LinearizedCategory {
  SemiHopfCategory shopf;
  // arrow index -> (hom pair, basis index within that hom)
  std::vector<std::pair<ObjPair, std::size_t>> basis_of_arrow;
  std::optional<std::map<ObjPair, ExactMatrix>> inversion;  // groupoids only
};
LinearizedCategory linearize(const FinCategory& c, const FieldSpec& f);

}  // namespace hopfcat
