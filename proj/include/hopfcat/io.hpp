#pragma once

#include <optional>
#include <string>

#include "hopfcat/groupoid.hpp"
#include "hopfcat/hopf.hpp"
#include "hopfcat/modflat.hpp"

namespace hopfcat {

// One serialized object. kind selects which member is populated; "hopf" is
// "semihopf" plus an antipode, "morphism" carries exactly one of the three
// morphism payloads per morphism_kind.
struct Document {
  std::string kind;  // vgraph | coalgebra | vcategory | semihopf | hopf |
                     // graph | fincategory | fgmodule | morphism
  std::optional<VGraph> vgraph;
  std::optional<Coalgebra> coalgebra;
  std::optional<VCategory> vcategory;
  std::optional<SemiHopfCategory> semihopf;
  std::optional<Antipode> antipode;  // with kind == "hopf"
  std::optional<FinGraph> graph;
  std::optional<FinCategory> fincategory;
  std::optional<FgModule> fgmodule;
  std::string morphism_kind;  // linear | modmap | vgraph
  std::optional<ExactMatrix> linear;  // bare linear map
  std::optional<ModMap> modmap;
  std::optional<VGraphMorphism> vgraph_morphism;
};

// Canonical serialization: fixed key order, two-space indent, trailing
// newline. parse/serialize round-trips byte-identically on canonical files.
std::string document_to_string(const Document& d);
Document document_from_string(const std::string& text);

Document load_document(const std::string& path);
void save_document(const Document& d, const std::string& path);

}  // namespace hopfcat
