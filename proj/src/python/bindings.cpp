#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hopfcat/free_hopf.hpp"
#include "hopfcat/io.hpp"

namespace py = pybind11;
using namespace hopfcat;

namespace {

Document doc(const std::string& text) { return document_from_string(text); }

std::vector<std::string> py_check(const std::string& text) {
  Document d = doc(text);
  if (d.kind == "coalgebra") return check_coalgebra(*d.coalgebra);
  if (d.kind == "vcategory") return check_vcategory(*d.vcategory);
  if (d.kind == "semihopf") return check_semihopf(*d.semihopf);
  if (d.kind == "hopf") {
    auto report = check_semihopf(*d.semihopf);
    auto more = check_antipode_properties(*d.semihopf, *d.antipode);
    report.insert(report.end(), more.begin(), more.end());
    return report;
  }
  return {};  // remaining kinds fully validate on parse
}

py::dict py_antipode(const std::string& text) {
  Document d = doc(text);
  if (d.kind != "semihopf" && d.kind != "hopf")
    throw bad_input("antipode needs a semihopf or hopf document");
  AntipodeResult r = solve_antipode(*d.semihopf);
  py::dict out;
  out["solved"] = static_cast<bool>(r.antipode);
  out["unique"] = r.unique;
  out["inconsistency"] = r.inconsistency;
  if (r.antipode) {
    Document h;
    h.kind = "hopf";
    h.semihopf = d.semihopf;
    h.antipode = r.antipode;
    out["hopf"] = document_to_string(h);
  }
  return out;
}

std::string py_variant(const std::string& text, const std::string& which) {
  Document d = doc(text);
  if (d.kind != "semihopf" && d.kind != "hopf")
    throw bad_input("variant needs a semihopf or hopf document");
  Document o;
  o.kind = "semihopf";
  o.semihopf = variant(*d.semihopf, parse_variant(which));
  return document_to_string(o);
}

py::dict py_free_hopf_dims(const std::string& text, std::size_t max_deg,
                           std::size_t max_index) {
  Document d = doc(text);
  FreeHopfInput in;
  if (d.kind == "graph")
    in = input_from_free_category(*d.graph, max_deg, FieldSpec::rationals());
  else if (d.kind == "semihopf" || d.kind == "hopf")
    in = input_from_semihopf(*d.semihopf);
  else
    throw bad_input("free_hopf_dims needs a graph or semihopf document");
  TruncatedFreeHopf t = free_hopf_truncated(in, max_deg, max_index);
  py::dict out;
  for (const auto& [pr, fd] : t.filtered_dims) {
    py::list buckets;
    for (std::size_t l = 0; l <= max_deg; ++l)
      buckets.append(t.bucket_dim(pr.first, pr.second, l));
    out[py::make_tuple(pr.first, pr.second)] = buckets;
    (void)fd;
  }
  return out;
}

std::vector<std::string> py_oracle_compare(const std::string& text,
                                           std::size_t max_deg) {
  Document d = doc(text);
  if (d.kind != "graph") throw bad_input("oracle_compare needs a graph");
  return oracle_compare(*d.graph, max_deg, FieldSpec::rationals());
}

py::dict py_flatten(const std::string& text) {
  Document d = doc(text);
  if (d.kind != "semihopf" && d.kind != "hopf")
    throw bad_input("flatten needs a semihopf or hopf document");
  WeakBialgebraData w =
      flatten_weak_hopf(*d.semihopf, d.antipode ? &*d.antipode : nullptr);
  py::dict out;
  out["dim"] = w.dim;
  out["report"] = w.report;
  out["delta_of_unit_is_unit_tensor_unit"] = w.delta_of_unit_is_unit_tensor_unit;
  return out;
}

py::dict py_flat_test(const std::string& text) {
  Document d = doc(text);
  if (d.kind != "fgmodule") throw bad_input("flat_test needs an fgmodule");
  FlatnessResult r = flatness_test_finite_ring(*d.fgmodule);
  py::dict out;
  out["flat"] = r.flat;
  if (r.witness_divisor) out["witness_divisor"] = r.witness_divisor->get_str();
  return out;
}

py::dict py_jointly_monic(const std::vector<std::string>& texts) {
  std::vector<ModMap> family;
  for (const auto& text : texts) {
    Document d = doc(text);
    if (d.kind != "morphism" || d.morphism_kind != "modmap")
      throw bad_input("jointly_monic needs modmap morphism documents");
    family.push_back(*d.modmap);
  }
  if (family.empty()) throw bad_input("jointly_monic needs at least one map");
  JointlyMonicResult r = is_jointly_monic(family.front().source, family);
  py::dict out;
  out["monic"] = r.monic;
  if (r.witness) {
    py::list w;
    for (const auto& v : *r.witness) w.append(v.get_str());
    out["witness"] = w;
  }
  return out;
}

py::dict py_cofree_factor(const std::string& ctext, const std::string& mtext) {
  Document dc = doc(ctext);
  Document dm = doc(mtext);
  if (dc.kind != "coalgebra" || dm.kind != "morphism" ||
      dm.morphism_kind != "linear")
    throw bad_input("cofree_factor needs a coalgebra and a linear morphism");
  CofreeFactorization r = cofree_factorization(*dc.coalgebra, *dm.linear);
  py::dict out;
  out["stabilization"] = r.stabilization;
  out["kernel_dim"] = r.kernel.dim();
  Document o;
  o.kind = "coalgebra";
  o.coalgebra = r.image;
  out["image"] = document_to_string(o);
  return out;
}

}  // namespace

PYBIND11_MODULE(_hopfcat, m) {
  m.doc() = "exact computations with semi-Hopf and Hopf categories";
  py::register_exception<bad_input>(m, "BadInput");
  m.def("check", &py_check, py::arg("document"),
        "Run the axiom checks for a serialized document; empty list = valid.");
  m.def("antipode", &py_antipode, py::arg("document"));
  m.def("variant", &py_variant, py::arg("document"), py::arg("which"));
  m.def("free_hopf_dims", &py_free_hopf_dims, py::arg("document"),
        py::arg("max_deg"), py::arg("max_index") = 1);
  m.def("oracle_compare", &py_oracle_compare, py::arg("document"),
        py::arg("max_deg"));
  m.def("flatten", &py_flatten, py::arg("document"));
  m.def("flat_test", &py_flat_test, py::arg("document"));
  m.def("jointly_monic", &py_jointly_monic, py::arg("documents"));
  m.def("cofree_factor", &py_cofree_factor, py::arg("coalgebra"),
        py::arg("morphism"));
}
