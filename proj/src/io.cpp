#include "hopfcat/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace hopfcat {

using json = nlohmann::ordered_json;

namespace {

json field_to_json(const FieldSpec& f) {
  return f.is_rational() ? json(0) : json(f.modulus());
}

FieldSpec field_from_json(const json& j) {
  if (!j.is_number_unsigned() && !j.is_number_integer())
    throw bad_input("field must be 0 (rationals) or a prime");
  std::uint64_t p = j.get<std::uint64_t>();
  return p == 0 ? FieldSpec::rationals() : FieldSpec::prime_field(p);
}

json matrix_to_json(const ExactMatrix& m) {
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m.at(i, k).str());
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

ExactMatrix matrix_from_json(const json& j, const FieldSpec& f) {
  std::size_t rows = j.at("rows").get<std::size_t>();
  std::size_t cols = j.at("cols").get<std::size_t>();
  const json& e = j.at("entries");
  if (!e.is_array() || e.size() != rows)
    throw bad_input("matrix entries must have one array per row");
  ExactMatrix m(rows, cols, f);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!e[i].is_array() || e[i].size() != cols)
      throw bad_input("matrix row " + std::to_string(i) + " has wrong length");
    for (std::size_t k = 0; k < cols; ++k) {
      const std::string s = e[i][k].get<std::string>();
      Scalar v = Scalar::parse(s, f);
      if (v.str() != s)
        throw bad_input("non-canonical scalar '" + s + "' (expected '" +
                        v.str() + "')");
      m.set(i, k, v);
    }
  }
  return m;
}

json intmatrix_to_json(const IntMatrix& m) {
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k)
      row.push_back(m.at(i, k).get_str());
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

IntMatrix intmatrix_from_json(const json& j) {
  std::size_t rows = j.at("rows").get<std::size_t>();
  std::size_t cols = j.at("cols").get<std::size_t>();
  const json& e = j.at("entries");
  if (!e.is_array() || e.size() != rows)
    throw bad_input("matrix entries must have one array per row");
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!e[i].is_array() || e[i].size() != cols)
      throw bad_input("matrix row " + std::to_string(i) + " has wrong length");
    for (std::size_t k = 0; k < cols; ++k)
      m.at(i, k) = mpz_class(e[i][k].get<std::string>());
  }
  return m;
}

json vgraph_to_json(const VGraph& g) {
  json j;
  j["field"] = field_to_json(g.field);
  j["objects"] = g.objects;
  json homs = json::array();
  for (const auto& [pr, d] : g.hom_dims) {
    json h;
    h["src"] = pr.first;
    h["tgt"] = pr.second;
    h["dim"] = d;
    homs.push_back(std::move(h));
  }
  j["homs"] = std::move(homs);
  return j;
}

VGraph vgraph_from_json(const json& j) {
  VGraph g;
  g.field = field_from_json(j.at("field"));
  g.objects = j.at("objects").get<std::vector<std::string>>();
  for (const auto& h : j.at("homs"))
    g.hom_dims[{h.at("src").get<std::string>(),
                h.at("tgt").get<std::string>()}] =
        h.at("dim").get<std::size_t>();
  g.validate();
  return g;
}

json coalgebra_to_json(const Coalgebra& c) {
  json j;
  j["field"] = field_to_json(c.field());
  j["dim"] = c.dim;
  j["delta"] = matrix_to_json(c.delta);
  j["epsilon"] = matrix_to_json(c.epsilon);
  return j;
}

Coalgebra coalgebra_from_json(const json& j) {
  FieldSpec f = field_from_json(j.at("field"));
  Coalgebra c;
  c.dim = j.at("dim").get<std::size_t>();
  c.delta = matrix_from_json(j.at("delta"), f);
  c.epsilon = matrix_from_json(j.at("epsilon"), f);
  c.validate_shapes();
  return c;
}

json vcategory_to_json(const VCategory& a) {
  json j = vgraph_to_json(a.graph);
  json comp = json::array();
  for (const auto& [tr, m] : a.m) {
    json e;
    e["x"] = std::get<0>(tr);
    e["y"] = std::get<1>(tr);
    e["z"] = std::get<2>(tr);
    e["matrix"] = matrix_to_json(m);
    comp.push_back(std::move(e));
  }
  j["comp"] = std::move(comp);
  json units = json::array();
  for (const auto& [x, u] : a.j) {
    json e;
    e["object"] = x;
    e["matrix"] = matrix_to_json(u);
    units.push_back(std::move(e));
  }
  j["units"] = std::move(units);
  return j;
}

VCategory vcategory_from_json(const json& j) {
  VCategory a;
  a.graph = vgraph_from_json(j);
  for (const auto& e : j.at("comp"))
    a.m[{e.at("x").get<std::string>(), e.at("y").get<std::string>(),
         e.at("z").get<std::string>()}] =
        matrix_from_json(e.at("matrix"), a.graph.field);
  for (const auto& e : j.at("units"))
    a.j[e.at("object").get<std::string>()] =
        matrix_from_json(e.at("matrix"), a.graph.field);
  a.validate_shapes();
  return a;
}

json semihopf_to_json(const SemiHopfCategory& a) {
  json j = vcategory_to_json(a.cat);
  json cs = json::array();
  for (const auto& [pr, c] : a.coalgebras) {
    json e;
    e["src"] = pr.first;
    e["tgt"] = pr.second;
    e["delta"] = matrix_to_json(c.delta);
    e["epsilon"] = matrix_to_json(c.epsilon);
    cs.push_back(std::move(e));
  }
  j["coalgebras"] = std::move(cs);
  return j;
}

SemiHopfCategory semihopf_from_json(const json& j) {
  SemiHopfCategory a;
  a.cat = vcategory_from_json(j);
  for (const auto& e : j.at("coalgebras")) {
    ObjPair pr{e.at("src").get<std::string>(), e.at("tgt").get<std::string>()};
    Coalgebra c;
    c.dim = a.cat.graph.dim(pr.first, pr.second);
    c.delta = matrix_from_json(e.at("delta"), a.cat.graph.field);
    c.epsilon = matrix_from_json(e.at("epsilon"), a.cat.graph.field);
    c.validate_shapes();
    a.coalgebras[pr] = std::move(c);
  }
  a.validate_shapes();
  return a;
}

json antipode_to_json(const Antipode& s) {
  json arr = json::array();
  for (const auto& [pr, m] : s.components) {
    json e;
    e["src"] = pr.first;
    e["tgt"] = pr.second;
    e["matrix"] = matrix_to_json(m);
    arr.push_back(std::move(e));
  }
  return arr;
}

Antipode antipode_from_json(const json& j, const FieldSpec& f) {
  Antipode s;
  for (const auto& e : j)
    s.components[{e.at("src").get<std::string>(),
                  e.at("tgt").get<std::string>()}] =
        matrix_from_json(e.at("matrix"), f);
  return s;
}

json graph_to_json(const FinGraph& g) {
  json j;
  j["vertices"] = g.vertices;
  json es = json::array();
  for (const auto& e : g.edges) {
    json x;
    x["id"] = e.id;
    x["src"] = e.src;
    x["tgt"] = e.tgt;
    es.push_back(std::move(x));
  }
  j["edges"] = std::move(es);
  return j;
}

FinGraph graph_from_json(const json& j) {
  FinGraph g;
  g.vertices = j.at("vertices").get<std::vector<std::string>>();
  for (const auto& e : j.at("edges"))
    g.edges.push_back({e.at("id").get<std::string>(),
                       e.at("src").get<std::string>(),
                       e.at("tgt").get<std::string>()});
  g.validate();
  return g;
}

json fincategory_to_json(const FinCategory& c) {
  json j;
  j["objects"] = c.objects;
  json arrows = json::array();
  for (const auto& a : c.arrows) {
    json x;
    x["id"] = a.id;
    x["src"] = a.src;
    x["tgt"] = a.tgt;
    arrows.push_back(std::move(x));
  }
  j["arrows"] = std::move(arrows);
  json ids = json::array();
  for (const auto& [obj, idx] : c.identity) {
    json x;
    x["object"] = obj;
    x["arrow"] = c.arrows.at(idx).id;
    ids.push_back(std::move(x));
  }
  j["identities"] = std::move(ids);
  json comp = json::array();
  for (const auto& [fg, h] : c.compose) {
    json x;
    x["f"] = c.arrows.at(fg.first).id;
    x["g"] = c.arrows.at(fg.second).id;
    x["fg"] = c.arrows.at(h).id;
    comp.push_back(std::move(x));
  }
  j["compose"] = std::move(comp);
  return j;
}

FinCategory fincategory_from_json(const json& j) {
  FinCategory c;
  c.objects = j.at("objects").get<std::vector<std::string>>();
  std::map<std::string, std::size_t> by_id;
  for (const auto& a : j.at("arrows")) {
    std::string id = a.at("id").get<std::string>();
    if (by_id.count(id)) throw bad_input("duplicate arrow id " + id);
    by_id[id] = c.arrows.size();
    c.arrows.push_back({id, a.at("src").get<std::string>(),
                        a.at("tgt").get<std::string>()});
  }
  auto arrow = [&](const json& v) {
    std::string id = v.get<std::string>();
    auto it = by_id.find(id);
    if (it == by_id.end()) throw bad_input("unknown arrow id " + id);
    return it->second;
  };
  for (const auto& e : j.at("identities"))
    c.identity[e.at("object").get<std::string>()] = arrow(e.at("arrow"));
  for (const auto& e : j.at("compose"))
    c.compose[{arrow(e.at("f")), arrow(e.at("g"))}] = arrow(e.at("fg"));
  c.validate();
  return c;
}

json fgmodule_to_json(const FgModule& m) {
  json j;
  j["ring"] = m.ring_n;
  j["gens"] = m.gens;
  j["relations"] = intmatrix_to_json(m.rel);
  return j;
}

FgModule fgmodule_from_json(const json& j) {
  FgModule m;
  m.ring_n = j.at("ring").get<unsigned long>();
  m.gens = j.at("gens").get<std::size_t>();
  m.rel = intmatrix_from_json(j.at("relations"));
  m.validate();
  return m;
}

json vgraph_morphism_to_json(const VGraphMorphism& f) {
  json j;
  j["source"] = vgraph_to_json(f.source);
  j["target"] = vgraph_to_json(f.target);
  json f0 = json::array();
  for (const auto& [a, b] : f.f0) {
    json x;
    x["from"] = a;
    x["to"] = b;
    f0.push_back(std::move(x));
  }
  j["f0"] = std::move(f0);
  json comps = json::array();
  for (const auto& [pr, m] : f.components) {
    json x;
    x["src"] = pr.first;
    x["tgt"] = pr.second;
    x["matrix"] = matrix_to_json(m);
    comps.push_back(std::move(x));
  }
  j["components"] = std::move(comps);
  return j;
}

VGraphMorphism vgraph_morphism_from_json(const json& j) {
  VGraphMorphism f;
  f.source = vgraph_from_json(j.at("source"));
  f.target = vgraph_from_json(j.at("target"));
  for (const auto& e : j.at("f0"))
    f.f0[e.at("from").get<std::string>()] = e.at("to").get<std::string>();
  for (const auto& e : j.at("components"))
    f.components.emplace(
        ObjPair{e.at("src").get<std::string>(), e.at("tgt").get<std::string>()},
        matrix_from_json(e.at("matrix"), f.source.field));
  f.validate();
  return f;
}

}  // namespace

std::string document_to_string(const Document& d) {
  json j;
  j["schema"] = 1;
  j["kind"] = d.kind;
  if (d.kind == "vgraph") {
    json g = vgraph_to_json(d.vgraph.value());
    j.update(g);
  } else if (d.kind == "coalgebra") {
    j.update(coalgebra_to_json(d.coalgebra.value()));
  } else if (d.kind == "vcategory") {
    j.update(vcategory_to_json(d.vcategory.value()));
  } else if (d.kind == "semihopf") {
    j.update(semihopf_to_json(d.semihopf.value()));
  } else if (d.kind == "hopf") {
    j.update(semihopf_to_json(d.semihopf.value()));
    j["antipode"] = antipode_to_json(d.antipode.value());
  } else if (d.kind == "graph") {
    j.update(graph_to_json(d.graph.value()));
  } else if (d.kind == "fincategory") {
    j.update(fincategory_to_json(d.fincategory.value()));
  } else if (d.kind == "fgmodule") {
    j.update(fgmodule_to_json(d.fgmodule.value()));
  } else if (d.kind == "morphism") {
    j["morphism_kind"] = d.morphism_kind;
    if (d.morphism_kind == "linear") {
      j["field"] = field_to_json(d.linear.value().field());
      j["matrix"] = matrix_to_json(d.linear.value());
    } else if (d.morphism_kind == "modmap") {
      j["source"] = fgmodule_to_json(d.modmap.value().source);
      j["target"] = fgmodule_to_json(d.modmap.value().target);
      j["matrix"] = intmatrix_to_json(d.modmap.value().mat);
    } else if (d.morphism_kind == "vgraph") {
      j.update(vgraph_morphism_to_json(d.vgraph_morphism.value()));
    } else {
      throw bad_input("unknown morphism kind: " + d.morphism_kind);
    }
  } else {
    throw bad_input("unknown document kind: " + d.kind);
  }
  return j.dump(2) + "\n";
}

Document document_from_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw bad_input(std::string("JSON parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("schema") ||
      j.at("schema").get<int>() != 1)
    throw bad_input("missing or unsupported schema version");
  Document d;
  d.kind = j.at("kind").get<std::string>();
  if (d.kind == "vgraph") {
    d.vgraph = vgraph_from_json(j);
  } else if (d.kind == "coalgebra") {
    d.coalgebra = coalgebra_from_json(j);
  } else if (d.kind == "vcategory") {
    d.vcategory = vcategory_from_json(j);
  } else if (d.kind == "semihopf") {
    d.semihopf = semihopf_from_json(j);
  } else if (d.kind == "hopf") {
    d.semihopf = semihopf_from_json(j);
    d.antipode =
        antipode_from_json(j.at("antipode"), d.semihopf->cat.graph.field);
  } else if (d.kind == "graph") {
    d.graph = graph_from_json(j);
  } else if (d.kind == "fincategory") {
    d.fincategory = fincategory_from_json(j);
  } else if (d.kind == "fgmodule") {
    d.fgmodule = fgmodule_from_json(j);
  } else if (d.kind == "morphism") {
    d.morphism_kind = j.at("morphism_kind").get<std::string>();
    if (d.morphism_kind == "linear") {
      d.linear =
          matrix_from_json(j.at("matrix"), field_from_json(j.at("field")));
    } else if (d.morphism_kind == "modmap") {
      ModMap m;
      m.source = fgmodule_from_json(j.at("source"));
      m.target = fgmodule_from_json(j.at("target"));
      m.mat = intmatrix_from_json(j.at("matrix"));
      m.validate();
      d.modmap = std::move(m);
    } else if (d.morphism_kind == "vgraph") {
      d.vgraph_morphism = vgraph_morphism_from_json(j);
    } else {
      throw bad_input("unknown morphism kind: " + d.morphism_kind);
    }
  } else {
    throw bad_input("unknown document kind: " + d.kind);
  }
  return d;
}

Document load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw bad_input("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return document_from_string(ss.str());
  } catch (const bad_input& e) {
    throw bad_input(path + ": " + e.what());
  }
}

void save_document(const Document& d, const std::string& path) {
  std::string text = document_to_string(d);
  std::string tmp = path + ".tmp";
  std::ofstream out(tmp, std::ios::binary);
  if (!out) throw bad_input("cannot write " + tmp);
  out << text;
  out.close();
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw bad_input("cannot move " + tmp + " into place");
}

}  // namespace hopfcat
