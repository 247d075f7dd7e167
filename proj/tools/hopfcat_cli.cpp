#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "hopfcat/free_hopf.hpp"
#include "hopfcat/io.hpp"
#include "hopfcat/truncated_free.hpp"

using namespace hopfcat;

namespace {

int report_and_exit(const std::vector<std::string>& report) {
  if (report.empty()) {
    std::cout << "ok\n";
    return 0;
  }
  for (const auto& line : report) std::cout << line << "\n";
  return 1;
}

int cmd_check(const std::string& path) {
  Document d = load_document(path);
  std::vector<std::string> report;
  if (d.kind == "coalgebra") {
    report = check_coalgebra(*d.coalgebra);
  } else if (d.kind == "vcategory") {
    report = check_vcategory(*d.vcategory);
  } else if (d.kind == "semihopf") {
    report = check_semihopf(*d.semihopf);
  } else if (d.kind == "hopf") {
    report = check_semihopf(*d.semihopf);
    auto more = check_antipode_properties(*d.semihopf, *d.antipode);
    report.insert(report.end(), more.begin(), more.end());
  } else if (d.kind == "morphism" && d.morphism_kind == "vgraph") {
    auto r = classify_morphism(*d.vgraph_morphism);
    std::cout << "mono: " << (r.mono ? "yes" : "no") << "\n";
    std::cout << "epi: " << (r.epi ? "yes" : "no") << "\n";
  }
  // vgraph / graph / fincategory / fgmodule / remaining morphisms already
  // validated on load.
  return report_and_exit(report);
}

int cmd_antipode(const std::string& path, const std::string& out) {
  Document d = load_document(path);
  if (d.kind != "semihopf" && d.kind != "hopf")
    throw bad_input("antipode needs a semihopf or hopf document");
  AntipodeResult r = solve_antipode(*d.semihopf);
  if (!r.antipode) {
    std::cout << r.inconsistency << "\n";
    return 1;
  }
  std::cout << "antipode solved; unique: " << (r.unique ? "yes" : "no")
            << "\n";
  if (!out.empty()) {
    Document o;
    o.kind = "hopf";
    o.semihopf = d.semihopf;
    o.antipode = r.antipode;
    save_document(o, out);
  }
  return 0;
}

int cmd_variant(const std::string& path, const std::string& which,
                const std::string& out) {
  Document d = load_document(path);
  if (d.kind != "semihopf" && d.kind != "hopf")
    throw bad_input("variant needs a semihopf or hopf document");
  Document o;
  o.kind = "semihopf";
  o.semihopf = variant(*d.semihopf, parse_variant(which));
  if (out.empty())
    std::cout << document_to_string(o);
  else
    save_document(o, out);
  return 0;
}

int cmd_free_cat(const std::string& path, std::size_t len,
                 const std::string& out) {
  Document d = load_document(path);
  if (d.kind != "vgraph") throw bad_input("free-cat needs a vgraph document");
  TruncatedFreeCat t = free_vcategory_truncated(*d.vgraph, len);
  VCategory a;
  a.graph = t.hom_graph();
  for (const auto& x : a.graph.objects)
    for (const auto& y : a.graph.objects)
      for (const auto& z : a.graph.objects) {
        std::size_t dxy = a.graph.dim(x, y), dyz = a.graph.dim(y, z);
        ExactMatrix m(a.graph.dim(x, z), dxy * dyz, a.graph.field);
        for (std::size_t i = 0; i < dxy; ++i)
          for (std::size_t k = 0; k < dyz; ++k)
            if (auto idx = t.compose_basis(x, y, z, i, k))
              m.set(*idx, i * dyz + k, Scalar::one(a.graph.field));
        a.m[{x, y, z}] = std::move(m);
      }
  for (const auto& x : a.graph.objects) {
    ExactMatrix u(a.graph.dim(x, x), 1, a.graph.field);
    u.set(0, 0, Scalar::one(a.graph.field));
    a.j[x] = std::move(u);
  }
  for (const auto& [pr, segs] : t.segments) {
    std::cout << pr.first << " -> " << pr.second << ": dim "
              << t.dims.at(pr) << "\n";
    (void)segs;
  }
  if (!out.empty()) {
    Document o;
    o.kind = "vcategory";
    o.vcategory = std::move(a);
    save_document(o, out);
  }
  return 0;
}

int cmd_free_shopf(const std::string& path, std::size_t len,
                   const std::string& out) {
  Document d = load_document(path);
  if (d.kind != "semihopf" && d.kind != "hopf")
    throw bad_input(
        "free-shopf reads the hom coalgebras of a semihopf document");
  TruncatedFreeSemiHopf t = free_semihopf_truncated(
      d.semihopf->cat.graph, d.semihopf->coalgebras, len);
  SemiHopfCategory a;
  a.cat.graph = t.cat.hom_graph();
  const FieldSpec& f = a.cat.graph.field;
  for (const auto& x : a.cat.graph.objects)
    for (const auto& y : a.cat.graph.objects)
      for (const auto& z : a.cat.graph.objects) {
        std::size_t dxy = a.cat.graph.dim(x, y), dyz = a.cat.graph.dim(y, z);
        ExactMatrix m(a.cat.graph.dim(x, z), dxy * dyz, f);
        for (std::size_t i = 0; i < dxy; ++i)
          for (std::size_t k = 0; k < dyz; ++k)
            if (auto idx = t.cat.compose_basis(x, y, z, i, k))
              m.set(*idx, i * dyz + k, Scalar::one(f));
        a.cat.m[{x, y, z}] = std::move(m);
      }
  for (const auto& x : a.cat.graph.objects) {
    ExactMatrix u(a.cat.graph.dim(x, x), 1, f);
    u.set(0, 0, Scalar::one(f));
    a.cat.j[x] = std::move(u);
  }
  a.coalgebras = t.coalgebras;
  for (const auto& [pr, dd] : t.cat.dims)
    std::cout << pr.first << " -> " << pr.second << ": dim " << dd << "\n";
  if (!out.empty()) {
    Document o;
    o.kind = "semihopf";
    o.semihopf = std::move(a);
    save_document(o, out);
  }
  return 0;
}

int cmd_free_hopf(const std::string& path, std::size_t len,
                  std::size_t index) {
  Document d = load_document(path);
  FreeHopfInput in;
  if (d.kind == "graph")
    in = input_from_free_category(*d.graph, len, FieldSpec::rationals());
  else if (d.kind == "semihopf" || d.kind == "hopf")
    in = input_from_semihopf(*d.semihopf);
  else
    throw bad_input("free-hopf needs a graph or semihopf document");
  TruncatedFreeHopf t = free_hopf_truncated(in, len, index);
  for (const auto& [pr, fd] : t.filtered_dims) {
    std::cout << pr.first << " -> " << pr.second << ":";
    for (std::size_t l = 0; l <= len; ++l)
      std::cout << " " << t.bucket_dim(pr.first, pr.second, l);
    std::cout << "\n";
    (void)fd;
  }
  return 0;
}

int cmd_cofree_factor(const std::string& cpath, const std::string& mpath,
                      const std::string& out) {
  Document dc = load_document(cpath);
  Document dm = load_document(mpath);
  if (dc.kind != "coalgebra")
    throw bad_input("cofree-factor needs a coalgebra document first");
  if (dm.kind != "morphism" || dm.morphism_kind != "linear")
    throw bad_input("cofree-factor needs a linear morphism document second");
  CofreeFactorization r = cofree_factorization(*dc.coalgebra, *dm.linear);
  std::cout << "stabilization: " << r.stabilization << "\n";
  std::cout << "kernel dim: " << r.kernel.dim() << "\n";
  std::cout << "image dim: " << (dc.coalgebra->dim - r.kernel.dim()) << "\n";
  if (!out.empty()) {
    Document o;
    o.kind = "coalgebra";
    o.coalgebra = r.image;
    save_document(o, out);
  }
  return 0;
}

int cmd_flatten(const std::string& path) {
  Document d = load_document(path);
  if (d.kind != "semihopf" && d.kind != "hopf")
    throw bad_input("flatten needs a semihopf or hopf document");
  WeakBialgebraData w = flatten_weak_hopf(
      *d.semihopf, d.antipode ? &*d.antipode : nullptr);
  std::cout << "dim: " << w.dim << "\n";
  std::cout << "delta(1) = 1(x)1: "
            << (w.delta_of_unit_is_unit_tensor_unit ? "yes" : "no") << "\n";
  return report_and_exit(w.report);
}

int cmd_groupoid(const std::string& sub, const std::string& path,
                 std::size_t len, const std::string& out) {
  Document d = load_document(path);
  if (sub == "core") {
    if (d.kind != "fincategory")
      throw bad_input("groupoid core needs a fincategory document");
    Document o;
    o.kind = "fincategory";
    o.fincategory = core_groupoid(*d.fincategory);
    std::cout << "core arrows: " << o.fincategory->arrows.size() << "\n";
    if (out.empty())
      std::cout << document_to_string(o);
    else
      save_document(o, out);
    return 0;
  }
  if (d.kind != "graph")
    throw bad_input("groupoid " + sub + " needs a graph document");
  auto words = free_groupoid_words(*d.graph, len);
  for (const auto& [pr, buckets] : words) {
    if (sub == "free") {
      std::cout << pr.first << " -> " << pr.second << ":";
      for (const auto& b : buckets) std::cout << " " << b.size();
      std::cout << "\n";
    } else if (sub == "words") {
      for (const auto& b : buckets)
        for (const auto& w : b)
          std::cout << pr.first << " -> " << pr.second << ": "
                    << w.str(*d.graph) << "\n";
    } else {
      throw bad_input("unknown groupoid subcommand: " + sub);
    }
  }
  return 0;
}

int cmd_flat_test(const std::string& path) {
  Document d = load_document(path);
  if (d.kind != "fgmodule") throw bad_input("flat-test needs an fgmodule");
  FlatnessResult r = flatness_test_finite_ring(*d.fgmodule);
  if (r.flat) {
    std::cout << "flat\n";
    return 0;
  }
  std::cout << "not flat: ideal (" << r.witness_divisor->get_str() << ")\n";
  return 1;
}

int cmd_jointly_monic(const std::vector<std::string>& paths) {
  std::vector<ModMap> family;
  for (const auto& p : paths) {
    Document d = load_document(p);
    if (d.kind != "morphism" || d.morphism_kind != "modmap")
      throw bad_input(p + ": jointly-monic needs modmap morphism documents");
    family.push_back(*d.modmap);
  }
  if (family.empty()) throw bad_input("jointly-monic needs at least one map");
  JointlyMonicResult r = is_jointly_monic(family.front().source, family);
  if (r.monic) {
    std::cout << "jointly monic\n";
    return 0;
  }
  std::cout << "not jointly monic; witness:";
  for (const auto& v : *r.witness) std::cout << " " << v.get_str();
  std::cout << "\n";
  return 1;
}

int cmd_oracle_compare(const std::string& path, std::size_t len) {
  Document d = load_document(path);
  if (d.kind != "graph") throw bad_input("oracle-compare needs a graph");
  auto mismatches = oracle_compare(*d.graph, len, FieldSpec::rationals());
  if (mismatches.empty()) {
    std::cout << "ok\n";
    return 0;
  }
  return report_and_exit(mismatches);
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* env = std::getenv("HOPFCAT_THREADS")) {
    char* end = nullptr;
    long n = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || n < 1) {
      std::cerr << "HOPFCAT_THREADS must be a positive integer\n";
      return 2;
    }
    // Worker count cap; all current computations run single-threaded.
  }

  CLI::App app{"exact computations with semi-Hopf and Hopf categories"};
  app.require_subcommand(1);

  std::string file, file2, out, which = "op", sub;
  std::vector<std::string> files;
  std::size_t len = 3, index = 1;

  auto* c_check = app.add_subcommand("check", "validate a document");
  c_check->add_option("file", file)->required();

  auto* c_anti = app.add_subcommand("antipode", "solve for the antipode");
  c_anti->add_option("file", file)->required();
  c_anti->add_option("-o,--out", out);

  auto* c_var = app.add_subcommand("variant", "opposite / co-opposite");
  c_var->add_option("file", file)->required();
  c_var->add_option("--which", which)->required()
      ->check(CLI::IsMember({"op", "cop", "opcop"}));
  c_var->add_option("-o,--out", out);

  auto* c_fcat = app.add_subcommand("free-cat", "truncated free V-category");
  c_fcat->add_option("file", file)->required();
  c_fcat->add_option("-L", len)->required();
  c_fcat->add_option("-o,--out", out);

  auto* c_fsh = app.add_subcommand("free-shopf",
                                   "truncated free semi-Hopf category");
  c_fsh->add_option("file", file)->required();
  c_fsh->add_option("-L", len)->required();
  c_fsh->add_option("-o,--out", out);

  auto* c_fh = app.add_subcommand("free-hopf",
                                  "truncated free Hopf category dimensions");
  c_fh->add_option("file", file)->required();
  c_fh->add_option("-L", len)->required();
  c_fh->add_option("-I", index)->required();

  auto* c_cf = app.add_subcommand("cofree-factor",
                                  "couniversal cofree factorization");
  c_cf->add_option("coalgebra", file)->required();
  c_cf->add_option("map", file2)->required();
  c_cf->add_option("-o,--out", out);

  auto* c_fl = app.add_subcommand("flatten", "weak bialgebra flattening");
  c_fl->add_option("file", file)->required();

  auto* c_gr = app.add_subcommand("groupoid", "free / core / words");
  c_gr->add_option("sub", sub)->required()
      ->check(CLI::IsMember({"free", "core", "words"}));
  c_gr->add_option("file", file)->required();
  c_gr->add_option("-L", len);
  c_gr->add_option("-o,--out", out);

  auto* c_ft = app.add_subcommand("flat-test", "finite-ring flatness test");
  c_ft->add_option("module", file)->required();

  auto* c_jm = app.add_subcommand("jointly-monic",
                                  "joint monicity of a module map family");
  c_jm->add_option("maps", files)->required();

  auto* c_oc = app.add_subcommand("oracle-compare",
                                  "free-Hopf dimensions vs reduced words");
  c_oc->add_option("graph", file)->required();
  c_oc->add_option("-L", len)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_check->parsed()) return cmd_check(file);
    if (c_anti->parsed()) return cmd_antipode(file, out);
    if (c_var->parsed()) return cmd_variant(file, which, out);
    if (c_fcat->parsed()) return cmd_free_cat(file, len, out);
    if (c_fsh->parsed()) return cmd_free_shopf(file, len, out);
    if (c_fh->parsed()) return cmd_free_hopf(file, len, index);
    if (c_cf->parsed()) return cmd_cofree_factor(file, file2, out);
    if (c_fl->parsed()) return cmd_flatten(file);
    if (c_gr->parsed()) return cmd_groupoid(sub, file, len, out);
    if (c_ft->parsed()) return cmd_flat_test(file);
    if (c_jm->parsed()) return cmd_jointly_monic(files);
    if (c_oc->parsed()) return cmd_oracle_compare(file, len);
  } catch (const bad_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
