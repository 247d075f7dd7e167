#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "hopfcat/vgraph.hpp"

using namespace hopfcat;
using namespace hopfcat::testing;

namespace {

VGraph two_object_graph(const FieldSpec& f) {
  VGraph g;
  g.objects = {"x", "y"};
  g.hom_dims[{"x", "x"}] = 1;
  g.hom_dims[{"x", "y"}] = 2;
  g.hom_dims[{"y", "y"}] = 1;
  g.field = f;
  return g;
}

}  // namespace

TEST_CASE("identity morphism is mono and epi") {
  VGraph g = two_object_graph(FieldSpec::prime_field(2));
  auto id = identity_morphism(g);
  id.validate();
  auto r = classify_morphism(id);
  CHECK(r.mono);
  CHECK(r.epi);
}

TEST_CASE("composition of morphisms") {
  FieldSpec f = FieldSpec::rationals();
  VGraph g = two_object_graph(f);
  auto id = identity_morphism(g);
  auto twice = compose(id, id);
  CHECK(morphism_key(twice) == morphism_key(id));
}

TEST_CASE("collapsing objects breaks mono") {
  FieldSpec f = FieldSpec::prime_field(2);
  VGraph s;
  s.objects = {"x", "y"};
  s.field = f;
  VGraph t;
  t.objects = {"z"};
  t.field = f;
  VGraphMorphism m;
  m.source = s;
  m.target = t;
  m.f0 = {{"x", "z"}, {"y", "z"}};
  m.validate();
  auto r = classify_morphism(m);
  CHECK_FALSE(r.mono);
  CHECK(r.epi);  // f0 is surjective and there are no homs to span
  CHECK(brute_mono(m) == r.mono);
  CHECK(brute_epi(m) == r.epi);
}

TEST_CASE("zero component kernel breaks mono, non-spanning breaks epi") {
  FieldSpec f = FieldSpec::prime_field(2);
  VGraph g;
  g.objects = {"x"};
  g.hom_dims[{"x", "x"}] = 2;
  g.field = f;
  VGraphMorphism m;
  m.source = g;
  m.target = g;
  m.f0 = {{"x", "x"}};
  m.components.emplace(ObjPair{"x", "x"},
                       mat(2, 2, {"1", "0", "0", "0"}, f));
  m.validate();
  auto r = classify_morphism(m);
  CHECK_FALSE(r.mono);
  CHECK_FALSE(r.epi);
  CHECK(r.mono_witness != "");
  CHECK(r.epi_witness != "");
}

TEST_CASE("classification agrees with generalized-element brute force") {
  // All morphism shapes between graphs of total dimension <= 4 over F_2,
  // sampled deterministically; the oracle is cancellation against every
  // probe graph.
  FieldSpec f = FieldSpec::prime_field(2);
  std::vector<VGraph> graphs;
  {
    VGraph a;
    a.objects = {"x"};
    a.hom_dims[{"x", "x"}] = 2;
    a.field = f;
    graphs.push_back(a);
  }
  {
    VGraph b;
    b.objects = {"x", "y"};
    b.hom_dims[{"x", "y"}] = 1;
    b.hom_dims[{"y", "x"}] = 1;
    b.field = f;
    graphs.push_back(b);
  }
  {
    VGraph c;
    c.objects = {"x", "y"};
    c.hom_dims[{"x", "x"}] = 1;
    c.hom_dims[{"x", "y"}] = 2;
    c.hom_dims[{"y", "y"}] = 1;
    c.field = f;
    graphs.push_back(c);
  }
  std::mt19937 rng(7);
  std::size_t checked = 0;
  for (const auto& s : graphs)
    for (const auto& t : graphs)
      for (int trial = 0; trial < 12; ++trial) {
        VGraphMorphism m = random_vgraph_morphism(s, t, rng);
        m.validate();
        auto r = classify_morphism(m);
        CHECK(r.mono == brute_mono(m));
        CHECK(r.epi == brute_epi(m));
        ++checked;
      }
  CHECK(checked == 108);
}

TEST_CASE("limit of a cospan computes the pullback") {
  // x --f--> z <--g-- y on single-object graphs with 2-, 2-, 2-dim homs.
  FieldSpec f = FieldSpec::rationals();
  VGraph n;
  n.objects = {"o"};
  n.hom_dims[{"o", "o"}] = 2;
  n.field = f;
  VGraphDiagram d;
  d.nodes = {n, n, n};
  VGraphMorphism a;  // projection onto the first coordinate
  a.source = n;
  a.target = n;
  a.f0 = {{"o", "o"}};
  a.components.emplace(ObjPair{"o", "o"}, mat(2, 2, {"1", "0", "0", "0"}));
  VGraphMorphism b;  // projection onto the second coordinate
  b.source = n;
  b.target = n;
  b.f0 = {{"o", "o"}};
  b.components.emplace(ObjPair{"o", "o"}, mat(2, 2, {"0", "0", "0", "1"}));
  d.arrows.push_back({0, 2, a});
  d.arrows.push_back({1, 2, b});
  VGraphLimit lim = limit_finite_diagram(d);
  // Apex objects: compatible triples (all map to "o"); one object.
  CHECK(lim.apex.objects.size() == 1);
  // Hom: { (u, v, w) : a u = w = b v } forces u1 = v2 = w = 0, leaving
  // u2 and v1 free.
  const std::string& apex_obj = lim.apex.objects.front();
  CHECK(lim.apex.dim(apex_obj, apex_obj) == 2);
  CHECK(lim.projections.size() == 3);
  // Projections composed with the diagram arrows agree.
  auto left = compose(a, lim.projections[0]);
  auto right = compose(b, lim.projections[1]);
  CHECK(morphism_key(left) == morphism_key(right));
}

TEST_CASE("limit over an empty diagram of one node is that node") {
  VGraph g = two_object_graph(FieldSpec::rationals());
  VGraphDiagram d;
  d.nodes = {g};
  VGraphLimit lim = limit_finite_diagram(d);
  CHECK(lim.apex.objects.size() == g.objects.size());
  const std::string& o = lim.apex.objects.front();
  (void)o;
  std::size_t total = 0, expect = 0;
  for (const auto& [pr, dd] : lim.apex.hom_dims) {
    (void)pr;
    total += dd;
  }
  for (const auto& [pr, dd] : g.hom_dims) {
    (void)pr;
    expect += dd;
  }
  CHECK(total == expect);
}

TEST_CASE("opposite graph swaps hom dimensions") {
  VGraph g = two_object_graph(FieldSpec::rationals());
  VGraph o = opposite_graph(g);
  CHECK(o.dim("y", "x") == 2);
  CHECK(o.dim("x", "y") == 0);
  VGraph oo = opposite_graph(o);
  CHECK(oo.hom_dims == g.hom_dims);
}
