#include "hopfcat/vgraph.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace hopfcat {

std::size_t VGraph::dim(const std::string& x, const std::string& y) const {
  auto it = hom_dims.find({x, y});
  return it == hom_dims.end() ? 0 : it->second;
}

bool VGraph::has_object(const std::string& x) const {
  return std::find(objects.begin(), objects.end(), x) != objects.end();
}

void VGraph::validate() const {
  std::set<std::string> seen;
  for (const auto& o : objects)
    if (!seen.insert(o).second) throw bad_input("duplicate object id: " + o);
  for (const auto& [pr, d] : hom_dims) {
    (void)d;
    if (!has_object(pr.first) || !has_object(pr.second))
      throw bad_input("hom dimension on unknown object pair (" + pr.first +
                      ", " + pr.second + ")");
  }
}

const ExactMatrix& VGraphMorphism::component(const std::string& x,
                                             const std::string& y) const {
  auto it = components.find({x, y});
  if (it == components.end())
    throw bad_input("missing morphism component at (" + x + ", " + y + ")");
  return it->second;
}

void VGraphMorphism::validate() const {
  source.validate();
  target.validate();
  if (source.field != target.field)
    throw bad_input("morphism between graphs over different fields");
  for (const auto& x : source.objects) {
    auto it = f0.find(x);
    if (it == f0.end()) throw bad_input("f0 undefined on object " + x);
    if (!target.has_object(it->second))
      throw bad_input("f0 lands outside target objects: " + it->second);
  }
  for (const auto& x : source.objects)
    for (const auto& y : source.objects) {
      if (source.dim(x, y) == 0 && !components.count({x, y})) continue;
      const ExactMatrix& c = component(x, y);
      if (c.rows() != target.dim(f0.at(x), f0.at(y)) ||
          c.cols() != source.dim(x, y))
        throw bad_input("component shape mismatch at (" + x + ", " + y + ")");
    }
}

VGraphMorphism identity_morphism(const VGraph& g) {
  VGraphMorphism f;
  f.source = g;
  f.target = g;
  for (const auto& x : g.objects) {
    f.f0[x] = x;
    for (const auto& y : g.objects)
      if (g.dim(x, y) > 0)
        f.components[{x, y}] = ExactMatrix::identity(g.dim(x, y), g.field);
  }
  return f;
}

VGraphMorphism compose(const VGraphMorphism& g, const VGraphMorphism& f) {
  VGraphMorphism h;
  h.source = f.source;
  h.target = g.target;
  for (const auto& x : f.source.objects) h.f0[x] = g.f0.at(f.f0.at(x));
  for (const auto& x : f.source.objects)
    for (const auto& y : f.source.objects) {
      if (f.source.dim(x, y) == 0) continue;
      if (g.source.dim(f.f0.at(x), f.f0.at(y)) == 0) {
        // Factoring through a zero hom: the composite component is zero.
        h.components[{x, y}] = ExactMatrix(
            g.target.dim(h.f0.at(x), h.f0.at(y)), f.source.dim(x, y),
            f.source.field);
        continue;
      }
      h.components[{x, y}] =
          g.component(f.f0.at(x), f.f0.at(y)) * f.component(x, y);
    }
  return h;
}

ClassifyResult classify_morphism(const VGraphMorphism& f) {
  f.validate();
  ClassifyResult r;
  r.mono = true;
  r.epi = true;

  std::map<std::string, std::string> image_of;
  for (const auto& x : f.source.objects) {
    auto [it, fresh] = image_of.emplace(f.f0.at(x), x);
    if (!fresh) {
      r.mono = false;
      r.mono_witness =
          "f0 collapses objects " + it->second + " and " + x;
      break;
    }
  }
  if (r.mono)
    for (const auto& x : f.source.objects) {
      for (const auto& y : f.source.objects) {
        if (f.source.dim(x, y) == 0) continue;
        ExactMatrix k = kernel_basis(f.component(x, y));
        if (k.cols() > 0) {
          r.mono = false;
          std::string vec;
          for (std::size_t i = 0; i < k.rows(); ++i)
            vec += (i ? "," : "") + k.at(i, 0).str();
          r.mono_witness =
              "kernel vector (" + vec + ") at (" + x + ", " + y + ")";
          break;
        }
      }
      if (!r.mono) break;
    }

  std::set<std::string> hit;
  for (const auto& x : f.source.objects) hit.insert(f.f0.at(x));
  for (const auto& u : f.target.objects)
    if (!hit.count(u)) {
      r.epi = false;
      r.epi_witness = "object " + u + " not in the image of f0";
    }
  if (r.epi)
    for (const auto& u : f.target.objects) {
      for (const auto& v : f.target.objects) {
        std::size_t d = f.target.dim(u, v);
        if (d == 0) continue;
        ExactMatrix stacked(d, 0, f.target.field);
        for (const auto& x : f.source.objects)
          for (const auto& y : f.source.objects)
            if (f.f0.at(x) == u && f.f0.at(y) == v &&
                f.source.dim(x, y) > 0)
              stacked = stacked.hstack(f.component(x, y));
        if (rank(stacked) < d) {
          r.epi = false;
          r.epi_witness = "components into (" + u + ", " + v +
                          ") do not jointly span";
          break;
        }
      }
      if (!r.epi) break;
    }
  return r;
}

VGraph opposite_graph(const VGraph& a) {
  VGraph b;
  b.objects = a.objects;
  b.field = a.field;
  for (const auto& [pr, d] : a.hom_dims) b.hom_dims[{pr.second, pr.first}] = d;
  return b;
}

namespace {

std::string tuple_name(const std::vector<std::string>& parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i)
    s += (i ? "," : "") + parts[i];
  return s + ")";
}

}  // namespace

VGraphLimit limit_finite_diagram(const VGraphDiagram& d) {
  if (d.nodes.empty()) throw bad_input("limit of the empty diagram");
  const FieldSpec& f = d.nodes[0].field;
  for (const auto& n : d.nodes) {
    n.validate();
    if (n.field != f) throw bad_input("diagram mixes fields");
  }
  for (const auto& a : d.arrows) {
    if (a.src >= d.nodes.size() || a.tgt >= d.nodes.size())
      throw bad_input("diagram arrow out of range");
    a.f.validate();
  }

  // Objects: tuples (one object per node) compatible with every arrow's f0.
  std::size_t n = d.nodes.size();
  std::vector<std::vector<std::string>> tuples;
  std::vector<std::string> cur(n);
  auto compatible = [&](const std::vector<std::string>& t) {
    for (const auto& a : d.arrows)
      if (a.f.f0.at(t[a.src]) != t[a.tgt]) return false;
    return true;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      if (compatible(cur)) tuples.push_back(cur);
      return;
    }
    for (const auto& o : d.nodes[i].objects) {
      cur[i] = o;
      rec(i + 1);
    }
  };
  rec(0);

  VGraph apex;
  apex.field = f;
  for (const auto& t : tuples) apex.objects.push_back(tuple_name(t));

  // Per hom pair: the subspace of the direct sum of component homs cut out by
  // the arrow equations f_a(v_src) = v_tgt.
  struct HomData {
    std::vector<std::size_t> offsets;  // per node
    std::size_t total = 0;
    ExactMatrix basis;  // total x dim(apex hom), columns span the subspace
  };
  std::map<ObjPair, HomData> homs;
  std::vector<VGraphMorphism> projections(n);
  for (std::size_t i = 0; i < n; ++i) {
    projections[i].source = apex;  // objects filled, dims later
    projections[i].target = d.nodes[i];
  }
  for (std::size_t s = 0; s < tuples.size(); ++s)
    for (std::size_t i = 0; i < n; ++i)
      projections[i].f0[apex.objects[s]] = tuples[s][i];

  for (std::size_t s = 0; s < tuples.size(); ++s)
    for (std::size_t t = 0; t < tuples.size(); ++t) {
      HomData h;
      h.offsets.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        h.offsets[i] = h.total;
        h.total += d.nodes[i].dim(tuples[s][i], tuples[t][i]);
      }
      // Stack one row block per arrow: f_a restricted to slot src minus the
      // identity on slot tgt.
      ExactMatrix eqs(0, h.total, f);
      for (const auto& a : d.arrows) {
        const ExactMatrix& c = a.f.component(tuples[s][a.src], tuples[t][a.src]);
        ExactMatrix block(c.rows(), h.total, f);
        for (std::size_t i = 0; i < c.rows(); ++i) {
          for (std::size_t jj = 0; jj < c.cols(); ++jj)
            block.set(i, h.offsets[a.src] + jj, c.at(i, jj));
          block.set(i, h.offsets[a.tgt] + i,
                    block.at(i, h.offsets[a.tgt] + i) - Scalar::one(f));
        }
        eqs = eqs.vstack(block);
      }
      h.basis = kernel_basis(eqs);
      ObjPair pr{apex.objects[s], apex.objects[t]};
      apex.hom_dims[pr] = h.basis.cols();
      for (std::size_t i = 0; i < n; ++i) {
        // Coordinate projection of the subspace basis onto slot i.
        std::size_t di = d.nodes[i].dim(tuples[s][i], tuples[t][i]);
        ExactMatrix p(di, h.basis.cols(), f);
        for (std::size_t r = 0; r < di; ++r)
          for (std::size_t c2 = 0; c2 < h.basis.cols(); ++c2)
            p.set(r, c2, h.basis.at(h.offsets[i] + r, c2));
        projections[i].components[pr] = p;
      }
      homs[pr] = std::move(h);
    }

  for (std::size_t i = 0; i < n; ++i) projections[i].source = apex;
  VGraphLimit out;
  out.apex = apex;
  out.projections = std::move(projections);
  return out;
}

}  // namespace hopfcat
