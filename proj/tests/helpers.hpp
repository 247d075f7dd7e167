#pragma once

#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hopfcat/groupoid.hpp"
#include "hopfcat/hopf.hpp"

namespace hopfcat::testing {

inline ExactMatrix mat(std::size_t rows, std::size_t cols,
                       const std::vector<std::string>& entries,
                       const FieldSpec& f = FieldSpec::rationals()) {
  ExactMatrix m(rows, cols, f);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.set(i, j, Scalar::parse(entries.at(i * cols + j), f));
  return m;
}

// The 4-dimensional one-object fixture over Q on the basis {1, g, x, gx}:
// g^2 = 1, x^2 = 0, xg = -gx, delta(g) = g(x)g, delta(x) = x(x)1 + g(x)x.
inline SemiHopfCategory sweedler_h4() {
  FieldSpec f = FieldSpec::rationals();
  SemiHopfCategory a;
  a.cat.graph.objects = {"*"};
  a.cat.graph.hom_dims[{"*", "*"}] = 4;
  a.cat.graph.field = f;
  // columns indexed (i, j) -> i*4 + j, value = basis expansion of e_i e_j
  ExactMatrix m(4, 16, f);
  auto set_prod = [&](std::size_t i, std::size_t j, std::size_t k, long c) {
    m.set(k, i * 4 + j, Scalar::from_int(c, f));
  };
  // 1 * v and v * 1
  for (std::size_t v = 0; v < 4; ++v) {
    set_prod(0, v, v, 1);
    if (v != 0) set_prod(v, 0, v, 1);
  }
  set_prod(1, 1, 0, 1);   // g g = 1
  set_prod(1, 2, 3, 1);   // g x = gx
  set_prod(2, 1, 3, -1);  // x g = -gx
  set_prod(1, 3, 2, 1);   // g gx = x
  set_prod(3, 1, 2, -1);  // gx g = -x
  // x x = x gx = gx x = gx gx = 0
  a.cat.m[{"*", "*", "*"}] = std::move(m);
  ExactMatrix u(4, 1, f);
  u.set(0, 0, Scalar::one(f));
  a.cat.j["*"] = std::move(u);
  Coalgebra c;
  c.dim = 4;
  c.delta = ExactMatrix(16, 4, f);
  auto set_delta = [&](std::size_t b, std::size_t l, std::size_t r, long v) {
    c.delta.set(l * 4 + r, b, Scalar::from_int(v, f));
  };
  set_delta(0, 0, 0, 1);  // delta(1) = 1 (x) 1
  set_delta(1, 1, 1, 1);  // delta(g) = g (x) g
  set_delta(2, 2, 0, 1);  // delta(x) = x (x) 1 + g (x) x
  set_delta(2, 1, 2, 1);
  set_delta(3, 3, 1, 1);  // delta(gx) = gx (x) g + 1 (x) gx
  set_delta(3, 0, 3, 1);
  c.epsilon = mat(1, 4, {"1", "1", "0", "0"}, f);
  a.coalgebras[{"*", "*"}] = std::move(c);
  return a;
}

// The expected Sweedler antipode: 1 -> 1, g -> g, x -> -gx, gx -> x.
inline ExactMatrix sweedler_antipode_matrix() {
  return mat(4, 4,
             {"1", "0", "0", "0",   //
              "0", "1", "0", "0",   //
              "0", "0", "0", "1",   //
              "0", "0", "-1", "0"});
}

// Pair groupoid on two objects: one arrow between any ordered pair.
inline FinCategory pair_groupoid() {
  FinCategory c;
  c.objects = {"a", "b"};
  c.arrows = {{"ia", "a", "a"}, {"ib", "b", "b"}, {"f", "a", "b"},
              {"g", "b", "a"}};
  c.identity = {{"a", 0}, {"b", 1}};
  for (std::size_t i = 0; i < 4; ++i) {
    c.compose[{0, 0}] = 0;
    c.compose[{1, 1}] = 1;
    c.compose[{0, 2}] = 2;
    c.compose[{2, 1}] = 2;
    c.compose[{1, 3}] = 3;
    c.compose[{3, 0}] = 3;
    c.compose[{2, 3}] = 0;  // f g = id_a (diagrammatic)
    c.compose[{3, 2}] = 1;  // g f = id_b
  }
  c.validate();
  return c;
}

// The two-element monoid {1, t} with t^2 = t, as a one-object category.
inline FinCategory monoid_t() {
  FinCategory c;
  c.objects = {"*"};
  c.arrows = {{"1", "*", "*"}, {"t", "*", "*"}};
  c.identity = {{"*", 0}};
  c.compose[{0, 0}] = 0;
  c.compose[{0, 1}] = 1;
  c.compose[{1, 0}] = 1;
  c.compose[{1, 1}] = 1;
  c.validate();
  return c;
}

// ---- generalized-element brute force for V-graph mono/epi over F_2 ----

inline std::string morphism_key(const VGraphMorphism& f) {
  std::ostringstream os;
  for (const auto& [a, b] : f.f0) os << a << ">" << b << ";";
  for (const auto& [pr, m] : f.components) {
    os << pr.first << "," << pr.second << ":";
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) os << m.at(i, j).str();
    os << ";";
  }
  return os.str();
}

// Every V-graph morphism t -> g (both over the same finite field).
inline std::vector<VGraphMorphism> all_morphisms(const VGraph& t,
                                                 const VGraph& g) {
  std::vector<VGraphMorphism> out;
  const FieldSpec& f = g.field;
  std::uint64_t p = f.modulus();
  std::vector<std::size_t> obj_choice(t.objects.size(), 0);
  auto next_obj = [&]() {
    for (std::size_t i = 0; i < obj_choice.size(); ++i) {
      if (++obj_choice[i] < g.objects.size()) return true;
      obj_choice[i] = 0;
    }
    return obj_choice.empty() ? false : false;
  };
  bool more_f0 = true;
  while (more_f0) {
    VGraphMorphism base;
    base.source = t;
    base.target = g;
    for (std::size_t i = 0; i < t.objects.size(); ++i)
      base.f0[t.objects[i]] = g.objects[obj_choice[i]];
    // Enumerate all entry assignments of all components simultaneously.
    std::vector<ObjPair> pairs;
    std::vector<std::size_t> sizes;
    std::size_t total = 0;
    for (const auto& x : t.objects)
      for (const auto& y : t.objects) {
        std::size_t ds = t.dim(x, y);
        if (ds == 0) continue;
        std::size_t dt = g.dim(base.f0[x], base.f0[y]);
        pairs.push_back({x, y});
        sizes.push_back(dt * ds);
        total += dt * ds;
      }
    std::vector<std::uint64_t> digits(total, 0);
    bool more = true;
    while (more) {
      VGraphMorphism m = base;
      std::size_t off = 0;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto& [x, y] = pairs[k];
        std::size_t ds = t.dim(x, y);
        std::size_t dt = g.dim(base.f0.at(x), base.f0.at(y));
        ExactMatrix comp(dt, ds, f);
        for (std::size_t i = 0; i < dt; ++i)
          for (std::size_t j = 0; j < ds; ++j)
            comp.set(i, j, Scalar::from_residue(digits[off + i * ds + j], f));
        m.components.emplace(ObjPair{x, y}, std::move(comp));
        off += sizes[k];
      }
      out.push_back(std::move(m));
      more = false;
      for (std::size_t i = 0; i < total; ++i) {
        if (++digits[i] < p) {
          more = true;
          break;
        }
        digits[i] = 0;
      }
    }
    more_f0 = next_obj();
    if (t.objects.empty()) break;
  }
  return out;
}

// Probe graphs: <= 2 objects, total dimension <= 2, over f.
inline std::vector<VGraph> probe_graphs(const FieldSpec& f) {
  std::vector<VGraph> out;
  auto add = [&](std::vector<std::string> objs,
                 std::map<ObjPair, std::size_t> homs) {
    VGraph g;
    g.objects = std::move(objs);
    g.hom_dims = std::move(homs);
    g.field = f;
    out.push_back(std::move(g));
  };
  add({"a"}, {});
  add({"a"}, {{{"a", "a"}, 1}});
  add({"a"}, {{{"a", "a"}, 2}});
  add({"a", "b"}, {});
  add({"a", "b"}, {{{"a", "b"}, 1}});
  add({"a", "b"}, {{{"a", "b"}, 2}});
  add({"a", "b"}, {{{"a", "b"}, 1}, {{"b", "a"}, 1}});
  add({"a", "b"}, {{{"a", "a"}, 1}, {{"a", "b"}, 1}});
  return out;
}

// f is left-cancellable w.r.t. every probe graph (mono brute force).
inline bool brute_mono(const VGraphMorphism& f) {
  for (const auto& t : probe_graphs(f.source.field)) {
    std::set<std::string> seen;
    for (const auto& g : all_morphisms(t, f.source)) {
      std::string key = morphism_key(compose(f, g));
      if (!seen.insert(key).second) return false;
    }
  }
  return true;
}

// f is right-cancellable w.r.t. every probe graph (epi brute force).
inline bool brute_epi(const VGraphMorphism& f) {
  for (const auto& t : probe_graphs(f.target.field)) {
    std::set<std::string> seen;
    for (const auto& g : all_morphisms(f.target, t)) {
      std::string key = morphism_key(compose(g, f));
      if (!seen.insert(key).second) return false;
    }
  }
  return true;
}

inline VGraphMorphism random_vgraph_morphism(const VGraph& s, const VGraph& t,
                                             std::mt19937& rng) {
  VGraphMorphism f;
  f.source = s;
  f.target = t;
  const FieldSpec& fld = s.field;
  std::uint64_t p = fld.modulus();
  for (const auto& x : s.objects)
    f.f0[x] = t.objects[rng() % t.objects.size()];
  for (const auto& x : s.objects)
    for (const auto& y : s.objects) {
      std::size_t ds = s.dim(x, y);
      if (ds == 0) continue;
      std::size_t dt = t.dim(f.f0[x], f.f0[y]);
      ExactMatrix m(dt, ds, fld);
      for (std::size_t i = 0; i < dt; ++i)
        for (std::size_t j = 0; j < ds; ++j)
          m.set(i, j, Scalar::from_residue(rng() % p, fld));
      f.components.emplace(ObjPair{x, y}, std::move(m));
    }
  return f;
}

// ---- subspace-lattice brute force for coideals over small prime fields ----

// Every subspace of F_p^d (feasible for p^d small).
inline std::vector<Subspace> all_subspaces(std::size_t d, const FieldSpec& f) {
  std::uint64_t p = f.modulus();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= p;
  std::vector<std::vector<Scalar>> vecs;
  for (std::uint64_t code = 1; code < total; ++code) {
    std::vector<Scalar> v(d, Scalar::zero(f));
    std::uint64_t c = code;
    for (std::size_t i = 0; i < d; ++i) {
      v[i] = Scalar::from_residue(c % p, f);
      c /= p;
    }
    vecs.push_back(std::move(v));
  }
  std::set<std::string> seen;
  std::vector<Subspace> out;
  for (std::uint64_t mask = 0; mask < (1ull << vecs.size()); ++mask) {
    ExactMatrix gens(__builtin_popcountll(mask), d, f);
    std::size_t r = 0;
    for (std::size_t i = 0; i < vecs.size(); ++i)
      if (mask & (1ull << i)) {
        for (std::size_t j = 0; j < d; ++j) gens.set(r, j, vecs[i][j]);
        ++r;
      }
    Subspace s = Subspace::span_rows(gens);
    std::ostringstream key;
    for (std::size_t i = 0; i < s.basis_rows().rows(); ++i)
      for (std::size_t j = 0; j < d; ++j)
        key << s.basis_rows().at(i, j).str() << ",";
    if (seen.insert(key.str()).second) out.push_back(std::move(s));
  }
  return out;
}

inline bool is_coideal(const Coalgebra& c, const Subspace& j) {
  std::size_t d = c.dim;
  const FieldSpec& f = c.field();
  // epsilon vanishes on J
  for (std::size_t r = 0; r < j.dim(); ++r) {
    Scalar e = Scalar::zero(f);
    for (std::size_t k = 0; k < d; ++k)
      e = e + c.epsilon.at(0, k) * j.basis_rows().at(r, k);
    if (!e.is_zero()) return false;
  }
  // J(x)C + C(x)J inside F^{d^2}
  ExactMatrix gens(2 * j.dim() * d, d * d, f);
  std::size_t row = 0;
  for (std::size_t r = 0; r < j.dim(); ++r)
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t a = 0; a < d; ++a) {
        gens.set(row, a * d + k, j.basis_rows().at(r, a));
        gens.set(row + 1, k * d + a, j.basis_rows().at(r, a));
      }
      row += 2;
    }
  Subspace big = Subspace::span_rows(gens);
  for (std::size_t r = 0; r < j.dim(); ++r) {
    std::vector<Scalar> v(d, Scalar::zero(f));
    for (std::size_t k = 0; k < d; ++k) v[k] = j.basis_rows().at(r, k);
    std::vector<Scalar> dv = c.delta.apply(v);
    if (!big.contains(dv)) return false;
  }
  return true;
}

// The largest coideal inside w, by exhaustive subspace enumeration: the sum
// of every qualifying subspace (coideals are closed under sums).
inline Subspace brute_largest_coideal(const Coalgebra& c, const Subspace& w) {
  Subspace best = Subspace::zero(c.dim, c.field());
  for (const auto& j : all_subspaces(c.dim, c.field()))
    if (w.contains(j) && is_coideal(c, j)) best = best.sum(j);
  return best;
}

}  // namespace hopfcat::testing
