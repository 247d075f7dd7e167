#include "hopfcat/vcategory.hpp"

namespace hopfcat {

const ExactMatrix& VCategory::comp(const std::string& x, const std::string& y,
                                   const std::string& z) const {
  auto it = m.find({x, y, z});
  if (it == m.end())
    throw bad_input("missing composition at (" + x + ", " + y + ", " + z + ")");
  return it->second;
}

const ExactMatrix& VCategory::unit(const std::string& x) const {
  auto it = j.find(x);
  if (it == j.end()) throw bad_input("missing unit at " + x);
  return it->second;
}

void VCategory::validate_shapes() const {
  graph.validate();
  for (const auto& x : graph.objects)
    for (const auto& y : graph.objects)
      for (const auto& z : graph.objects) {
        const ExactMatrix& c = comp(x, y, z);
        if (c.rows() != graph.dim(x, z) ||
            c.cols() != graph.dim(x, y) * graph.dim(y, z))
          throw bad_input("composition shape mismatch at (" + x + ", " + y +
                          ", " + z + ")");
      }
  for (const auto& x : graph.objects) {
    const ExactMatrix& u = unit(x);
    if (u.rows() != graph.dim(x, x) || u.cols() != 1)
      throw bad_input("unit shape mismatch at " + x);
  }
}

std::vector<std::string> check_vcategory(const VCategory& a) {
  a.validate_shapes();
  std::vector<std::string> report;
  const FieldSpec& f = a.graph.field;
  for (const auto& x : a.graph.objects)
    for (const auto& y : a.graph.objects)
      for (const auto& z : a.graph.objects)
        for (const auto& w : a.graph.objects) {
          ExactMatrix lhs =
              a.comp(x, z, w) *
              kron(a.comp(x, y, z),
                   ExactMatrix::identity(a.graph.dim(z, w), f));
          ExactMatrix rhs =
              a.comp(x, y, w) *
              kron(ExactMatrix::identity(a.graph.dim(x, y), f),
                   a.comp(y, z, w));
          if (lhs != rhs)
            report.push_back("associativity fails at (" + x + ", " + y + ", " +
                             z + ", " + w + ")");
        }
  for (const auto& x : a.graph.objects)
    for (const auto& y : a.graph.objects) {
      ExactMatrix id = ExactMatrix::identity(a.graph.dim(x, y), f);
      if (a.comp(x, x, y) * kron(a.unit(x), id) != id)
        report.push_back("left unit fails at (" + x + ", " + y + ")");
      if (a.comp(x, y, y) * kron(id, a.unit(y)) != id)
        report.push_back("right unit fails at (" + x + ", " + y + ")");
    }
  return report;
}

const Coalgebra& SemiHopfCategory::coalg(const std::string& x,
                                         const std::string& y) const {
  auto it = coalgebras.find({x, y});
  if (it == coalgebras.end())
    throw bad_input("missing coalgebra at (" + x + ", " + y + ")");
  return it->second;
}

void SemiHopfCategory::validate_shapes() const {
  cat.validate_shapes();
  for (const auto& x : cat.graph.objects)
    for (const auto& y : cat.graph.objects) {
      const Coalgebra& c = coalg(x, y);
      c.validate_shapes();
      if (c.dim != cat.graph.dim(x, y))
        throw bad_input("coalgebra dimension mismatch at (" + x + ", " + y +
                        ")");
    }
}

std::vector<std::string> check_semihopf(const SemiHopfCategory& a) {
  a.validate_shapes();
  std::vector<std::string> report = check_vcategory(a.cat);
  const FieldSpec& f = a.cat.graph.field;
  for (const auto& x : a.cat.graph.objects)
    for (const auto& y : a.cat.graph.objects) {
      auto sub = check_coalgebra(a.coalg(x, y));
      for (const auto& line : sub)
        report.push_back("hom (" + x + ", " + y + "): " + line);
    }
  for (const auto& x : a.cat.graph.objects)
    for (const auto& y : a.cat.graph.objects)
      for (const auto& z : a.cat.graph.objects) {
        std::size_t dxy = a.cat.graph.dim(x, y), dyz = a.cat.graph.dim(y, z);
        const ExactMatrix& m = a.cat.comp(x, y, z);
        ExactMatrix mid = kron(ExactMatrix::identity(dxy, f),
                               kron(tensor_swap(dxy, dyz, f),
                                    ExactMatrix::identity(dyz, f)));
        ExactMatrix lhs = a.coalg(x, z).delta * m;
        ExactMatrix rhs = kron(m, m) * mid *
                          kron(a.coalg(x, y).delta, a.coalg(y, z).delta);
        if (lhs != rhs)
          report.push_back("delta not multiplicative at (" + x + ", " + y +
                           ", " + z + ")");
        if (a.coalg(x, z).epsilon * m !=
            kron(a.coalg(x, y).epsilon, a.coalg(y, z).epsilon))
          report.push_back("epsilon not multiplicative at (" + x + ", " + y +
                           ", " + z + ")");
      }
  for (const auto& x : a.cat.graph.objects) {
    const ExactMatrix& u = a.cat.unit(x);
    if (a.coalg(x, x).delta * u != kron(u, u))
      report.push_back("unit not grouplike (delta) at " + x);
    ExactMatrix e = a.coalg(x, x).epsilon * u;
    if (e.rows() != 1 || e.cols() != 1 || !e.at(0, 0).is_one())
      report.push_back("unit not grouplike (epsilon) at " + x);
  }
  return report;
}

Variant parse_variant(const std::string& s) {
  if (s == "op") return Variant::op;
  if (s == "cop") return Variant::cop;
  if (s == "opcop") return Variant::opcop;
  throw bad_input("unknown variant: " + s);
}

VCategory opposite_vcategory(const VCategory& a) {
  VCategory b;
  b.graph = opposite_graph(a.graph);
  b.j = a.j;
  for (const auto& x : a.graph.objects)
    for (const auto& y : a.graph.objects)
      for (const auto& z : a.graph.objects)
        // m'_{xyz}: A_yx (x) A_zy -> A_zx is m_{zyx} after the swap.
        b.m[{x, y, z}] =
            a.comp(z, y, x) *
            tensor_swap(a.graph.dim(y, x), a.graph.dim(z, y), a.graph.field);
  return b;
}

SemiHopfCategory variant(const SemiHopfCategory& a, Variant which) {
  SemiHopfCategory b;
  if (which == Variant::op || which == Variant::opcop) {
    b.cat = opposite_vcategory(a.cat);
    for (const auto& [pr, c] : a.coalgebras)
      b.coalgebras[{pr.second, pr.first}] = c;
  } else {
    b = a;
  }
  if (which == Variant::cop || which == Variant::opcop)
    for (auto& [pr, c] : b.coalgebras) c = cop(c);
  return b;
}

std::vector<std::string> check_semihopf_morphism(const SemiHopfCategory& a,
                                                 const SemiHopfCategory& b,
                                                 const SemiHopfMorphism& f) {
  std::vector<std::string> report;
  for (const auto& x : a.cat.graph.objects)
    if (!f.f0.count(x)) {
      report.push_back("f0 undefined on " + x);
      return report;
    }
  auto comp_of = [&](const std::string& x,
                     const std::string& y) -> const ExactMatrix& {
    auto it = f.components.find({x, y});
    if (it == f.components.end())
      throw bad_input("missing component at (" + x + ", " + y + ")");
    return it->second;
  };
  for (const auto& x : a.cat.graph.objects)
    for (const auto& y : a.cat.graph.objects) {
      const ExactMatrix& c = comp_of(x, y);
      if (c.rows() != b.cat.graph.dim(f.f0.at(x), f.f0.at(y)) ||
          c.cols() != a.cat.graph.dim(x, y)) {
        report.push_back("component shape mismatch at (" + x + ", " + y + ")");
        continue;
      }
      auto sub = check_coalgebra_morphism(
          a.coalg(x, y), b.coalg(f.f0.at(x), f.f0.at(y)), c);
      for (const auto& line : sub)
        report.push_back("component (" + x + ", " + y + ") " + line);
    }
  if (!report.empty()) return report;
  for (const auto& x : a.cat.graph.objects)
    for (const auto& y : a.cat.graph.objects)
      for (const auto& z : a.cat.graph.objects) {
        ExactMatrix lhs = comp_of(x, z) * a.cat.comp(x, y, z);
        ExactMatrix rhs =
            b.cat.comp(f.f0.at(x), f.f0.at(y), f.f0.at(z)) *
            kron(comp_of(x, y), comp_of(y, z));
        if (lhs != rhs)
          report.push_back("not multiplicative at (" + x + ", " + y + ", " + z +
                           ")");
      }
  for (const auto& x : a.cat.graph.objects)
    if (comp_of(x, x) * a.cat.unit(x) != b.cat.unit(f.f0.at(x)))
      report.push_back("does not preserve the unit at " + x);
  return report;
}

namespace {

// Rows of the condition "left/right products of c land in J" for one triple.
// qm = (quotient of the product hom) * m; the embedding fixes the other
// tensor factor at each of its basis vectors.
ExactMatrix ideal_rows_right(const ExactMatrix& qm, std::size_t d_self,
                             std::size_t d_other) {
  ExactMatrix rows(qm.rows() * d_other, d_self, qm.field());
  for (std::size_t t = 0; t < d_other; ++t)
    for (std::size_t r = 0; r < qm.rows(); ++r)
      for (std::size_t i = 0; i < d_self; ++i)
        rows.set(t * qm.rows() + r, i, qm.at(r, i * d_other + t));
  return rows;
}

ExactMatrix ideal_rows_left(const ExactMatrix& qm, std::size_t d_other,
                            std::size_t d_self) {
  ExactMatrix rows(qm.rows() * d_other, d_self, qm.field());
  for (std::size_t s = 0; s < d_other; ++s)
    for (std::size_t r = 0; r < qm.rows(); ++r)
      for (std::size_t i = 0; i < d_self; ++i)
        rows.set(s * qm.rows() + r, i, qm.at(r, s * d_self + i));
  return rows;
}

}  // namespace

CoreflectResult coreflect_image_semihopf(
    const SemiHopfCategory& c, const std::map<ObjPair, ExactMatrix>& gamma,
    const VCategory& a) {
  c.validate_shapes();
  a.validate_shapes();
  if (c.cat.graph.objects != a.graph.objects)
    throw bad_input("coreflection requires matching object lists");
  const auto& objs = c.cat.graph.objects;

  // Start from the largest coideal inside each ker gamma, then shrink until
  // the family is also closed under left/right composition.
  std::map<ObjPair, Subspace> jfam;
  for (const auto& x : objs)
    for (const auto& y : objs) {
      auto it = gamma.find({x, y});
      if (it == gamma.end())
        throw bad_input("missing gamma component at (" + x + ", " + y + ")");
      if (it->second.cols() != c.cat.graph.dim(x, y) ||
          it->second.rows() != a.graph.dim(x, y))
        throw bad_input("gamma shape mismatch at (" + x + ", " + y + ")");
      jfam[{x, y}] = largest_coideal_in(
          c.coalg(x, y), Subspace::span_cols(kernel_basis(it->second)));
    }

  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& x : objs)
      for (const auto& y : objs) {
        Subspace& j = jfam[{x, y}];
        std::size_t dxy = c.cat.graph.dim(x, y);
        ExactMatrix eqs(0, dxy, c.cat.graph.field);
        for (const auto& z : objs) {
          std::size_t dyz = c.cat.graph.dim(y, z);
          if (dyz > 0)
            eqs = eqs.vstack(ideal_rows_right(
                jfam[{x, z}].quotient_map() * c.cat.comp(x, y, z), dxy, dyz));
          std::size_t dzx = c.cat.graph.dim(z, x);
          if (dzx > 0)
            eqs = eqs.vstack(ideal_rows_left(
                jfam[{z, y}].quotient_map() * c.cat.comp(z, x, y), dzx, dxy));
        }
        Subspace next =
            j.intersect(Subspace::span_cols(kernel_basis(eqs)));
        next = largest_coideal_in(c.coalg(x, y), next);
        if (!(next == j)) {
          j = next;
          changed = true;
        }
      }
  }

  CoreflectResult out;
  out.kernel = jfam;
  out.image.cat.graph.objects = objs;
  out.image.cat.graph.field = c.cat.graph.field;
  std::map<ObjPair, ExactMatrix> section;
  for (const auto& x : objs)
    for (const auto& y : objs) {
      ObjPair pr{x, y};
      out.image.coalgebras[pr] =
          quotient_coalgebra(c.coalg(x, y), jfam[pr], &out.quotient[pr]);
      section[pr] = jfam[pr].section();
      out.image.cat.graph.hom_dims[pr] = out.image.coalgebras[pr].dim;
    }
  for (const auto& x : objs) {
    for (const auto& y : objs)
      for (const auto& z : objs)
        out.image.cat.m[{x, y, z}] = out.quotient[{x, z}] * c.cat.comp(x, y, z) *
                                     kron(section[{x, y}], section[{y, z}]);
    out.image.cat.j[x] = out.quotient[{x, x}] * c.cat.unit(x);
  }

  // Component families gamma_k per hom, with certified stabilization against
  // the per-hom largest coideal.
  for (const auto& x : objs)
    for (const auto& y : objs) {
      ObjPair pr{x, y};
      CofreeFactorization cf = cofree_factorization(c.coalg(x, y), gamma.at(pr));
      out.components[pr] = cf.components;
    }
  return out;
}

}  // namespace hopfcat
