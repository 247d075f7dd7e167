#include "hopfcat/hopf.hpp"

namespace hopfcat {

const ExactMatrix& Antipode::at(const std::string& x,
                                const std::string& y) const {
  auto it = components.find({x, y});
  if (it == components.end())
    throw bad_input("missing antipode component at (" + x + ", " + y + ")");
  return it->second;
}

AntipodeResult solve_antipode(const SemiHopfCategory& a) {
  a.validate_shapes();
  const FieldSpec& fld = a.cat.graph.field;
  AntipodeResult out;
  Antipode s;
  out.unique = true;
  for (const auto& x : a.cat.graph.objects)
    for (const auto& y : a.cat.graph.objects) {
      std::size_t dxy = a.cat.graph.dim(x, y);
      std::size_t dyx = a.cat.graph.dim(y, x);
      std::size_t dxx = a.cat.graph.dim(x, x);
      std::size_t dyy = a.cat.graph.dim(y, y);
      const ExactMatrix& delta = a.coalg(x, y).delta;
      const ExactMatrix& eps = a.coalg(x, y).epsilon;
      const ExactMatrix& m1 = a.cat.comp(x, y, x);  // A_xy (x) A_yx -> A_xx
      const ExactMatrix& m2 = a.cat.comp(y, x, y);  // A_yx (x) A_xy -> A_yy
      const ExactMatrix& jx = a.cat.unit(x);
      const ExactMatrix& jy = a.cat.unit(y);
      std::size_t unknowns = dyx * dxy;  // entries of S_xy, row-major
      std::size_t n_eq = dxy * (dxx + dyy);
      ExactMatrix sys(n_eq, unknowns, fld);
      ExactMatrix rhs(n_eq, 1, fld);
      std::size_t row = 0;
      // m_{xyx} o (id (x) S) o delta = j_x o epsilon
      for (std::size_t c = 0; c < dxy; ++c)
        for (std::size_t r = 0; r < dxx; ++r, ++row) {
          for (std::size_t p = 0; p < dyx; ++p)
            for (std::size_t q = 0; q < dxy; ++q) {
              Scalar coef = Scalar::zero(fld);
              for (std::size_t i = 0; i < dxy; ++i)
                coef += delta.at(i * dxy + q, c) * m1.at(r, i * dyx + p);
              sys.set(row, p * dxy + q, coef);
            }
          rhs.set(row, 0, jx.at(r, 0) * eps.at(0, c));
        }
      // m_{yxy} o (S (x) id) o delta = j_y o epsilon
      for (std::size_t c = 0; c < dxy; ++c)
        for (std::size_t r = 0; r < dyy; ++r, ++row) {
          for (std::size_t p = 0; p < dyx; ++p)
            for (std::size_t q = 0; q < dxy; ++q) {
              Scalar coef = Scalar::zero(fld);
              for (std::size_t j = 0; j < dxy; ++j)
                coef += delta.at(q * dxy + j, c) * m2.at(r, p * dxy + j);
              sys.set(row, p * dxy + q, coef);
            }
          rhs.set(row, 0, jy.at(r, 0) * eps.at(0, c));
        }
      auto sol = solve(sys, rhs);
      if (!sol) {
        out.inconsistency =
            "antipode system inconsistent at (" + x + ", " + y + ")";
        out.unique = false;
        return out;
      }
      if (sol->kernel.cols() > 0) out.unique = false;
      ExactMatrix comp(dyx, dxy, fld);
      for (std::size_t p = 0; p < dyx; ++p)
        for (std::size_t q = 0; q < dxy; ++q)
          comp.set(p, q, sol->particular.at(p * dxy + q, 0));
      s.components[{x, y}] = comp;
    }
  out.antipode = std::move(s);
  return out;
}

std::vector<std::string> check_antipode_properties(const SemiHopfCategory& a,
                                                   const Antipode& s) {
  a.validate_shapes();
  std::vector<std::string> report;
  const FieldSpec& fld = a.cat.graph.field;
  for (const auto& x : a.cat.graph.objects)
    for (const auto& y : a.cat.graph.objects) {
      std::size_t dxy = a.cat.graph.dim(x, y);
      const ExactMatrix& sxy = s.at(x, y);
      if (sxy.rows() != a.cat.graph.dim(y, x) || sxy.cols() != dxy) {
        report.push_back("antipode shape mismatch at (" + x + ", " + y + ")");
        continue;
      }
      ExactMatrix id = ExactMatrix::identity(dxy, fld);
      const Coalgebra& c = a.coalg(x, y);
      if (a.cat.comp(x, y, x) * kron(id, sxy) * c.delta !=
          a.cat.unit(x) * c.epsilon)
        report.push_back("first antipode equation fails at (" + x + ", " + y +
                         ")");
      if (a.cat.comp(y, x, y) * kron(sxy, id) * c.delta !=
          a.cat.unit(y) * c.epsilon)
        report.push_back("second antipode equation fails at (" + x + ", " + y +
                         ")");
    }
  // Anti-V-functor.
  for (const auto& x : a.cat.graph.objects)
    for (const auto& y : a.cat.graph.objects)
      for (const auto& z : a.cat.graph.objects) {
        ExactMatrix lhs = s.at(x, z) * a.cat.comp(x, y, z);
        ExactMatrix rhs =
            a.cat.comp(z, y, x) *
            tensor_swap(a.cat.graph.dim(y, x), a.cat.graph.dim(z, y),
                        fld) *
            kron(s.at(x, y), s.at(y, z));
        if (lhs != rhs)
          report.push_back("anti-functor law fails at (" + x + ", " + y +
                           ", " + z + ")");
      }
  for (const auto& x : a.cat.graph.objects)
    if (s.at(x, x) * a.cat.unit(x) != a.cat.unit(x))
      report.push_back("antipode does not fix the unit at " + x);
  // Anti-coalgebra morphism.
  for (const auto& x : a.cat.graph.objects)
    for (const auto& y : a.cat.graph.objects) {
      const ExactMatrix& sxy = s.at(x, y);
      std::size_t dyx = a.cat.graph.dim(y, x);
      if (a.coalg(y, x).delta * sxy !=
          tensor_swap(dyx, dyx, fld) * kron(sxy, sxy) * a.coalg(x, y).delta)
        report.push_back("anti-coalgebra law (delta) fails at (" + x + ", " +
                         y + ")");
      if (a.coalg(y, x).epsilon * sxy != a.coalg(x, y).epsilon)
        report.push_back("anti-coalgebra law (epsilon) fails at (" + x + ", " +
                         y + ")");
    }
  // Equivalent formulation: S is a semi-Hopf morphism into the
  // opposite-coopposite variant.
  SemiHopfMorphism f;
  for (const auto& x : a.cat.graph.objects) f.f0[x] = x;
  f.components = s.components;
  auto sub = check_semihopf_morphism(a, variant(a, Variant::opcop), f);
  for (const auto& line : sub)
    report.push_back("as morphism into opcop: " + line);
  return report;
}

WeakBialgebraData flatten_weak_hopf(const SemiHopfCategory& a,
                                    const Antipode* s) {
  a.validate_shapes();
  const FieldSpec& fld = a.cat.graph.field;
  WeakBialgebraData w;
  if (a.cat.graph.objects.empty()) {
    w.degenerate = true;
    w.report.push_back("degenerate: empty object set yields the zero algebra");
    w.mult = ExactMatrix(0, 0, fld);
    w.unit = ExactMatrix(0, 1, fld);
    w.coalg.dim = 0;
    w.coalg.delta = ExactMatrix(0, 0, fld);
    w.coalg.epsilon = ExactMatrix(1, 0, fld);
    return w;
  }
  const auto& objs = a.cat.graph.objects;
  for (const auto& x : objs)
    for (const auto& y : objs) {
      w.offsets[{x, y}] = w.dim;
      w.dim += a.cat.graph.dim(x, y);
    }
  std::size_t d = w.dim;
  w.mult = ExactMatrix(d, d * d, fld);
  w.unit = ExactMatrix(d, 1, fld);
  w.coalg.dim = d;
  w.coalg.delta = ExactMatrix(d * d, d, fld);
  w.coalg.epsilon = ExactMatrix(1, d, fld);
  for (const auto& x : objs)
    for (const auto& y : objs) {
      std::size_t oxy = w.offsets[{x, y}];
      std::size_t dxy = a.cat.graph.dim(x, y);
      // Block multiplication: nonzero only when middle objects match.
      for (const auto& z : objs) {
        std::size_t oyz = w.offsets[{y, z}];
        std::size_t oxz = w.offsets[{x, z}];
        std::size_t dyz = a.cat.graph.dim(y, z);
        const ExactMatrix& m = a.cat.comp(x, y, z);
        for (std::size_t i = 0; i < dxy; ++i)
          for (std::size_t k = 0; k < dyz; ++k)
            for (std::size_t r = 0; r < m.rows(); ++r)
              w.mult.set(oxz + r, (oxy + i) * d + (oyz + k),
                         m.at(r, i * dyz + k));
      }
      // Block-diagonal comultiplication and counit.
      const Coalgebra& c = a.coalg(x, y);
      for (std::size_t col = 0; col < dxy; ++col) {
        for (std::size_t i = 0; i < dxy; ++i)
          for (std::size_t jj = 0; jj < dxy; ++jj)
            w.coalg.delta.set((oxy + i) * d + (oxy + jj), oxy + col,
                              c.delta.at(i * dxy + jj, col));
        w.coalg.epsilon.set(0, oxy + col, c.epsilon.at(0, col));
      }
    }
  for (const auto& x : objs) {
    std::size_t oxx = w.offsets[{x, x}];
    const ExactMatrix& jx = a.cat.unit(x);
    for (std::size_t r = 0; r < jx.rows(); ++r)
      w.unit.set(oxx + r, 0, jx.at(r, 0));
  }

  ExactMatrix id = ExactMatrix::identity(d, fld);
  if (w.mult * kron(w.mult, id) != w.mult * kron(id, w.mult))
    w.report.push_back("associativity fails");
  for (const auto& line : check_coalgebra(w.coalg))
    w.report.push_back("flattened coalgebra: " + line);
  ExactMatrix mid = kron(id, kron(tensor_swap(d, d, fld), id));
  if (w.coalg.delta * w.mult !=
      kron(w.mult, w.mult) * mid * kron(w.coalg.delta, w.coalg.delta))
    w.report.push_back("delta multiplicativity fails");

  ExactMatrix unit_sq = kron(w.unit, w.unit);
  w.delta_of_unit_is_unit_tensor_unit =
      (w.coalg.delta * w.unit == unit_sq);

  if (s) {
    ExactMatrix sm(d, d, fld);
    for (const auto& x : objs)
      for (const auto& y : objs) {
        const ExactMatrix& c = s->at(x, y);
        std::size_t oxy = w.offsets[{x, y}];
        std::size_t oyx = w.offsets[{y, x}];
        for (std::size_t r = 0; r < c.rows(); ++r)
          for (std::size_t col = 0; col < c.cols(); ++col)
            sm.set(oyx + r, oxy + col, c.at(r, col));
      }
    // Flattened antipode equations: the convolution products hit the source
    // and target unit projections.
    ExactMatrix proj_src(d, d, fld), proj_tgt(d, d, fld);
    for (const auto& x : objs)
      for (const auto& y : objs) {
        std::size_t oxy = w.offsets[{x, y}];
        std::size_t dxy = a.cat.graph.dim(x, y);
        const ExactMatrix& eps = a.coalg(x, y).epsilon;
        const ExactMatrix& jx = a.cat.unit(x);
        const ExactMatrix& jy = a.cat.unit(y);
        std::size_t oxx = w.offsets[{x, x}];
        std::size_t oyy = w.offsets[{y, y}];
        for (std::size_t col = 0; col < dxy; ++col) {
          for (std::size_t r = 0; r < jx.rows(); ++r)
            proj_src.set(oxx + r, oxy + col, jx.at(r, 0) * eps.at(0, col));
          for (std::size_t r = 0; r < jy.rows(); ++r)
            proj_tgt.set(oyy + r, oxy + col, jy.at(r, 0) * eps.at(0, col));
        }
      }
    if (w.mult * kron(id, sm) * w.coalg.delta != proj_src)
      w.report.push_back("flattened antipode equation (id (x) S) fails");
    if (w.mult * kron(sm, id) * w.coalg.delta != proj_tgt)
      w.report.push_back("flattened antipode equation (S (x) id) fails");
    w.antipode = std::move(sm);
  }
  return w;
}

}  // namespace hopfcat
