#include "hopfcat/coalgebra.hpp"

namespace hopfcat {

void Coalgebra::validate_shapes() const {
  if (delta.rows() != dim * dim || delta.cols() != dim)
    throw bad_input("coalgebra delta shape mismatch");
  if (epsilon.rows() != 1 || epsilon.cols() != dim)
    throw bad_input("coalgebra epsilon shape mismatch");
  if (delta.field() != epsilon.field())
    throw bad_input("coalgebra mixes field specs");
}

std::vector<std::string> check_coalgebra(const Coalgebra& c) {
  c.validate_shapes();
  std::vector<std::string> report;
  const FieldSpec& f = c.field();
  ExactMatrix id = ExactMatrix::identity(c.dim, f);
  ExactMatrix lhs = kron(c.delta, id) * c.delta;
  ExactMatrix rhs = kron(id, c.delta) * c.delta;
  for (std::size_t j = 0; j < c.dim; ++j)
    if (lhs.column(j) != rhs.column(j)) {
      report.push_back("coassociativity fails at basis index " +
                       std::to_string(j));
      break;
    }
  ExactMatrix left = kron(c.epsilon, id) * c.delta;
  ExactMatrix right = kron(id, c.epsilon) * c.delta;
  for (std::size_t j = 0; j < c.dim; ++j)
    if (left.column(j) != id.column(j)) {
      report.push_back("left counit fails at basis index " + std::to_string(j));
      break;
    }
  for (std::size_t j = 0; j < c.dim; ++j)
    if (right.column(j) != id.column(j)) {
      report.push_back("right counit fails at basis index " +
                       std::to_string(j));
      break;
    }
  return report;
}

ExactMatrix iterate_delta(const Coalgebra& c, std::size_t n) {
  if (n == 0) return c.epsilon;
  ExactMatrix acc = ExactMatrix::identity(c.dim, c.field());
  for (std::size_t k = 2; k <= n; ++k)
    acc = kron(acc, ExactMatrix::identity(c.dim, c.field())) * c.delta;
  return acc;
}

Subspace largest_coideal_in(const Coalgebra& c, const Subspace& w) {
  if (w.ambient() != c.dim) throw bad_input("subspace ambient mismatch");
  Subspace j = w.intersect(Subspace::span_cols(kernel_basis(c.epsilon)));
  for (;;) {
    // J (x) C + C (x) J = ker(q (x) q) for the quotient map q by J.
    ExactMatrix q = j.quotient_map();
    Subspace next =
        j.intersect(Subspace::span_cols(kernel_basis(kron(q, q) * c.delta)));
    if (next == j) return j;
    j = next;
  }
}

Subspace largest_subcoalgebra_in(const Coalgebra& c, const Subspace& w) {
  if (w.ambient() != c.dim) throw bad_input("subspace ambient mismatch");
  Subspace e = w;
  ExactMatrix id = ExactMatrix::identity(c.dim, c.field());
  for (;;) {
    // E (x) E = ker(q (x) id) /\ ker(id (x) q).
    ExactMatrix q = e.quotient_map();
    ExactMatrix eqs = (kron(q, id) * c.delta).vstack(kron(id, q) * c.delta);
    Subspace next = e.intersect(Subspace::span_cols(kernel_basis(eqs)));
    if (next == e) return e;
    e = next;
  }
}

Coalgebra quotient_coalgebra(const Coalgebra& c, const Subspace& j,
                             ExactMatrix* q_out) {
  ExactMatrix q = j.quotient_map();
  ExactMatrix s = j.section();
  // Well-definedness: epsilon and (q (x) q) o delta must kill j.
  ExactMatrix inc = j.basis_cols();
  if (!(c.epsilon * inc).is_zero() ||
      !(kron(q, q) * c.delta * inc).is_zero())
    throw bad_input("quotient by a subspace that is not a coideal");
  Coalgebra out;
  out.dim = c.dim - j.dim();
  out.delta = kron(q, q) * c.delta * s;
  out.epsilon = c.epsilon * s;
  auto rep = check_coalgebra(out);
  if (!rep.empty())
    throw bad_input("quotient by a non-coideal: " + rep.front());
  if (q_out) *q_out = q;
  return out;
}

SubCoalgebra induced_subcoalgebra(const Coalgebra& c, const Subspace& e) {
  SubCoalgebra out;
  out.space = e;
  out.inclusion = e.basis_cols();
  auto sol = solve(kron(out.inclusion, out.inclusion), c.delta * out.inclusion);
  if (!sol)
    throw bad_input("subspace is not delta-stable");
  out.coalg.dim = e.dim();
  out.coalg.delta = sol->particular;
  out.coalg.epsilon = c.epsilon * out.inclusion;
  return out;
}

std::vector<std::string> check_coalgebra_morphism(const Coalgebra& c,
                                                  const Coalgebra& d,
                                                  const ExactMatrix& f) {
  std::vector<std::string> report;
  if (f.rows() != d.dim || f.cols() != c.dim) {
    report.push_back("morphism shape mismatch");
    return report;
  }
  if (kron(f, f) * c.delta != d.delta * f)
    report.push_back("does not commute with delta");
  if (d.epsilon * f != c.epsilon)
    report.push_back("does not commute with epsilon");
  return report;
}

CofreeFactorization cofree_factorization(const Coalgebra& c,
                                         const ExactMatrix& gamma) {
  c.validate_shapes();
  if (gamma.cols() != c.dim) throw bad_input("gamma shape mismatch");
  CofreeFactorization out;
  out.source = c;
  out.target_dim = gamma.rows();
  out.gamma = gamma;
  out.kernel =
      largest_coideal_in(c, Subspace::span_cols(kernel_basis(gamma)));

  // Components gamma_k = gamma^{(x)k} o delta^k, until the kernel
  // intersection meets the certified target.
  Subspace meet = Subspace::full(c.dim, c.field());
  ExactMatrix pow = ExactMatrix::identity(1, c.field());  // gamma^{(x)0}
  for (std::size_t k = 0;; ++k) {
    ExactMatrix gk = pow * iterate_delta(c, k);
    out.components.push_back(gk);
    meet = meet.intersect(Subspace::span_cols(kernel_basis(gk)));
    if (meet == out.kernel) {
      out.stabilization = k;
      break;
    }
    if (k > c.dim + 1)
      throw bad_input("cofree factorization failed to stabilize");
    pow = kron(pow, gamma);
  }
  out.image = quotient_coalgebra(c, out.kernel, &out.quotient);
  return out;
}

SubCoalgebra equalizer_coalg(const Coalgebra& c, const Coalgebra& d,
                             const ExactMatrix& f, const ExactMatrix& g) {
  auto rf = check_coalgebra_morphism(c, d, f);
  if (!rf.empty()) throw bad_input("equalizer: f " + rf.front());
  auto rg = check_coalgebra_morphism(c, d, g);
  if (!rg.empty()) throw bad_input("equalizer: g " + rg.front());
  Subspace eq = Subspace::span_cols(kernel_basis(f - g));
  return induced_subcoalgebra(c, largest_subcoalgebra_in(c, eq));
}

Coalgebra cop(const Coalgebra& c) {
  Coalgebra out = c;
  out.delta = tensor_swap(c.dim, c.dim, c.field()) * c.delta;
  return out;
}

Coalgebra tensor_coalgebra(const Coalgebra& a, const Coalgebra& b) {
  const FieldSpec& f = a.field();
  Coalgebra out;
  out.dim = a.dim * b.dim;
  // (id (x) swap (x) id) o (delta_a (x) delta_b)
  ExactMatrix mid = kron(ExactMatrix::identity(a.dim, f),
                         kron(tensor_swap(a.dim, b.dim, f),
                              ExactMatrix::identity(b.dim, f)));
  out.delta = mid * kron(a.delta, b.delta);
  out.epsilon = kron(a.epsilon, b.epsilon);
  return out;
}

Coalgebra trivial_coalgebra(const FieldSpec& f) {
  return grouplike_coalgebra(1, f);
}

Coalgebra grouplike_coalgebra(std::size_t dim, const FieldSpec& f) {
  Coalgebra c;
  c.dim = dim;
  c.delta = ExactMatrix(dim * dim, dim, f);
  c.epsilon = ExactMatrix(1, dim, f);
  for (std::size_t i = 0; i < dim; ++i) {
    c.delta.set(i * dim + i, i, Scalar::one(f));
    c.epsilon.set(0, i, Scalar::one(f));
  }
  return c;
}

Coalgebra matrix_coalgebra(std::size_t n, const FieldSpec& f) {
  Coalgebra c;
  c.dim = n * n;
  c.delta = ExactMatrix(c.dim * c.dim, c.dim, f);
  c.epsilon = ExactMatrix(1, c.dim, f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t src = i * n + j;
      for (std::size_t k = 0; k < n; ++k)
        c.delta.set((i * n + k) * c.dim + (k * n + j), src, Scalar::one(f));
      if (i == j) c.epsilon.set(0, src, Scalar::one(f));
    }
  return c;
}

}  // namespace hopfcat
