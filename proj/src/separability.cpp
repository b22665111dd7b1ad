#include "pca/separability.hpp"

#include "pca/radical.hpp"

namespace pca {

namespace {

// m : A (x) A -> A as a dim x dim^2 matrix.
Matrix multiplication_map(const FinAlg& a) {
  const Index n = a.dim();
  Matrix m = zeros(a.field(), n, n * n);
  for (const auto& c : a.structure_constants()) m(c.k, c.i * n + c.j) = c.value;
  return m;
}

Vector one_tensor_one(const FinAlg& a) {
  const Index n = a.dim();
  Vector v = zero_vector(a.field(), n * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (!a.unit()(i).is_zero() && !a.unit()(j).is_zero()) v(i * n + j) = a.unit()(i) * a.unit()(j);
  return v;
}

// Rows of the system x -> e_i x - x e_i on A (x) A, for all i.
Matrix commutator_system(const FinAlg& a) {
  const Index n = a.dim();
  Matrix sys = zeros(a.field(), n * n * n, n * n);
  // row (i, r, s): coefficient of e_r (x) e_s in e_i p - p e_i
  for (const auto& c : a.structure_constants()) {
    // e_i e_a = v e_r contributes p_{a s}
    for (Index s = 0; s < n; ++s) sys((c.i * n + c.k) * n + s, c.j * n + s) += c.value;
    // e_b e_i = v e_s contributes -p_{r b}
    for (Index r = 0; r < n; ++r) sys((c.j * n + r) * n + c.k, r * n + c.i) -= c.value;
  }
  return sys;
}

}  // namespace

bool is_separability_idempotent(const FinAlg& a, const Vector& p) {
  const Index n = a.dim();
  if (p.rows() != n * n) return false;
  // m(p) = 1
  Vector mp = a.zero();
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (!p(x * n + y).is_zero()) mp += p(x * n + y) * a.basis_product(x, y);
  if (!equal(mp, a.unit())) return false;
  // e_i p = p e_i, computed term by term
  for (Index i = 0; i < n; ++i) {
    Vector lhs = zero_vector(a.field(), n * n), rhs = zero_vector(a.field(), n * n);
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y) {
        const Scalar& c = p(x * n + y);
        if (c.is_zero()) continue;
        const Vector& ix = a.basis_product(i, x);
        const Vector& yi = a.basis_product(y, i);
        for (Index k = 0; k < n; ++k) {
          if (!ix(k).is_zero()) lhs(k * n + y) += c * ix(k);
          if (!yi(k).is_zero()) rhs(x * n + k) += c * yi(k);
        }
      }
    if (!equal(lhs, rhs)) return false;
  }
  return true;
}

std::optional<SepIdempotent> sep_idempotent(const FinAlg& a) {
  const Index n = a.dim();
  const Field& f = a.field();
  Matrix sys = vstack(multiplication_map(a), commutator_system(a));
  Vector rhs = zero_vector(f, sys.rows());
  rhs.head(n) = a.unit();
  auto sol = solve(sys, rhs);
  if (!sol) return std::nullopt;
  Vector p = *sol;
  bind_to(p, f);
  if (!is_separability_idempotent(a, p))
    throw Error(ErrorKind::InternalVerificationFailed, "solved separability idempotent fails substitution");
  SepIdempotent out{a, p, {}};
  for (Index x = 0; x < n; ++x) {
    Vector right = a.zero();
    bool any = false;
    for (Index y = 0; y < n; ++y)
      if (!p(x * n + y).is_zero()) {
        right(y) = p(x * n + y);
        any = true;
      }
    if (any) out.as_pairs.emplace_back(a.basis_vector(x), right);
  }
  return out;
}

bool is_separable(const FinAlg& a) {
  bool sep = sep_idempotent(a).has_value();
  FieldKind g = a.field().ground().kind();
  if (g == FieldKind::Rationals || g == FieldKind::Prime) {
    if (sep != is_semisimple(a))
      throw Error(ErrorKind::TheoremViolation, "separability and semisimplicity disagree over a perfect field");
  }
  return sep;
}

bool base_change_semisimple_check(const FinAlg& a, const Field& extension) {
  return is_semisimple(base_change(a, extension));
}

std::optional<int> nilpotent_witness(const FinAlg& a, const Vector& x) {
  Vector power = x;
  bind_to(power, a.field());
  Vector base = power;
  for (int m = 1; m <= a.dim(); ++m) {
    if (is_zero(power)) return m;
    power = a.mul(power, base);
  }
  return std::nullopt;
}

// Bimodules ----------------------------------------------------------------------

Bimodule Bimodule::make(FinAlg algebra, Index space_dim, std::vector<Matrix> left, std::vector<Matrix> right) {
  const Index n = algebra.dim();
  const Field& f = algebra.field();
  auto bad = [](const std::string& what) { return Error(ErrorKind::NotABimodule, what); };
  if (static_cast<Index>(left.size()) != n || static_cast<Index>(right.size()) != n)
    throw bad("one action matrix per basis element is required");
  for (auto* side : {&left, &right})
    for (auto& m : *side) {
      if (m.rows() != space_dim || m.cols() != space_dim) throw bad("action matrix has the wrong shape");
      bind_to(m, f);
    }
  Bimodule t(algebra, space_dim, std::move(left), std::move(right));
  Matrix id = identity(f, space_dim);
  if (!equal(t.left_of(algebra.unit()), id)) throw bad("1 does not act as the identity on the left");
  if (!equal(t.right_of(algebra.unit()), id)) throw bad("1 does not act as the identity on the right");
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Vector& ij = algebra.basis_product(i, j);
      std::string where = " for (" + algebra.labels()[static_cast<std::size_t>(i)] + ", " +
                          algebra.labels()[static_cast<std::size_t>(j)] + ")";
      if (!equal(t.left_of(ij), product(t.left(i), t.left(j)))) throw bad("left action is not multiplicative" + where);
      if (!equal(t.right_of(ij), product(t.right(j), t.right(i)))) throw bad("right action is not multiplicative" + where);
      if (!equal(product(t.left(i), t.right(j)), product(t.right(j), t.left(i))))
        throw bad("left and right actions do not commute" + where);
    }
  return t;
}

Matrix Bimodule::left_of(const Vector& b) const {
  Matrix m = zeros(algebra_.field(), dim_, dim_);
  for (Index i = 0; i < b.rows(); ++i)
    if (!b(i).is_zero()) m += b(i) * left(i);
  return m;
}

Matrix Bimodule::right_of(const Vector& b) const {
  Matrix m = zeros(algebra_.field(), dim_, dim_);
  for (Index i = 0; i < b.rows(); ++i)
    if (!b(i).is_zero()) m += b(i) * right(i);
  return m;
}

const char* to_string(InnerRoute r) {
  switch (r) {
    case InnerRoute::ClosedForm:
      return "closed_form";
    case InnerRoute::NegatedClosedForm:
      return "negated_closed_form";
    case InnerRoute::LinearSolve:
      return "linear_solve";
  }
  return "?";
}

std::optional<InnerWitness> inner_derivation(const Bimodule& t, const Matrix& d_in, const SepIdempotent* p) {
  const FinAlg& b = t.algebra();
  const Index n = b.dim();
  const Field& f = b.field();
  if (d_in.rows() != t.space_dim() || d_in.cols() != n)
    throw Error(ErrorKind::BadSpec, "derivation matrix has the wrong shape");
  Matrix d = d_in;
  bind_to(d, f);
  // d(e_i e_j) = e_i.d(e_j) + d(e_i).e_j
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      Vector lhs = apply(d, b.basis_product(i, j));
      Vector rhs = apply(t.left(i), Vector(d.col(j))) + apply(t.right(j), Vector(d.col(i)));
      if (!equal(lhs, rhs))
        throw Error(ErrorKind::NotADerivation, "d(ab) != a.d(b) + d(a).b for (" + b.labels()[static_cast<std::size_t>(i)] +
                                                   ", " + b.labels()[static_cast<std::size_t>(j)] + ")");
    }
  auto works = [&](const Vector& u) {
    for (Index j = 0; j < n; ++j)
      if (!equal(Vector(apply(t.left(j), u) - apply(t.right(j), u)), Vector(d.col(j)))) return false;
    return true;
  };
  if (p) {
    if (!p->algebra.same_table(b)) throw Error(ErrorKind::AmbientMismatch, "separability idempotent of another algebra");
    Vector u = zero_vector(f, t.space_dim());
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y) {
        const Scalar& c = p->tensor_coeffs(x * n + y);
        if (!c.is_zero()) u += c * apply(t.right(y), Vector(d.col(x)));
      }
    if (works(u)) return InnerWitness{u, InnerRoute::ClosedForm};
    Vector neg = -u;
    if (works(neg)) return InnerWitness{neg, InnerRoute::NegatedClosedForm};
  }
  Matrix sys = zeros(f, n * t.space_dim(), t.space_dim());
  Vector rhs = zero_vector(f, n * t.space_dim());
  for (Index j = 0; j < n; ++j) {
    sys.block(j * t.space_dim(), 0, t.space_dim(), t.space_dim()) = t.left(j) - t.right(j);
    rhs.segment(j * t.space_dim(), t.space_dim()) = d.col(j);
  }
  auto sol = solve(sys, rhs);
  if (!sol) return std::nullopt;
  Vector u = *sol;
  bind_to(u, f);
  if (!works(u)) throw Error(ErrorKind::InternalVerificationFailed, "inner derivation witness fails its equation");
  return InnerWitness{u, InnerRoute::LinearSolve};
}

UniversalDerivation universal_derivation_check(const FinAlg& a) {
  const Index n = a.dim();
  const Field& f = a.field();
  Subspace k = Subspace::span(f, n * n, nullspace(multiplication_map(a)));
  const Index kd = k.dim();
  const auto& piv = k.pivots();
  auto coords = [&](const Vector& v) {
    Vector c(kd);
    for (Index t = 0; t < kd; ++t) c(t) = v(piv[static_cast<std::size_t>(t)]);
    return c;
  };
  auto basis = k.basis_vectors();
  std::vector<Matrix> left, right;
  for (Index i = 0; i < n; ++i) {
    Matrix l = zeros(f, kd, kd), r = zeros(f, kd, kd);
    for (Index t = 0; t < kd; ++t) {
      const Vector& v = basis[static_cast<std::size_t>(t)];
      Vector lv = zero_vector(f, n * n), rv = zero_vector(f, n * n);
      for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y) {
          const Scalar& c = v(x * n + y);
          if (c.is_zero()) continue;
          const Vector& ix = a.basis_product(i, x);
          const Vector& yi = a.basis_product(y, i);
          for (Index z = 0; z < n; ++z) {
            if (!ix(z).is_zero()) lv(z * n + y) += c * ix(z);
            if (!yi(z).is_zero()) rv(x * n + z) += c * yi(z);
          }
        }
      l.col(t) = coords(lv);
      r.col(t) = coords(rv);
    }
    left.push_back(std::move(l));
    right.push_back(std::move(r));
  }
  Bimodule km = Bimodule::make(a, kd, std::move(left), std::move(right));

  // f(e_j) = 1 (x) e_j - e_j (x) 1
  Matrix d = zeros(f, kd, n);
  for (Index j = 0; j < n; ++j) {
    Vector v = zero_vector(f, n * n);
    for (Index u = 0; u < n; ++u) {
      if (a.unit()(u).is_zero()) continue;
      v(u * n + j) += a.unit()(u);
      v(j * n + u) -= a.unit()(u);
    }
    if (!k.contains(v)) throw Error(ErrorKind::InternalVerificationFailed, "f(a) is not in Ker(m)");
    d.col(j) = coords(v);
  }
  auto w = inner_derivation(km, d);
  if (!w) return {false, std::nullopt, std::nullopt};
  Vector u = zero_vector(f, n * n);
  for (Index t = 0; t < kd; ++t)
    if (!w->element(t).is_zero()) u += w->element(t) * basis[static_cast<std::size_t>(t)];
  Vector one = one_tensor_one(a);
  for (const Vector& cand : {Vector(one + u), Vector(one - u)})
    if (is_separability_idempotent(a, cand)) return {true, u, cand};
  return {false, u, std::nullopt};
}

}  // namespace pca
