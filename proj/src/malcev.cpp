#include "pca/malcev.hpp"

#include <random>

#include "pca/radical.hpp"

namespace pca {

IdempotentLift lift_idempotent(const FinAlg& a, const Vector& f_in) {
  Vector e = f_in;
  if (e.rows() != a.dim()) throw Error(ErrorKind::AmbientMismatch, "element has the wrong length");
  bind_to(e, a.field());
  RadicalResult r = radical(a);
  if (!r.radical.space().contains(Vector(a.mul(e, e) - e)))
    throw Error(ErrorKind::NotIdempotentModJ, "f^2 - f is not in J(A)");
  int bound = 1;
  while ((1 << (bound - 1)) < std::max(r.nilpotency_index, 1)) ++bound;  // ceil(log2 m) + 1
  int iterations = 0;
  const Scalar three = a.field().from_int(3), two = a.field().from_int(2);
  while (!equal(a.mul(e, e), e)) {
    if (iterations >= bound) throw Error(ErrorKind::InternalVerificationFailed, "idempotent lifting did not converge");
    Vector e2 = a.mul(e, e);
    e = three * e2 - two * a.mul(e2, e);
    ++iterations;
  }
  return {e, iterations};
}

namespace {

// Coordinates in A/K for a subspace K (identity when K = 0).
Matrix projection_onto(const Subspace& k) { return k.quotient_map(); }

Splitting finish(const FinAlg& a, const RadicalResult& r, const Quotient& q, const Matrix& sigma) {
  AlgHom section = [&] {
    try {
      return AlgHom::make(sigma, q.algebra, a);
    } catch (const Error& e) {
      throw Error(ErrorKind::InternalVerificationFailed, std::string("section is not an algebra map: ") + e.what());
    }
  }();
  const Field& f = a.field();
  if (!equal(product(q.projection.matrix(), sigma), identity(f, q.algebra.dim())))
    throw Error(ErrorKind::InternalVerificationFailed, "pi o s is not the identity");
  std::vector<Vector> cols;
  for (Index i = 0; i < sigma.cols(); ++i) cols.push_back(sigma.col(i));
  Subspace s = Subspace::span(f, a.dim(), cols);
  if (!s.intersect(r.radical.space()).is_zero() || !(s + r.radical.space()).is_whole())
    throw Error(ErrorKind::InternalVerificationFailed, "S and J are not complementary");
  return Splitting{a, r.radical, q, section, s};
}

bool multiplicative_mod(const FinAlg& q, const FinAlg& a, const Matrix& sigma, const Matrix& proj) {
  for (Index x = 0; x < q.dim(); ++x)
    for (Index y = 0; y < q.dim(); ++y) {
      Vector lhs = apply(sigma, q.basis_product(x, y));
      Vector rhs = a.mul(sigma.col(x), sigma.col(y));
      if (!is_zero(apply(proj, Vector(lhs - rhs)))) return false;
    }
  return true;
}

}  // namespace

Splitting wedderburn_splitting(const FinAlg& a, std::uint64_t seed) {
  const Field& f = a.field();
  RadicalResult r = radical(a);
  Quotient q = quotient(a, r.radical);
  const FinAlg& qa = q.algebra;
  if (!is_separable(qa)) throw Error(ErrorKind::NotSeparableQuotient, "A/J(A) is not separable");
  const Index n = a.dim(), m = qa.dim();

  Matrix sigma = q.lift;
  if (seed != 0 && !r.radical.space().is_zero()) {
    std::mt19937_64 rng(seed);
    for (Index x = 0; x < m; ++x)
      for (Index t = 0; t < r.radical.dim(); ++t) {
        Scalar c = random_scalar(f, rng, 2);
        if (!c.is_zero()) sigma.col(x) += c * r.radical.space().basis_vector(t);
      }
  }

  const auto& layers = r.filtration;  // J, J^2, ..., 0
  for (std::size_t k = 0; k + 1 < layers.size(); ++k) {
    const Subspace& jk = layers[k].space();
    const Subspace& next = layers[k + 1].space();
    Matrix proj = projection_onto(next);
    if (multiplicative_mod(qa, a, sigma, proj)) continue;
    const Index rd = jk.dim(), pd = proj.rows();
    // unknown h(e_x) = sum_t h[x, t] b_t, b_t the basis of J^k
    Matrix sys = zeros(f, m * m * pd, m * rd);
    Vector rhs = zero_vector(f, m * m * pd);
    std::vector<Vector> pb;  // projected basis of J^k
    for (Index t = 0; t < rd; ++t) pb.push_back(apply(proj, jk.basis_vector(t)));
    for (Index x = 0; x < m; ++x)
      for (Index y = 0; y < m; ++y) {
        Index row = (x * m + y) * pd;
        Vector sx = sigma.col(x), sy = sigma.col(y);
        Vector defect = apply(sigma, qa.basis_product(x, y)) - a.mul(sx, sy);
        rhs.segment(row, pd) = apply(proj, defect);
        for (Index t = 0; t < rd; ++t) {
          Vector bt = jk.basis_vector(t);
          // sigma(x) h(y)
          sys.block(row, y * rd + t, pd, 1) += apply(proj, a.mul(sx, bt));
          // h(x) sigma(y)
          sys.block(row, x * rd + t, pd, 1) += apply(proj, a.mul(bt, sy));
          // - h(xy)
          const Vector& xy = qa.basis_product(x, y);
          for (Index z = 0; z < m; ++z)
            if (!xy(z).is_zero()) sys.block(row, z * rd + t, pd, 1) -= xy(z) * pb[static_cast<std::size_t>(t)];
        }
      }
    auto sol = solve(sys, rhs);
    if (!sol) throw Error(ErrorKind::CoboundaryUnsolvable, "no correction through J^" + std::to_string(k + 1));
    Matrix h = zeros(f, n, m);
    for (Index x = 0; x < m; ++x)
      for (Index t = 0; t < rd; ++t)
        if (!(*sol)(x * rd + t).is_zero()) h.col(x) += (*sol)(x * rd + t) * jk.basis_vector(t);
    Matrix plus = sigma + h, minus = sigma - h;
    if (multiplicative_mod(qa, a, plus, proj)) {
      sigma = plus;
    } else if (multiplicative_mod(qa, a, minus, proj)) {
      sigma = minus;
    } else {
      throw Error(ErrorKind::CoboundaryUnsolvable, "correction through J^" + std::to_string(k + 1) + " is not multiplicative");
    }
  }
  return finish(a, r, q, sigma);
}

Splitting make_splitting(const FinAlg& a, const Matrix& section) {
  RadicalResult r = radical(a);
  Quotient q = quotient(a, r.radical);
  if (section.rows() != a.dim() || section.cols() != q.algebra.dim())
    throw Error(ErrorKind::BadSpec, "section matrix has the wrong shape");
  Matrix s = section;
  bind_to(s, a.field());
  return finish(a, r, q, s);
}

bool check_ideal_lemma(const Splitting& s, const Ideal& i) {
  if (i.side() != Side::TwoSided) throw Error(ErrorKind::NotAnIdeal, "the ideal lemma concerns two-sided ideals");
  Subspace image = s.quotient.projection.image(i.space());
  for (Index t = 0; t < image.dim(); ++t)
    if (!i.space().contains(s.section.apply(image.basis_vector(t)))) return false;
  return true;
}

Conjugator malcev_conjugator(const Splitting& s1, const Splitting& s2) {
  const FinAlg& a = s1.algebra;
  if (!a.same_table(s2.algebra)) throw Error(ErrorKind::AmbientMismatch, "splittings of different algebras");
  const Field& f = a.field();
  const FinAlg& b = s1.quotient.algebra;
  const Subspace& j = s1.radical.space();
  const Index r = j.dim(), m = b.dim();

  std::vector<Matrix> left, right;
  for (Index x = 0; x < m; ++x) {
    Vector u1 = s1.section.apply(b.basis_vector(x)), u2 = s2.section.apply(b.basis_vector(x));
    Matrix l = zeros(f, r, r), rr = zeros(f, r, r);
    for (Index t = 0; t < r; ++t) {
      Vector bt = j.basis_vector(t);
      l.col(t) = j.coordinates(a.mul(u1, bt));
      rr.col(t) = j.coordinates(a.mul(bt, u2));
    }
    left.push_back(std::move(l));
    right.push_back(std::move(rr));
  }
  Bimodule t = Bimodule::make(b, r, std::move(left), std::move(right));
  Matrix d = zeros(f, r, m);
  for (Index x = 0; x < m; ++x) {
    Vector diff = s1.section.apply(b.basis_vector(x)) - s2.section.apply(b.basis_vector(x));
    if (!j.contains(diff)) throw Error(ErrorKind::InternalVerificationFailed, "s1 - s2 does not land in J");
    d.col(x) = j.coordinates(diff);
  }
  auto p = sep_idempotent(b);
  if (!p) throw Error(ErrorKind::NotSeparableQuotient, "A/J(A) is not separable");
  auto w = inner_derivation(t, d, &*p);
  if (!w) throw Error(ErrorKind::TheoremViolation, "s1 - s2 is not an inner derivation");

  Vector omega = a.zero();
  for (Index k = 0; k < r; ++k)
    if (!w->element(k).is_zero()) omega += w->element(k) * j.basis_vector(k);
  Vector g = a.unit() - omega;
  auto inv = solve(a.left_mul(g), a.unit());
  if (!inv || !equal(a.mul(*inv, g), a.unit())) throw Error(ErrorKind::TheoremViolation, "1 - omega is not invertible");
  for (Index x = 0; x < m; ++x) {
    Vector conj = a.mul(a.mul(g, s2.section.apply(b.basis_vector(x))), *inv);
    if (!equal(conj, s1.section.apply(b.basis_vector(x))))
      throw Error(ErrorKind::TheoremViolation, "conjugation does not carry S2 onto S1");
  }
  return {omega, *inv, w->route};
}

}  // namespace pca
