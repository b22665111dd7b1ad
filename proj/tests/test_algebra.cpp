#include <doctest.h>

#include "corpus.hpp"

using namespace pca;
using corpus::vec;

namespace {

// Exhaustive re-check of the defining laws, independent of FinAlg::make.
bool laws_hold(const FinAlg& a) {
  for (Index i = 0; i < a.dim(); ++i) {
    Vector e = a.basis_vector(i);
    if (!equal(a.mul(a.unit(), e), e) || !equal(a.mul(e, a.unit()), e)) return false;
    for (Index j = 0; j < a.dim(); ++j)
      for (Index k = 0; k < a.dim(); ++k)
        if (!equal(a.mul(a.mul(e, a.basis_vector(j)), a.basis_vector(k)), a.mul(e, a.mul(a.basis_vector(j), a.basis_vector(k)))))
          return false;
  }
  return true;
}

bool same_constants(const FinAlg& a, const FinAlg& b) { return a.same_table(b); }

}  // namespace

TEST_CASE("upper triangular 2x2") {
  FinAlg t2 = upper_triangular(2, Field::rationals());
  CHECK(t2.dim() == 3);
  CHECK(t2.labels() == std::vector<std::string>{"E11", "E12", "E22"});
  CHECK(laws_hold(t2));
}

TEST_CASE("invalid tables are rejected") {
  Field q = Field::rationals();
  // e0 e0 = e1 and nothing else: no unit
  try {
    FinAlg::make(q, {"e0", "e1"}, {{0, 0, 1, q.one()}});
    FAIL("expected NoUnit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoUnit);
  }
  // imaginary quaternion-like table without signs: i j = k, j i = k, ... is fine; use
  // a Cayley-Dickson fragment that is not associative: (i j) j != i (j j)
  std::vector<StructureConstant> oct{{0, 0, 0, q.one()}, {0, 1, 1, q.one()}, {1, 0, 1, q.one()}, {0, 2, 2, q.one()},
                                     {2, 0, 2, q.one()}, {1, 1, 0, q.from_int(-1)}, {2, 2, 0, q.from_int(-1)},
                                     {1, 2, 1, q.one()}, {2, 1, 2, q.one()}};
  try {
    FinAlg::make(q, {"1", "i", "j"}, oct);
    FAIL("expected NotAssociative");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAssociative);
    CHECK(std::string(e.what()).find("(") != std::string::npos);
  }
  CHECK_THROWS_AS(FinAlg::make(q, {"e0"}, {{0, 0, 3, q.one()}}), Error);
}

TEST_CASE("group algebras") {
  Field q = Field::rationals();
  FinAlg c3 = group_algebra(3, q);
  CHECK(c3.dim() == 3);
  CHECK(c3.is_commutative());
  FinAlg c1 = group_algebra(1, Field::prime(2));
  CHECK(c1.dim() == 1);
  Field f2 = Field::prime(2);
  FinAlg c2 = group_algebra(2, f2);
  Vector x = vec(f2, {1, 1});
  CHECK(is_zero(c2.mul(x, x)));
}

TEST_CASE("matrix algebras, products, opposites") {
  Field f3 = Field::prime(3);
  FinAlg m2 = matrix_algebra(2, f3);
  CHECK(m2.dim() == 4);
  CHECK(equal(m2.unit(), vec(f3, {1, 0, 0, 1})));
  CHECK(laws_hold(m2));

  Field q = Field::rationals();
  FinAlg k = matrix_algebra(1, q);
  FinAlg qq = direct_product({k, k});
  CHECK(qq.dim() == 2);
  CHECK(qq.is_commutative());
  CHECK(equal(qq.unit(), vec(q, {1, 1})));
  CHECK_THROWS_AS(direct_product({k, matrix_algebra(1, f3)}), Error);

  FinAlg t2 = upper_triangular(2, q);
  FinAlg op = opposite(t2);
  // in T2^op, E12 * E11 = E12 (the transpose of E11 E12 = E12)
  CHECK(equal(op.mul(op.basis_vector(1), op.basis_vector(0)), op.basis_vector(1)));
  CHECK(is_zero(op.mul(op.basis_vector(0), op.basis_vector(1))));
  CHECK(same_constants(opposite(op), t2));
}

TEST_CASE("tensor products") {
  Field q = Field::rationals();
  FinAlg k = matrix_algebra(1, q);
  FinAlg t2 = upper_triangular(2, q);
  FinAlg kt = tensor(k, t2);
  CHECK(kt.dim() == 3);
  std::vector<StructureConstant> a = kt.structure_constants(), b = t2.structure_constants();
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK((a[i].i == b[i].i && a[i].j == b[i].j && a[i].k == b[i].k && a[i].value == b[i].value));
  FinAlg tc = tensor(t2, group_algebra(2, q));
  CHECK(tc.dim() == 6);
  CHECK(tc.labels()[1] == "E11⊗g");
  CHECK(laws_hold(tc));

  // (A ⊗ B) ⊗ C and A ⊗ (B ⊗ C) agree on the same index order
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 4; ++trial) {
    Field f = trial % 2 ? Field::prime(3) : q;
    FinAlg x = corpus::random_algebra(f, rng, 3, true);
    FinAlg y = corpus::random_algebra(f, rng, 3, false);
    FinAlg z = corpus::random_algebra(f, rng, 3, true);
    CHECK(tensor(tensor(x, y), z).same_table(tensor(x, tensor(y, z))));
  }
}

TEST_CASE("inseparable tensor square has a nilpotent") {
  Field ft = Field::rational_functions(2);
  FinAlg e = polynomial_quotient(Polynomial(ft, {ft.generator(), ft.zero(), ft.one()}));
  FinAlg ee = tensor(e, e);
  Vector x = ee.basis_vector(2) + ee.basis_vector(1);  // alpha⊗1 + 1⊗alpha
  CHECK_FALSE(is_zero(x));
  CHECK(is_zero(ee.mul(x, x)));
}

TEST_CASE("base change") {
  Field q = Field::rationals();
  FinAlg c3 = group_algebra(3, q);
  CHECK(base_change(c3, q).same_table(c3));
  Field e = Field::extension(q, {q.one(), q.one(), q.one()});
  FinAlg ce = base_change(c3, e);
  CHECK(ce.field() == e);
  CHECK(ce.dim() == 3);
  CHECK(laws_hold(ce));
  CHECK_THROWS_AS(base_change(c3, Field::prime(2)), Error);
}

TEST_CASE("restriction of scalars") {
  Field f2 = Field::prime(2);
  Field f4 = Field::extension(f2, {f2.one(), f2.one(), f2.one()});
  FinAlg m = matrix_algebra(2, f4);
  FinAlg r = restrict_scalars(m, f2);
  CHECK(r.dim() == 8);
  CHECK(laws_hold(r));
  Vector v = zero_vector(f2, 8);
  v(1) = f2.one();  // E11 * a
  Vector back = unrestrict_vector(m, f2, v);
  CHECK(back(0) == f4.generator());
}

TEST_CASE("ideal closure") {
  Field q = Field::rationals();
  FinAlg t2 = upper_triangular(2, q);
  CHECK(ideal_closure(t2, {t2.unit()}, Side::TwoSided).dim() == 3);
  Ideal j = ideal_closure(t2, {t2.basis_vector(1)}, Side::TwoSided);
  CHECK(j.space() == Subspace::span(q, 3, std::vector<Vector>{t2.basis_vector(1)}));
  FinAlg x4 = truncated_polynomial(4, q);
  Ideal xi = ideal_closure(x4, {x4.basis_vector(1)}, Side::TwoSided);
  CHECK(xi.space() == Subspace::span(q, 4, std::vector<Vector>{x4.basis_vector(1), x4.basis_vector(2), x4.basis_vector(3)}));
  // left ideal generated by E11 in T2 is span{E11}; the right one is span{E11, E12}
  CHECK(ideal_closure(t2, {t2.basis_vector(0)}, Side::Left).dim() == 1);
  CHECK(ideal_closure(t2, {t2.basis_vector(0)}, Side::Right).dim() == 2);
  CHECK_THROWS_AS(Ideal::make(t2, Subspace::span(q, 3, std::vector<Vector>{t2.basis_vector(0)}), Side::TwoSided), Error);
}

TEST_CASE("quotients") {
  Field q = Field::rationals();
  FinAlg x4 = truncated_polynomial(4, q);
  Ideal zero = Ideal::make(x4, Subspace(q, 4), Side::TwoSided);
  Quotient same = quotient(x4, zero);
  CHECK(same.algebra.same_table(x4));
  CHECK(equal(same.projection.matrix(), identity(q, 4)));

  Ideal x2 = ideal_closure(x4, {x4.basis_vector(2)}, Side::TwoSided);
  Quotient r = quotient(x4, x2);
  CHECK(r.algebra.same_table(truncated_polynomial(2, q)));
  CHECK(equal(r.projection.apply(x4.basis_vector(1)), r.algebra.basis_vector(1)));
  CHECK(r.projection.kernel() == x2);

  FinAlg t2 = upper_triangular(2, q);
  Quotient d = quotient(t2, ideal_closure(t2, {t2.basis_vector(1)}, Side::TwoSided));
  CHECK(d.algebra.same_table(direct_product({matrix_algebra(1, q), matrix_algebra(1, q)})));
  CHECK_THROWS_AS(quotient(t2, ideal_closure(t2, {t2.unit()}, Side::TwoSided)), Error);

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    Field f = trial % 2 ? Field::prime(2) : q;
    FinAlg a = corpus::random_algebra(f, rng, 5, true);
    Vector g = zero_vector(f, a.dim());
    for (Index i = 0; i < a.dim(); ++i) g(i) = corpus::rnd(f, rng);
    Ideal i = ideal_closure(a, {g}, Side::TwoSided);
    if (!i.is_proper()) continue;
    Quotient qa = quotient(a, i);
    CHECK(qa.projection.kernel() == i);
    CHECK(qa.projection.is_surjective());
  }
}

TEST_CASE("homomorphisms") {
  Field q = Field::rationals();
  FinAlg t2 = upper_triangular(2, q);
  AlgHom id = hom_check(identity(q, 3), t2, t2);
  CHECK(id.is_surjective());
  CHECK(id.kernel().dim() == 0);

  FinAlg c2 = group_algebra(2, q);
  FinAlg k = matrix_algebra(1, q);
  Matrix aug(1, 2);
  aug << q.one(), q.one();
  AlgHom e = hom_check(aug, c2, k);
  CHECK(e.is_surjective());
  CHECK(e.kernel().space() == Subspace::span(q, 2, std::vector<Vector>{vec(q, {1, -1})}));
  Matrix bad(1, 2);
  bad << q.one(), q.from_int(2);
  CHECK_THROWS_AS(hom_check(bad, c2, k), Error);

  Field f2 = Field::prime(2);
  FinAlg c2f = group_algebra(2, f2);
  FinAlg kf = matrix_algebra(1, f2);
  Matrix plus(1, 2), minus(1, 2);
  plus << f2.one(), f2.one();
  minus << f2.one(), f2.from_int(-1);
  AlgHom hp = hom_check(plus, c2f, kf), hm = hom_check(minus, c2f, kf);
  CHECK(equal(hp.matrix(), hm.matrix()));
  CHECK(hm.kernel().space() == Subspace::span(f2, 2, std::vector<Vector>{vec(f2, {1, 1})}));
}

TEST_CASE("random algebras satisfy the laws") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    Field f = trial % 3 == 0 ? Field::rationals() : Field::prime(trial % 3 == 1 ? 2 : 3);
    FinAlg a = corpus::random_algebra(f, rng, 6, trial % 2 == 0);
    CHECK(laws_hold(a));
    CHECK(same_constants(opposite(opposite(a)), a));
  }
}

TEST_CASE("minimal polynomials") {
  Field q = Field::rationals();
  FinAlg c3 = group_algebra(3, q);
  CHECK(minimal_polynomial(c3, c3.basis_vector(1)) == corpus::poly(q, {-1, 0, 0, 1}));
  FinAlg x4 = truncated_polynomial(4, q);
  CHECK(minimal_polynomial(x4, x4.basis_vector(1)) == corpus::poly(q, {0, 0, 0, 0, 1}));
  Polynomial m = corpus::poly(q, {2, -3, 1});
  Vector x = c3.basis_vector(1);
  CHECK(equal(evaluate(c3, m, x, c3.unit()), c3.mul(x, x) - 3 * x + 2 * c3.unit()));
}
