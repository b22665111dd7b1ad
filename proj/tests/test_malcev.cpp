#include <doctest.h>

#include "corpus.hpp"
#include "pca/malcev.hpp"
#include "pca/radical.hpp"
#include "pca/wedderburn.hpp"

using namespace pca;
using corpus::vec;

namespace {

void check_splitting(const Splitting& s) {
  const FinAlg& a = s.algebra;
  const FinAlg& q = s.quotient.algebra;
  CHECK(equal(product(s.quotient.projection.matrix(), s.section.matrix()), identity(a.field(), q.dim())));
  CHECK(s.image.dim() + s.radical.dim() == a.dim());
  CHECK(s.image.intersect(s.radical.space()).is_zero());
  for (Index x = 0; x < q.dim(); ++x)
    for (Index y = 0; y < q.dim(); ++y)
      CHECK(equal(s.section.apply(q.basis_product(x, y)),
                  a.mul(s.section.apply(q.basis_vector(x)), s.section.apply(q.basis_vector(y)))));
  CHECK(equal(s.section.apply(q.unit()), a.unit()));
}

// Two-sided ideals generated by each subset of the basis.
std::vector<Ideal> basis_ideals(const FinAlg& a) {
  std::vector<Ideal> out;
  for (unsigned mask = 0; mask < (1u << a.dim()); ++mask) {
    std::vector<Vector> gens;
    for (Index i = 0; i < a.dim(); ++i)
      if (mask & (1u << i)) gens.push_back(a.basis_vector(i));
    out.push_back(ideal_closure(a, gens, Side::TwoSided));
  }
  return out;
}

void check_conjugator(const Splitting& s1, const Splitting& s2) {
  Conjugator c = malcev_conjugator(s1, s2);
  const FinAlg& a = s1.algebra;
  CHECK(s1.radical.space().contains(c.omega));
  Vector g = a.unit() - c.omega;
  CHECK(equal(a.mul(g, c.inverse), a.unit()));
  for (Index x = 0; x < s1.quotient.algebra.dim(); ++x) {
    Vector b = s1.quotient.algebra.basis_vector(x);
    CHECK(equal(a.mul(s1.section.apply(b), g), a.mul(g, s2.section.apply(b))));
  }
}

}  // namespace

TEST_CASE("lift_idempotent examples") {
  Field q = Field::rationals();
  FinAlg dual = truncated_polynomial(2, q);
  IdempotentLift l = lift_idempotent(dual, vec(q, {1, 1}));
  CHECK(equal(l.idempotent, dual.unit()));
  CHECK(l.iterations == 1);

  FinAlg t2 = upper_triangular(2, q);
  IdempotentLift e = lift_idempotent(t2, vec(q, {1, 1, 0}));
  CHECK(equal(e.idempotent, vec(q, {1, 1, 0})));
  CHECK(e.iterations == 0);
  CHECK_THROWS_AS(lift_idempotent(t2, vec(q, {2, 0, 0})), Error);
  try {
    lift_idempotent(t2, vec(q, {2, 0, 0}));
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::NotIdempotentModJ);
  }
}

TEST_CASE("lift_idempotent on random idempotents perturbed by J") {
  std::mt19937_64 rng(11);
  for (const Field& f : {Field::rationals(), Field::prime(2), Field::prime(3)}) {
    for (int trial = 0; trial < 15; ++trial) {
      FinAlg a = corpus::random_algebra(f, rng, 6, true);
      RadicalResult r = radical(a);
      Splitting s = wedderburn_splitting(a);
      // an idempotent of A/J pushed into A, then moved by a random element of J
      auto d = central_idempotents(s.quotient.algebra);
      for (const auto& e : d.idempotents) {
        Vector f0 = s.section.apply(e);
        for (Index t = 0; t < r.radical.dim(); ++t) f0 += corpus::rnd(f, rng) * r.radical.space().basis_vector(t);
        IdempotentLift l = lift_idempotent(a, f0);
        CHECK(equal(a.mul(l.idempotent, l.idempotent), l.idempotent));
        CHECK(r.radical.space().contains(Vector(l.idempotent - f0)));
        int bound = 1;
        while ((1 << (bound - 1)) < std::max(r.nilpotency_index, 1)) ++bound;
        CHECK(l.iterations <= bound);
      }
    }
  }
}

TEST_CASE("splitting examples") {
  Field q = Field::rationals();
  FinAlg m2 = matrix_algebra(2, q);
  Splitting sm = wedderburn_splitting(m2);
  CHECK(sm.image.is_whole());
  CHECK(sm.section.is_injective());

  FinAlg t2 = upper_triangular(2, q);
  Splitting st = wedderburn_splitting(t2);
  check_splitting(st);
  CHECK(st.image.dim() == 2);
  CHECK(st.radical.space() == Subspace::span(q, 3, std::vector<Vector>{vec(q, {0, 1, 0})}));

  Field f2 = Field::prime(2);
  FinAlg d = truncated_polynomial(2, f2);
  Splitting sd = wedderburn_splitting(d);
  CHECK(sd.image == Subspace::span(f2, 2, std::vector<Vector>{vec(f2, {1, 0})}));
}

TEST_CASE("splitting corpus with ideal lemma") {
  std::vector<FinAlg> corpus;
  for (const Field& f : {Field::rationals(), Field::prime(2), Field::prime(3)}) {
    corpus.push_back(upper_triangular(2, f));
    corpus.push_back(upper_triangular(3, f));
    for (std::size_t n = 1; n <= 5; ++n) corpus.push_back(truncated_polynomial(n, f));
  }
  Field f2 = Field::prime(2);
  corpus.push_back(group_algebra(2, f2));
  corpus.push_back(group_algebra(4, f2));
  corpus.push_back(group_algebra(6, f2));
  corpus.push_back(group_algebra(3, Field::prime(3)));
  for (const auto& a : corpus) {
    Splitting s = wedderburn_splitting(a);
    check_splitting(s);
    if (a.dim() <= 6)
      for (const auto& i : basis_ideals(a)) CHECK(check_ideal_lemma(s, i));
  }
}

TEST_CASE("seeded splittings are conjugate") {
  std::mt19937_64 rng(5);
  int differing = 0;
  for (const Field& f : {Field::rationals(), Field::prime(2), Field::prime(3), Field::prime(5)}) {
    for (int trial = 0; trial < 12; ++trial) {
      FinAlg a = corpus::random_algebra(f, rng, 6, true);
      Splitting s0 = wedderburn_splitting(a);
      Splitting s1 = wedderburn_splitting(a, 1 + static_cast<std::uint64_t>(trial));
      check_splitting(s1);
      if (!(s0.image == s1.image)) ++differing;
      check_conjugator(s1, s0);
      check_conjugator(s0, s1);
      check_conjugator(s0, s0);
    }
  }
  CHECK(differing > 0);
}

TEST_CASE("conjugator on T_2") {
  Field q = Field::rationals();
  FinAlg t2 = upper_triangular(2, q);
  Splitting diag = wedderburn_splitting(t2);
  REQUIRE(diag.image == Subspace::span(q, 3, std::vector<Vector>{vec(q, {1, 0, 0}), vec(q, {0, 0, 1})}));
  Matrix sec(3, 2);
  sec.col(0) = vec(q, {1, 1, 0});
  sec.col(1) = vec(q, {0, -1, 1});
  Splitting other = make_splitting(t2, sec);
  Conjugator c = malcev_conjugator(other, diag);
  // (E11 + E12)(1 - w) = (1 - w) E11 forces w = E12
  CHECK(equal(c.omega, vec(q, {0, 1, 0})));
  check_conjugator(other, diag);
  Conjugator z = malcev_conjugator(diag, diag);
  CHECK(is_zero(z.omega));

  Matrix bad(3, 2);
  bad.col(0) = vec(q, {1, 1, 0});
  bad.col(1) = vec(q, {0, 0, 1});
  CHECK_THROWS_AS(make_splitting(t2, bad), Error);
}

TEST_CASE("semisimple algebras split trivially") {
  Field f3 = Field::prime(3);
  FinAlg a = direct_product({matrix_algebra(2, f3), group_algebra(2, f3)});
  Splitting s = wedderburn_splitting(a);
  CHECK(s.image.is_whole());
  Splitting s2 = wedderburn_splitting(a, 9);
  CHECK(is_zero(malcev_conjugator(s, s2).omega));
}
