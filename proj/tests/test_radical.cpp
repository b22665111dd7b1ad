#include <doctest.h>

#include "corpus.hpp"
#include "pca/radical.hpp"

using namespace pca;
using corpus::vec;

namespace {

Subspace span1(const Field& f, const Vector& v) { return Subspace::span(f, v.rows(), std::vector<Vector>{v}); }

}  // namespace

TEST_CASE("radical examples") {
  Field f2 = Field::prime(2);
  FinAlg c2 = group_algebra(2, f2);
  RadicalResult r = radical(c2);
  CHECK(r.radical.space() == span1(f2, vec(f2, {1, 1})));
  CHECK(r.nilpotency_index == 2);
  CHECK(r.verified);
  CHECK(r.filtration.size() == 2);

  Field f3 = Field::prime(3);
  RadicalResult m = radical(matrix_algebra(2, f3));
  CHECK(m.radical.dim() == 0);
  CHECK(m.nilpotency_index == 0);

  Field q = Field::rationals();
  FinAlg t2 = upper_triangular(2, q);
  RadicalResult t = radical(t2);
  CHECK(t.radical.space() == span1(q, t2.basis_vector(1)));
  CHECK(t.nilpotency_index == 2);
  CHECK(t.method == RadicalMethod::TraceForm);
}

TEST_CASE("radical oracle examples") {
  Field f2 = Field::prime(2);
  CHECK(radical_oracle(group_algebra(2, f2)).space() == span1(f2, vec(f2, {1, 1})));
  FinAlg k2 = matrix_algebra(1, f2);
  CHECK(radical_oracle(direct_product({k2, k2})).dim() == 0);
  Field f3 = Field::prime(3);
  FinAlg x2 = truncated_polynomial(2, f3);
  CHECK(radical_oracle(x2).space() == span1(f3, x2.basis_vector(1)));
}

TEST_CASE("oracle size bound") {
  Field f3 = Field::prime(3);
  try {
    radical_oracle(truncated_polynomial(11, f3));
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
}

TEST_CASE("semisimplicity examples") {
  CHECK(is_semisimple(group_algebra(3, Field::rationals())));
  CHECK_FALSE(is_semisimple(group_algebra(3, Field::prime(3))));
  CHECK(is_semisimple(matrix_algebra(2, Field::prime(3))));
  CHECK_THROWS_AS(radical(group_algebra(2, Field::rational_functions(2))), Error);
}

TEST_CASE("small characteristic chain") {
  // F_2[C_8]: J = augmentation ideal, nilpotency index 8
  Field f2 = Field::prime(2);
  RadicalResult r = radical(group_algebra(8, f2));
  CHECK(r.method == RadicalMethod::CharPChain);
  CHECK(r.radical.dim() == 7);
  CHECK(r.nilpotency_index == 8);
  // F_3[C_6] is two copies of F_3[x]/(x^3)
  RadicalResult s = radical(group_algebra(6, Field::prime(3)));
  CHECK(s.radical.dim() == 4);
  CHECK(s.nilpotency_index == 3);
  // T_3 over F_2
  RadicalResult t = radical(upper_triangular(3, f2));
  CHECK(t.radical.dim() == 3);
  CHECK(t.nilpotency_index == 3);
}

TEST_CASE("radical over extension fields") {
  Field f2 = Field::prime(2);
  Field f4 = Field::extension(f2, {f2.one(), f2.one(), f2.one()});
  RadicalResult r = radical(group_algebra(2, f4));
  CHECK(r.radical.dim() == 1);
  CHECK(r.radical.space().contains(vec(f4, {1, 1})));
  CHECK(radical(matrix_algebra(2, f4)).radical.dim() == 0);
  Field q = Field::rationals();
  Field qi = Field::extension(q, {q.one(), q.zero(), q.one()});
  CHECK(radical(upper_triangular(2, qi)).radical.dim() == 1);
  CHECK(is_semisimple(group_algebra(4, qi)));
}

TEST_CASE("radical agrees with the oracle on random algebras") {
  std::mt19937_64 rng(2024);
  int count = 0;
  for (int trial = 0; trial < 120; ++trial) {
    Field f = Field::prime(trial % 2 ? 3 : 2);
    FinAlg a = corpus::random_algebra(f, rng, 4, trial % 3 != 0);
    CHECK(radical(a).radical == radical_oracle(a));
    ++count;
  }
  CHECK(count == 120);
}

TEST_CASE("radical properties on random algebras") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    Field f = trial % 3 == 0 ? Field::rationals() : Field::prime(trial % 3 == 1 ? 2 : 3);
    FinAlg a = corpus::random_algebra(f, rng, 6, true);
    RadicalResult r = radical(a);
    CHECK(r.nilpotency_index <= a.dim());
    if (r.radical.dim() > 0) {
      Quotient q = quotient(a, r.radical);
      CHECK(radical(q.algebra).radical.dim() == 0);
    }
    // pi(J(A)) = J(A/I) for a random principal ideal I
    Vector g = zero_vector(f, a.dim());
    for (Index i = 0; i < a.dim(); ++i) g(i) = corpus::rnd(f, rng);
    Ideal i = ideal_closure(a, {g}, Side::TwoSided);
    if (i.is_proper()) {
      Quotient qi = quotient(a, i);
      CHECK(qi.projection.image(r.radical.space()) == radical(qi.algebra).radical.space());
    }
  }
}

TEST_CASE("radical of a product") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    Field f = trial % 2 ? Field::rationals() : Field::prime(2);
    FinAlg a = corpus::random_algebra(f, rng, 4, true);
    FinAlg b = corpus::random_algebra(f, rng, 4, true);
    FinAlg ab = direct_product({a, b});
    Subspace ja = radical(a).radical.space(), jb = radical(b).radical.space();
    std::vector<Vector> gens;
    for (Index k = 0; k < ja.dim(); ++k) {
      Vector v = zero_vector(f, ab.dim());
      v.head(a.dim()) = ja.basis_vector(k);
      gens.push_back(v);
    }
    for (Index k = 0; k < jb.dim(); ++k) {
      Vector v = zero_vector(f, ab.dim());
      v.tail(b.dim()) = jb.basis_vector(k);
      gens.push_back(v);
    }
    CHECK(radical(ab).radical.space() == Subspace::span(f, ab.dim(), gens));
  }
}

TEST_CASE("intersection of maximal two-sided ideals") {
  Field q = Field::rationals();
  FinAlg t2 = upper_triangular(2, q);
  CHECK(maximal_twosided_intersection(t2).space() == span1(q, t2.basis_vector(1)));
  CHECK(maximal_twosided_intersection(group_algebra(3, q)).dim() == 0);
  Field f2 = Field::prime(2);
  CHECK(maximal_twosided_intersection(group_algebra(2, f2)).space() == span1(f2, vec(f2, {1, 1})));
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    FinAlg a = corpus::random_algebra(trial % 2 ? Field::prime(3) : q, rng, 6, true);
    CHECK(maximal_twosided_intersection(a) == radical(a).radical);
  }
}
