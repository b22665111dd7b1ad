#include <doctest.h>

#include <random>

#include "pca/field.hpp"
#include "pca/linalg.hpp"
#include "pca/polynomial.hpp"

using namespace pca;

namespace {

Polynomial poly(const Field& f, std::initializer_list<long long> c) {
  std::vector<Scalar> v;
  for (long long x : c) v.push_back(f.from_int(x));
  return Polynomial(f, v);
}

Matrix mat(const Field& f, std::vector<std::vector<long long>> rows) {
  Matrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(static_cast<Index>(i), static_cast<Index>(j)) = f.from_int(rows[i][j]);
  return m;
}

Matrix random_matrix(const Field& f, Index r, Index c, std::mt19937_64& rng) {
  Matrix m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = uniform_below(rng, 3) == 0 ? f.zero() : random_scalar(f, rng);
  return m;
}

Polynomial product_of(const std::vector<FactorTerm>& fs, const Field& f) {
  Polynomial p = Polynomial::constant(f, f.one());
  for (const auto& t : fs)
    for (int k = 0; k < t.multiplicity; ++k) p *= t.factor;
  return p;
}

}  // namespace

TEST_CASE("rational arithmetic") {
  Field q = Field::rationals();
  CHECK(q.parse("1/3") + q.parse("1/6") == q.parse("1/2"));
  CHECK(q.parse("-4/6").to_string() == "-2/3");
  CHECK_THROWS_AS(q.zero().inverse(), Error);
}

TEST_CASE("prime field arithmetic") {
  Field f5 = Field::prime(5);
  CHECK(f5.from_int(2).inverse() == f5.from_int(3));
  CHECK(f5.from_int(-1).to_string() == "4");
  CHECK_THROWS_AS(Field::prime(9), Error);
}

TEST_CASE("mixing fields is rejected") {
  CHECK_THROWS_AS(Field::prime(5).one() + Field::prime(7).one(), Error);
  CHECK_THROWS_AS((void)(Field::prime(5).one() == Field::rationals().one()), Error);
}

TEST_CASE("rational function field") {
  Field f = Field::rational_functions(2);
  Scalar t = f.generator();
  Scalar lhs = t.inverse() + (t + f.one()).inverse();
  CHECK(lhs == (t * t + t).inverse());
  CHECK(lhs.to_string() == "1/(t^2+t)");
  CHECK(f.parse("t^2+1/t+1") == f.one() + t);
}

TEST_CASE("extension field arithmetic") {
  Field f2 = Field::prime(2);
  Field f4 = Field::extension(f2, {f2.one(), f2.one(), f2.one()});
  Scalar a = f4.generator();
  CHECK(a * a == a + f4.one());
  CHECK(a.pow(3) == f4.one());
  CHECK(a.inverse() == a + f4.one());
  CHECK_THROWS_AS(Field::extension(f2, {f2.one(), f2.zero(), f2.one()}), Error);  // x^2+1 = (x+1)^2

  Field ft = Field::rational_functions(2);
  Field e = Field::extension(ft, {ft.generator(), ft.zero(), ft.one()});
  CHECK_FALSE(e.irreducibility_verified());
  CHECK(e.generator() * e.generator() == e.embed(ft.generator()));
  CHECK_THROWS_AS(Field::extension(e, {e.generator(), e.zero(), e.one()}), Error);
}

TEST_CASE("canonical forms under random arithmetic") {
  std::mt19937_64 rng(7);
  Field f2 = Field::prime(2);
  std::vector<Field> fields{Field::rationals(), Field::prime(7), Field::rational_functions(3),
                            Field::extension(Field::rationals(), {Field::rationals().from_int(2), 0, Field::rationals().one()}),
                            Field::extension(f2, {f2.one(), f2.one(), f2.zero(), f2.one()})};
  for (const auto& f : fields) {
    int done = 0;
    while (done < 1000) {
      Scalar a = random_scalar(f, rng);
      CHECK((a - a).is_zero());
      if (a.is_zero()) continue;
      CHECK((a * a.inverse()).is_one());
      ++done;
    }
  }
}

TEST_CASE("factorization examples") {
  Field q = Field::rationals();
  auto fq = factor(poly(q, {-1, 0, 0, 1}));
  REQUIRE(fq.size() == 2);
  CHECK(fq[0].factor == poly(q, {-1, 1}));
  CHECK(fq[1].factor == poly(q, {1, 1, 1}));
  CHECK(fq[0].multiplicity == 1);

  Field f3 = Field::prime(3);
  auto f3f = factor(poly(f3, {-1, 0, 0, 1}));
  REQUIRE(f3f.size() == 1);
  CHECK(f3f[0].factor == poly(f3, {-1, 1}));
  CHECK(f3f[0].multiplicity == 3);

  Field f2 = Field::prime(2);
  auto f2f = factor(poly(f2, {1, 1, 1}));
  REQUIRE(f2f.size() == 1);
  CHECK(f2f[0].factor == poly(f2, {1, 1, 1}));

  CHECK_THROWS_AS(factor(Polynomial(Field::rational_functions(2), {Field::rational_functions(2).one(), 0, 1})), Error);
}

TEST_CASE("factorization over QQ reproduces the input") {
  Field q = Field::rationals();
  // x^12 - 1 has six cyclotomic factors
  std::vector<long long> c(13, 0);
  c[0] = -1;
  c[12] = 1;
  Polynomial f(q, {});
  {
    std::vector<Scalar> v;
    for (auto x : c) v.push_back(q.from_int(x));
    f = Polynomial(q, v);
  }
  auto fs = factor(f);
  CHECK(fs.size() == 6);
  CHECK(product_of(fs, q) == f);

  // Swinnerton-Dyer style: (x^2-2)(x^2-3) times (x^4-10x^2+1), 3x^2 + content
  Polynomial g = poly(q, {-2, 0, 1}) * poly(q, {-3, 0, 1}) * poly(q, {1, 0, -10, 0, 1}) * poly(q, {6, 0, 3});
  auto gs = factor(g);
  CHECK(gs.size() == 4);
  CHECK(g.leading() * product_of(gs, q) == g);
  for (const auto& t : gs) CHECK(is_irreducible(t.factor));

  Polynomial sq = poly(q, {1, 1}) * poly(q, {1, 1}) * poly(q, {1, 0, 1}) * poly(q, {-5, 3, 7});
  auto ss = factor(sq);
  REQUIRE(ss.size() == 3);
  CHECK(ss[0].multiplicity == 2);
  CHECK(sq.leading() * product_of(ss, q) == sq);
}

TEST_CASE("factorization over small prime fields against root search") {
  std::mt19937_64 rng(11);
  for (std::uint64_t p : {2, 3, 5, 7}) {
    Field f = Field::prime(p);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<Scalar> c;
      int deg = 1 + static_cast<int>(uniform_below(rng, 8));
      for (int i = 0; i < deg; ++i) c.push_back(f.from_int(static_cast<long long>(uniform_below(rng, p))));
      c.push_back(f.one());
      Polynomial g(f, c);
      auto fs = factor(g, static_cast<std::uint64_t>(trial));
      CHECK(product_of(fs, f) == g);
      for (const auto& t : fs) {
        CHECK(t.factor.leading().is_one());
        if (t.factor.degree() >= 2 && t.factor.degree() <= 3)
          for (std::uint64_t r = 0; r < p; ++r) CHECK_FALSE(t.factor.eval(f.from_int(static_cast<long long>(r))).is_zero());
      }
      for (std::size_t i = 1; i < fs.size(); ++i) CHECK(factor_order_less(fs[i - 1].factor, fs[i].factor));
    }
  }
}

TEST_CASE("linear algebra examples") {
  Field q = Field::rationals();
  Matrix m = mat(q, {{1, 1}, {2, 2}});
  CHECK(rank(m) == 1);
  Matrix n = nullspace(m);
  REQUIRE(n.rows() == 1);
  CHECK(equal(n, mat(q, {{1, -1}})));

  Matrix b = mat(q, {{4}, {5}, {6}});
  auto x = solve(identity(q, 3), b);
  REQUIRE(x);
  CHECK(equal(*x, b));
  CHECK_FALSE(solve(m, mat(q, {{1}, {0}})).has_value());

  // multiplication by x on Q[x]/(x^4)
  Matrix lx = zeros(q, 4, 4);
  for (Index i = 0; i < 3; ++i) lx(i + 1, i) = q.one();
  CHECK(rank(lx) == 3);
}

TEST_CASE("subspaces") {
  Field q = Field::rationals();
  Subspace u = Subspace::span(q, 3, mat(q, {{1, 1, 0}, {0, 1, 0}}));
  Subspace e1 = Subspace::span(q, 3, mat(q, {{1, 0, 0}}));
  CHECK((u + u) == u);
  CHECK(u.intersect(e1) == e1);
  Subspace a = Subspace::span(q, 2, mat(q, {{1, 0}}));
  Subspace c = Subspace::span(q, 2, mat(q, {{0, 1}}));
  CHECK(a.intersect(c).is_zero());
  CHECK_THROWS_AS(u + a, Error);
}

TEST_CASE("random linear systems") {
  std::mt19937_64 rng(3);
  for (const Field& f : {Field::rationals(), Field::prime(3), Field::prime(101)}) {
    for (int trial = 0; trial < 80; ++trial) {
      Index r = 1 + static_cast<Index>(uniform_below(rng, 5));
      Index c = 1 + static_cast<Index>(uniform_below(rng, 5));
      Matrix m = random_matrix(f, r, c, rng);
      bind_to(m, f);
      Matrix ns = nullspace(m);
      CHECK(rank(m) + ns.rows() == c);
      if (ns.rows() > 0) CHECK(is_zero(product(m, Matrix(ns.transpose()))));
      Matrix b = random_matrix(f, r, 1, rng);
      bind_to(b, f);
      if (auto x = solve(m, b)) CHECK(equal(product(m, *x), b));
      // consistent by construction
      Matrix y = random_matrix(f, c, 1, rng);
      bind_to(y, f);
      Matrix mb = product(m, y);
      auto sol = solve(m, mb);
      REQUIRE(sol);
      CHECK(equal(product(m, *sol), mb));
      if (r == c) {
        if (auto inv = inverse(m)) CHECK(equal(product(m, *inv), identity(f, r)));
        else CHECK(rank(m) < r);
      }
    }
  }
}
