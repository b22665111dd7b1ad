#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "pca/radical.hpp"
#include "pca/wedderburn.hpp"

using namespace pca;
using corpus::vec;

namespace {

std::vector<Index> dims(const BlockDecomposition& d) {
  std::vector<Index> out;
  for (const auto& b : d.block_data) out.push_back(b.total_dim);
  return out;
}

// Block dimensions of k[C_n] predicted by factoring x^n - 1 (for char not dividing n).
std::vector<Index> predicted(std::size_t n, const Field& f) {
  std::vector<Scalar> c(n + 1, f.zero());
  c[0] = f.from_int(-1);
  c[n] = f.one();
  std::vector<Index> out;
  for (const auto& t : factor(Polynomial(f, c))) out.push_back(t.factor.degree());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("center examples") {
  Field f3 = Field::prime(3);
  Subspace z = center(matrix_algebra(2, f3));
  CHECK(z.dim() == 1);
  CHECK(z.contains(vec(f3, {1, 0, 0, 1})));
  CHECK(center(group_algebra(3, Field::rationals())).dim() == 3);
  FinAlg t2 = upper_triangular(2, Field::rationals());
  Subspace zt = center(t2);
  CHECK(zt.dim() == 1);
  CHECK(zt.contains(t2.unit()));
}

TEST_CASE("blocks of Q[C_3]") {
  Field q = Field::rationals();
  BlockDecomposition d = central_idempotents(group_algebra(3, q));
  CHECK(dims(d) == std::vector<Index>{1, 2});
  CHECK(equal(d.idempotents[0], vec(q, {1, 1, 1}) * q.parse("1/3")));
  CHECK(equal(d.idempotents[1], vec(q, {2, -1, -1}) * q.parse("1/3")));
  CHECK(d.block_data[1].center_dim == 2);
  CHECK_FALSE(d.block_data[1].matrix_degree.has_value());
  CHECK(dims(d) == predicted(3, q));
}

TEST_CASE("blocks over finite fields") {
  Field f3 = Field::prime(3);
  BlockDecomposition m = central_idempotents(matrix_algebra(2, f3));
  REQUIRE(m.blocks.size() == 1);
  CHECK(m.block_data[0].matrix_degree == 2);
  CHECK(m.block_data[0].center_dim == 1);

  Field f2 = Field::prime(2);
  BlockDecomposition c3 = central_idempotents(group_algebra(3, f2));
  CHECK(dims(c3) == std::vector<Index>{1, 2});
  CHECK(c3.block_data[1].matrix_degree == 1);
  BlockDecomposition c7 = central_idempotents(group_algebra(7, f2));
  CHECK(dims(c7) == std::vector<Index>{1, 3, 3});
  CHECK_THROWS_AS(central_idempotents(group_algebra(2, f2)), Error);
}

TEST_CASE("products of fields on a scrambled basis") {
  Field f2 = Field::prime(2);
  FinAlg f4 = polynomial_quotient(corpus::poly(f2, {1, 1, 1}));
  FinAlg f8 = polynomial_quotient(corpus::poly(f2, {1, 1, 0, 1}));
  std::mt19937_64 rng(4);
  FinAlg a = direct_product({f4, f4});
  a = corpus::change_basis(a, corpus::random_invertible(f2, a.dim(), rng));
  CHECK(dims(central_idempotents(a)) == std::vector<Index>{2, 2});
  FinAlg b = direct_product({f8, f4, f8});
  b = corpus::change_basis(b, corpus::random_invertible(f2, b.dim(), rng));
  CHECK(dims(central_idempotents(b)) == std::vector<Index>{2, 3, 3});
  Field q = Field::rationals();
  FinAlg qi = polynomial_quotient(corpus::poly(q, {1, 0, 1}));
  FinAlg c = direct_product({qi, qi, matrix_algebra(1, q)});
  c = corpus::change_basis(c, corpus::random_invertible(q, c.dim(), rng));
  CHECK(dims(central_idempotents(c)) == std::vector<Index>{1, 2, 2});
}

TEST_CASE("block centers are fields") {
  // every center basis element of every block has an irreducible minimal polynomial
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 12; ++trial) {
    Field f = trial % 2 ? Field::prime(3) : Field::rationals();
    FinAlg a = corpus::random_algebra(f, rng, 8, false);
    if (!is_semisimple(a)) continue;
    BlockDecomposition d = central_idempotents(a, static_cast<std::uint64_t>(trial));
    for (const auto& b : d.blocks) {
      Subspace z = center(b);
      for (Index i = 0; i < z.dim(); ++i) CHECK(is_irreducible(minimal_polynomial(b, z.basis_vector(i))));
    }
  }
}

TEST_CASE("block counts of group algebras match factorization") {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    Field f = Field::prime(p);
    for (std::size_t n = 1; n <= 12; ++n) {
      if (n % p == 0) continue;
      CHECK(dims(central_idempotents(group_algebra(n, f))) == predicted(n, f));
    }
  }
  Field q = Field::rationals();
  for (std::size_t n = 1; n <= 8; ++n) CHECK(dims(central_idempotents(group_algebra(n, q))) == predicted(n, q));
}

TEST_CASE("seeds do not change block data") {
  Field q = Field::rationals();
  FinAlg a = direct_product({group_algebra(5, q), matrix_algebra(2, q), group_algebra(4, q)});
  auto d0 = central_idempotents(a, 0), d1 = central_idempotents(a, 17);
  REQUIRE(d0.blocks.size() == d1.blocks.size());
  for (std::size_t i = 0; i < d0.blocks.size(); ++i) {
    CHECK(d0.block_data[i].total_dim == d1.block_data[i].total_dim);
    CHECK(d0.block_data[i].center_dim == d1.block_data[i].center_dim);
  }
}

TEST_CASE("extension fields and products") {
  Field f3 = Field::prime(3);
  Field f9 = Field::extension(f3, {f3.one(), f3.zero(), f3.one()});
  BlockDecomposition d = central_idempotents(group_algebra(4, f9));
  CHECK(dims(d) == std::vector<Index>{1, 1, 1, 1});  // x^4 - 1 splits over GF(9)
  BlockDecomposition pm = central_idempotents(direct_product({matrix_algebra(2, f3), matrix_algebra(1, f3)}));
  CHECK(dims(pm) == std::vector<Index>{1, 4});
  Field q = Field::rationals();
  Field z3 = Field::extension(q, {q.one(), q.one(), q.one()});
  CHECK(dims(central_idempotents(group_algebra(3, z3))) == std::vector<Index>{1, 1, 1});
}

TEST_CASE("crt lift examples") {
  Field q = Field::rationals();
  FinAlg a = polynomial_quotient(corpus::poly(q, {2, -3, 1}));  // (x-1)(x-2)
  Ideal i1 = ideal_closure(a, {vec(q, {-1, 1})}, Side::TwoSided);
  Ideal i2 = ideal_closure(a, {vec(q, {-2, 1})}, Side::TwoSided);
  Vector r = crt_lift(a, {i1, i2}, {vec(q, {0, 0}), vec(q, {1, 0})});
  CHECK(equal(r, vec(q, {-1, 1})));

  Vector t = vec(q, {3, 4});
  CHECK(i1.space().contains(Vector(crt_lift(a, {i1}, {t}) - t)));

  FinAlg k = matrix_algebra(1, q);
  FinAlg k3 = direct_product({k, k, k});
  std::vector<Ideal> ker;
  for (Index i = 0; i < 3; ++i) {
    std::vector<Vector> g;
    for (Index j = 0; j < 3; ++j)
      if (j != i) g.push_back(k3.basis_vector(j));
    ker.push_back(ideal_closure(k3, g, Side::TwoSided));
  }
  Vector out = crt_lift(k3, ker, {vec(q, {1, 0, 0}), vec(q, {0, 2, 0}), vec(q, {0, 0, 3})});
  CHECK(equal(out, vec(q, {1, 2, 3})));

  try {
    crt_lift(a, {i1, i1}, {t, t});
    FAIL("expected NotCoprime");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotCoprime);
  }
}

TEST_CASE("crt lift with left ideals of a matrix algebra") {
  Field q = Field::rationals();
  FinAlg m = matrix_algebra(2, q);
  // left ideals A E11 and A E22 (first and second columns)
  Ideal l1 = ideal_closure(m, {m.basis_vector(0)}, Side::Left);
  Ideal l2 = ideal_closure(m, {m.basis_vector(3)}, Side::Left);
  Vector t1 = vec(q, {0, 5, 0, 7}), t2 = vec(q, {1, 2, 3, 4});
  Vector r = crt_lift(m, {l1, l2}, {t1, t2});
  CHECK(l1.space().contains(Vector(r - t1)));
  CHECK(l2.space().contains(Vector(r - t2)));
}
