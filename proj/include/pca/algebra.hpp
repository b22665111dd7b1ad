#pragma once

// Finite-dimensional associative unital algebras given by structure
// constants e_i e_j = sum_k c_ij^k e_k, plus homomorphisms, ideals and the
// standard constructions. Every value is validated when built, so a FinAlg,
// Ideal or AlgHom that exists is always a genuine one.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pca/field.hpp"
#include "pca/linalg.hpp"
#include "pca/polynomial.hpp"

namespace pca {

struct StructureConstant {
  Index i, j, k;
  Scalar value;
};

class FinAlg {
 public:
  // Rejects out-of-range indices (BadSpec), non-associative tables
  // (NotAssociative, with a witness triple) and tables without a two-sided
  // identity (NoUnit). When `unit` is omitted it is solved for.
  static FinAlg make(Field f, std::vector<std::string> labels, std::vector<StructureConstant> mult,
                     std::optional<Vector> unit = std::nullopt);

  const Field& field() const;
  Index dim() const;
  const std::vector<std::string>& labels() const;
  // Sorted by (i, j, k), zero entries omitted.
  const std::vector<StructureConstant>& structure_constants() const;
  const Vector& unit() const;

  Vector zero() const;
  Vector basis_vector(Index i) const;
  Vector mul(const Vector& x, const Vector& y) const;
  const Vector& basis_product(Index i, Index j) const;
  Vector pow(const Vector& x, std::uint64_t n) const;
  // Matrices of y -> x y and y -> y x.
  Matrix left_mul(const Vector& x) const;
  Matrix right_mul(const Vector& x) const;
  const Matrix& left_basis(Index i) const;
  const Matrix& right_basis(Index i) const;

  bool is_commutative() const;
  // Same field, dimension, structure constants and unit (labels ignored).
  bool same_table(const FinAlg& o) const;

 private:
  struct Impl;
  explicit FinAlg(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

enum class Side { Left, Right, TwoSided };
const char* to_string(Side s);

class Ideal {
 public:
  // Checks closure under multiplication by basis elements on the declared
  // side(s); NotAnIdeal otherwise.
  static Ideal make(const FinAlg& a, Subspace space, Side side);

  const FinAlg& algebra() const { return algebra_; }
  const Subspace& space() const { return space_; }
  Side side() const { return side_; }
  Index dim() const { return space_.dim(); }
  bool is_proper() const { return space_.dim() < algebra_.dim(); }
  bool operator==(const Ideal& o) const { return space_ == o.space_ && side_ == o.side_; }

 private:
  Ideal(FinAlg a, Subspace s, Side side) : algebra_(std::move(a)), space_(std::move(s)), side_(side) {}
  FinAlg algebra_;
  Subspace space_;
  Side side_;
};

// Smallest ideal of the given side containing the generators.
Ideal ideal_closure(const FinAlg& a, const std::vector<Vector>& generators, Side side);
// span{ u v : u in U, v in V }.
Subspace product_space(const FinAlg& a, const Subspace& u, const Subspace& v);

class AlgHom {
 public:
  // `matrix` has dim(target) rows and dim(source) columns (columns are the
  // images of the source basis). Throws NotAHom with a witness unless the
  // map is unital and multiplicative.
  static AlgHom make(Matrix matrix, FinAlg source, FinAlg target);
  static AlgHom identity(const FinAlg& a);

  const FinAlg& source() const { return source_; }
  const FinAlg& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }

  Vector apply(const Vector& x) const;
  Subspace image(const Subspace& u) const;
  bool is_surjective() const;
  bool is_injective() const;
  Ideal kernel() const;
  // this ∘ inner
  AlgHom compose(const AlgHom& inner) const;

 private:
  AlgHom(Matrix m, FinAlg s, FinAlg t) : matrix_(std::move(m)), source_(std::move(s)), target_(std::move(t)) {}
  Matrix matrix_;
  FinAlg source_;
  FinAlg target_;
};

struct Quotient {
  FinAlg algebra;
  AlgHom projection;
  // Linear (not multiplicative) section: quotient coordinates -> A, placing
  // each coordinate on its representative basis element.
  Matrix lift;
};

// A / I on the complement basis given by the non-pivot coordinates of I.
// ImproperIdeal if I = A; NotAnIdeal unless I is two-sided.
Quotient quotient(const FinAlg& a, const Ideal& i);

// Constructions.
FinAlg group_algebra(std::size_t n, const Field& f);  // k[C_n]
FinAlg matrix_algebra(std::size_t n, const Field& f);  // M_n(k)
FinAlg upper_triangular(std::size_t n, const Field& f);  // T_n(k)
FinAlg truncated_polynomial(std::size_t n, const Field& f);  // k[x]/(x^n)
FinAlg polynomial_quotient(const Polynomial& modulus);  // k[x]/(f)
// A finite extension E regarded as an algebra over its base field.
FinAlg field_extension_algebra(const Field& extension);
FinAlg direct_product(const std::vector<FinAlg>& factors);
FinAlg opposite(const FinAlg& a);
FinAlg tensor(const FinAlg& a, const FinAlg& b);
// Same structure constants read over an extension E of A's field.
FinAlg base_change(const FinAlg& a, const Field& extension);
// Restriction of scalars from an extension chain down to `ground`. Basis
// element e_i * alpha^r sits at index i * degree + r (flattened recursively).
FinAlg restrict_scalars(const FinAlg& a, const Field& ground);
// Maps a vector of the restricted algebra back to one over the original field.
Vector unrestrict_vector(const FinAlg& original, const Field& ground, const Vector& v);

// Minimal polynomial of x in the subalgebra with identity `unit` (an
// idempotent that x lives under).
Polynomial minimal_polynomial(const FinAlg& a, const Vector& x, const Vector& unit);
Polynomial minimal_polynomial(const FinAlg& a, const Vector& x);
Vector evaluate(const FinAlg& a, const Polynomial& p, const Vector& x, const Vector& unit);

// Basis-free structural isomorphism check helper: the linear map sending
// basis element i of `a` to `images[i]` of `b`, validated as an AlgHom.
AlgHom hom_check(const Matrix& matrix, const FinAlg& source, const FinAlg& target);

}  // namespace pca
