#pragma once

// Separability idempotents, bimodules and inner derivations.
//
// Conventions: for a B-bimodule T, b.t = lambda(b) t and t.b = rho(b) t. A
// derivation d : B -> T is inner with witness u when d(b) = b.u - u.b.
// Elements of A (x) A use the index a * dim + b for e_a (x) e_b.

#include <optional>
#include <utility>
#include <vector>

#include "pca/algebra.hpp"

namespace pca {

struct SepIdempotent {
  FinAlg algebra;
  Vector tensor_coeffs;
  // (e_a, sum_b p_ab e_b) for every a with a nonzero row.
  std::vector<std::pair<Vector, Vector>> as_pairs;
};

// m(p) = 1 and a p = p a for every basis element a.
bool is_separability_idempotent(const FinAlg& a, const Vector& p);

// nullopt means A is not separable (the defining linear system is
// inconsistent). Works over every supported field.
std::optional<SepIdempotent> sep_idempotent(const FinAlg& a);

// Over QQ, GF(p) and their finite extensions the answer is compared with
// semisimplicity; a disagreement raises TheoremViolation.
bool is_separable(const FinAlg& a);

// is_semisimple(A (x) E).
bool base_change_semisimple_check(const FinAlg& a, const Field& extension);

// Least m with x^m = 0, or nullopt if x is not nilpotent.
std::optional<int> nilpotent_witness(const FinAlg& a, const Vector& x);

class Bimodule {
 public:
  // NotABimodule unless lambda is a unital representation, rho a unital
  // anti-representation and the two actions commute.
  static Bimodule make(FinAlg algebra, Index space_dim, std::vector<Matrix> left, std::vector<Matrix> right);

  const FinAlg& algebra() const { return algebra_; }
  Index space_dim() const { return dim_; }
  const Matrix& left(Index i) const { return left_[static_cast<std::size_t>(i)]; }
  const Matrix& right(Index i) const { return right_[static_cast<std::size_t>(i)]; }
  Matrix left_of(const Vector& b) const;
  Matrix right_of(const Vector& b) const;

 private:
  Bimodule(FinAlg a, Index d, std::vector<Matrix> l, std::vector<Matrix> r)
      : algebra_(std::move(a)), dim_(d), left_(std::move(l)), right_(std::move(r)) {}
  FinAlg algebra_;
  Index dim_;
  std::vector<Matrix> left_, right_;
};

enum class InnerRoute { ClosedForm, NegatedClosedForm, LinearSolve };
const char* to_string(InnerRoute r);

struct InnerWitness {
  Vector element;
  InnerRoute route;
};

// `d` has one column d(e_j) per basis element of the algebra. NotADerivation
// (with a witness pair) unless d(ab) = a.d(b) + d(a).b. When a separability
// idempotent is supplied, u = sum p_ab d(e_a).e_b and its negative are tried
// first; otherwise, or if neither verifies, the linear system is solved.
// nullopt means d is not inner.
std::optional<InnerWitness> inner_derivation(const Bimodule& t, const Matrix& d, const SepIdempotent* p = nullptr);

struct UniversalDerivation {
  bool valid;
  // Inner witness for f(a) = 1(x)a - a(x)1 on Ker(m), in A (x) A coordinates.
  std::optional<Vector> witness;
  // 1(x)1 + u or 1(x)1 - u, whichever is a separability idempotent.
  std::optional<Vector> idempotent;
};

// The universal derivation into Ker(m) is inner and its witness yields a
// separability idempotent.
UniversalDerivation universal_derivation_check(const FinAlg& a);

}  // namespace pca
