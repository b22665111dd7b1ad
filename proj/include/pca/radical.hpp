#pragma once

// Jacobson radical of a finite-dimensional algebra.
//
// Over QQ (and its extensions) and over GF(p) when p > dim, J(A) is the
// kernel of the trace form (x, y) -> tr(L_{xy}). For small characteristic
// the descending chain of trace-of-p^i-th-power conditions is used instead;
// GF(p^k) algebras are first restricted to GF(p). Every result is checked
// afterwards: J is a two-sided nilpotent ideal and A/J has zero radical.

#include <string>
#include <vector>

#include "pca/algebra.hpp"

namespace pca {

enum class RadicalMethod { TraceForm, CharPChain, BruteForce };
const char* to_string(RadicalMethod m);

struct RadicalResult {
  Ideal radical;
  // J, J^2, ..., J^m = 0 (just [0] when J = 0).
  std::vector<Ideal> filtration;
  // Least m with J^m = 0; 0 when J = 0.
  int nilpotency_index;
  RadicalMethod method;
  bool verified;
};

// UnsupportedField over GF(p)(t) and its extensions; InternalVerificationFailed
// if the postconditions do not hold.
RadicalResult radical(const FinAlg& a);

// {x : 1 - yx is invertible for every y}, by enumerating all pairs. Only
// for algebras over GF(p) with p^dim <= 2^16 (TooLarge otherwise).
Ideal radical_oracle(const FinAlg& a);

bool is_semisimple(const FinAlg& a);

// The powers J, J^2, ... down to 0 of a nilpotent two-sided ideal.
// NotSemisimple-free helper; throws InternalVerificationFailed if the chain
// does not reach 0 within dim steps.
std::vector<Ideal> power_filtration(const FinAlg& a, const Ideal& j);

// Intersection of the maximal two-sided ideals of A, obtained as preimages of
// the block complements of A/J. Raises TheoremViolation unless it equals J.
Ideal maximal_twosided_intersection(const FinAlg& a);

}  // namespace pca
