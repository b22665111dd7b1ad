#pragma once

// Idempotent lifting, Wedderburn-Malcev splittings A = S + J(A) and the
// conjugating element relating two splittings.

#include <cstdint>

#include "pca/algebra.hpp"
#include "pca/separability.hpp"

namespace pca {

struct IdempotentLift {
  Vector idempotent;
  // Number of applications of e -> 3e^2 - 2e^3 performed.
  int iterations;
};

// NotIdempotentModJ unless f^2 - f lies in J(A).
IdempotentLift lift_idempotent(const FinAlg& a, const Vector& f);

struct Splitting {
  FinAlg algebra;
  Ideal radical;
  // A -> A/J on the complement basis of J.
  Quotient quotient;
  // Algebra section A/J -> A.
  AlgHom section;
  Subspace image;
};

// Lifts a linear section through J/J^2, J^2/J^3, ... by solving one
// coboundary system per layer. A nonzero seed perturbs the starting lift by a
// seeded random map into J, giving (in general) a different splitting.
// NotSeparableQuotient if A/J is not separable.
Splitting wedderburn_splitting(const FinAlg& a, std::uint64_t seed = 0);

// Validates a section given as a matrix (dim A rows, dim A/J columns, on the
// quotient basis used by wedderburn_splitting).
Splitting make_splitting(const FinAlg& a, const Matrix& section);

// s((I + J)/J) is contained in I.
bool check_ideal_lemma(const Splitting& s, const Ideal& i);

struct Conjugator {
  Vector omega;
  // (1 - omega)^{-1}
  Vector inverse;
  InnerRoute route;
};

// omega in J with s1(x) = (1 - omega) s2(x) (1 - omega)^{-1} for all x.
Conjugator malcev_conjugator(const Splitting& s1, const Splitting& s2);

}  // namespace pca
