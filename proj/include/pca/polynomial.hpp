#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pca/field.hpp"

namespace pca {

// Dense univariate polynomial over a Field, coefficients low-to-high.
// The leading coefficient is nonzero unless the polynomial is zero.
class Polynomial {
 public:
  explicit Polynomial(Field f) : field_(f) {}
  Polynomial(Field f, std::vector<Scalar> coeffs);

  static Polynomial constant(Field f, const Scalar& c);
  static Polynomial monomial(Field f, const Scalar& c, std::size_t degree);
  static Polynomial x(Field f) { return monomial(f, f.one(), 1); }

  const Field& field() const { return field_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  Scalar coeff(std::size_t i) const;
  Scalar leading() const;

  Polynomial monic() const;
  Polynomial derivative() const;
  Scalar eval(const Scalar& at) const;
  std::string to_string(const std::string& var = "x") const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(const Scalar& c, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void trim();
  void check(const Polynomial& o) const;

  Field field_;
  std::vector<Scalar> coeffs_;
};

struct PolyDivMod {
  Polynomial quotient;
  Polynomial remainder;
};
PolyDivMod divmod(const Polynomial& f, const Polynomial& g);
Polynomial operator/(const Polynomial& f, const Polynomial& g);
Polynomial operator%(const Polynomial& f, const Polynomial& g);

// Monic gcd (zero if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// s*a + t*b = g with g the monic gcd.
struct PolyXGcd {
  Polynomial g, s, t;
};
PolyXGcd xgcd(const Polynomial& a, const Polynomial& b);

struct FactorTerm {
  Polynomial factor;
  int multiplicity;
};

// Factorization into monic irreducibles over QQ or GF(p):
// f = leading(f) * prod factor^multiplicity. Output sorted by degree, then
// lexicographically by coefficients (low-to-high). Randomized steps are
// driven by `seed`. Other fields raise UnsupportedField.
std::vector<FactorTerm> factor(const Polynomial& f, std::uint64_t seed = 0);

bool is_irreducible(const Polynomial& f);

// Factorization-backed ordering used for the sorted output above.
bool factor_order_less(const Polynomial& a, const Polynomial& b);

}  // namespace pca
