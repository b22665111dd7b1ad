#pragma once

// Exact base fields and their elements.
//
// A Field is a handle to an interned, immutable descriptor: QQ, GF(p),
// the rational function field GF(p)(t), or a simple extension base[x]/(m).
// Two handles compare equal iff they describe the same field.
//
// A Scalar is an element of some Field in canonical form. A default- or
// int-constructed Scalar is an "unbound" integer literal; it adopts the
// field of whatever it is combined with. This is what lets Scalar serve as
// the coefficient type of Eigen matrices, which create 0 and 1 without any
// field context.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "pca/error.hpp"
#include "pca/fp_poly.hpp"

namespace pca {

class Scalar;

namespace detail {
struct FieldData;
}

enum class FieldKind { Rationals, Prime, RationalFunction, Extension };

class Field {
 public:
  static Field rationals();
  static Field prime(std::uint64_t p);
  static Field rational_functions(std::uint64_t p);
  // `minpoly` holds base-field coefficients low-to-high; it must be monic of
  // degree >= 2. Irreducibility is verified over QQ and GF(p) bases and
  // recorded as unverified otherwise.
  static Field extension(const Field& base, const std::vector<Scalar>& minpoly);

  FieldKind kind() const;
  // 0 for characteristic zero.
  std::uint64_t characteristic() const;
  bool is_finite() const;
  // Extension only.
  Field base() const;
  const std::vector<Scalar>& minpoly() const;
  // Degree over the immediate base (1 unless an extension).
  std::size_t degree() const;
  bool irreducibility_verified() const;
  // QQ, GF(p) or GF(p)(t): the field at the bottom of the extension chain.
  Field ground() const;
  // True if `other` is this field or this field is an extension (of an
  // extension ...) of it.
  bool extends(const Field& other) const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  // t for GF(p)(t), the class of x for extensions.
  Scalar generator() const;
  Scalar embed(const Scalar& base_element) const;
  Scalar parse(std::string_view text) const;

  std::string describe() const;

  bool operator==(const Field& other) const { return data_ == other.data_; }
  bool operator!=(const Field& other) const { return data_ != other.data_; }

  const detail::FieldData* data() const { return data_; }
  static Field from_data(const detail::FieldData* d) { return Field(d); }

 private:
  explicit Field(const detail::FieldData* d) : data_(d) {}
  const detail::FieldData* data_;
};

class Scalar {
 public:
  struct Unbound {
    long long value;
  };
  struct Residue {
    std::uint64_t value;
  };
  struct RatFunc {
    fp::Poly num;
    fp::Poly den;
  };
  struct ExtElem {
    std::vector<Scalar> coeffs;
  };

  Scalar() : rep_(Unbound{0}) {}
  Scalar(int v) : rep_(Unbound{v}) {}
  Scalar(long long v) : rep_(Unbound{v}) {}

  static Scalar rational(Field f, mpq_class q);
  static Scalar residue(Field f, std::uint64_t r);
  static Scalar ratfunc(Field f, fp::Poly num, fp::Poly den);
  static Scalar extension(Field f, std::vector<Scalar> coeffs);

  bool bound() const { return field_ != nullptr; }
  std::optional<Field> field() const;
  // Returns this value as an element of f; an unbound literal is promoted,
  // a bound value of another field raises FieldMismatch.
  Scalar in(const Field& f) const;

  bool is_zero() const;
  bool is_one() const;
  Scalar inverse() const;
  Scalar pow(const mpz_class& e) const;
  Scalar pow(std::uint64_t e) const { return pow(mpz_class(static_cast<unsigned long>(e))); }

  const mpq_class& as_rational() const;
  std::uint64_t as_residue() const;
  const RatFunc& as_ratfunc() const;
  const std::vector<Scalar>& as_coeffs() const;
  long long as_unbound() const;

  std::string to_string() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  const detail::FieldData* field_data() const { return field_; }

 private:
  using Rep = std::variant<Unbound, mpq_class, Residue, RatFunc, ExtElem>;
  Scalar(const detail::FieldData* f, Rep rep) : field_(f), rep_(std::move(rep)) {}

  const detail::FieldData* field_ = nullptr;
  Rep rep_;

  friend class Field;
  friend struct ScalarOps;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Total order on canonical forms, used only for deterministic output ordering.
bool canonical_less(const Scalar& a, const Scalar& b);

// Small random element: numerators/coefficients drawn from [-bound, bound]
// (or uniformly from GF(p)).
Scalar random_scalar(const Field& f, std::mt19937_64& rng, int bound = 3);

// Uniform integer in [0, n) independent of the standard library's
// distribution implementation, so seeded runs are reproducible everywhere.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

}  // namespace pca
