#include "pca/field.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>

#include "pca/polynomial.hpp"

namespace pca {

namespace detail {

struct FieldData {
  FieldKind kind;
  std::uint64_t p = 0;
  const FieldData* base = nullptr;
  std::vector<Scalar> minpoly;
  bool verified = true;
};

}  // namespace detail

using detail::FieldData;

namespace {

struct Registry {
  std::mutex mutex;
  std::map<std::string, std::unique_ptr<FieldData>> fields;
};

Registry& registry() {
  static Registry r;
  return r;
}

template <class Make>
const FieldData* intern(const std::string& key, Make make) {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  auto it = r.fields.find(key);
  if (it != r.fields.end()) return it->second.get();
  auto data = make();
  const FieldData* raw = data.get();
  r.fields.emplace(key, std::move(data));
  return raw;
}

std::string poly_text(const fp::Poly& f, std::uint64_t p) {
  (void)p;
  if (f.empty()) return "0";
  std::string out;
  for (std::size_t k = f.size(); k-- > 0;) {
    std::uint64_t c = f[k];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (k == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += "t";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

mpz_class parse_integer(const std::string& s) {
  if (s.empty()) throw Error(ErrorKind::Parse, "empty integer");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw Error(ErrorKind::Parse, "bad integer '" + s + "'");
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) throw Error(ErrorKind::Parse, "bad integer '" + s + "'");
  mpz_class v(s.substr(i), 10);
  return s[0] == '-' ? mpz_class(-v) : v;
}

std::uint64_t mod_p(const mpz_class& v, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(p));
  return r.get_ui();
}

// Polynomial in t over GF(p): terms like "3*t^2", "t", "-2", "5t".
fp::Poly parse_t_poly(const std::string& s, std::uint64_t p) {
  if (s.empty()) throw Error(ErrorKind::Parse, "empty polynomial");
  fp::Poly out;
  std::size_t i = 0;
  while (i < s.size()) {
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
      neg = s[i] == '-';
      ++i;
    } else if (i != 0) {
      throw Error(ErrorKind::Parse, "bad polynomial '" + s + "'");
    }
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    mpz_class coeff = 1;
    bool has_coeff = j > i;
    if (has_coeff) coeff = mpz_class(s.substr(i, j - i), 10);
    i = j;
    std::size_t exp = 0;
    if (i < s.size() && s[i] == '*') {
      if (!has_coeff) throw Error(ErrorKind::Parse, "bad polynomial '" + s + "'");
      ++i;
      if (i >= s.size() || s[i] != 't') throw Error(ErrorKind::Parse, "bad polynomial '" + s + "'");
    }
    if (i < s.size() && s[i] == 't') {
      ++i;
      exp = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t k = i;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == i) throw Error(ErrorKind::Parse, "bad exponent in '" + s + "'");
        exp = std::stoul(s.substr(i, k - i));
        i = k;
      }
    } else if (!has_coeff) {
      throw Error(ErrorKind::Parse, "bad polynomial '" + s + "'");
    }
    if (out.size() <= exp) out.resize(exp + 1, 0);
    std::uint64_t c = mod_p(coeff, p);
    out[exp] = neg ? fp::sub(out[exp], c, p) : fp::add(out[exp], c, p);
  }
  fp::trim(out);
  return out;
}

std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

// Field ---------------------------------------------------------------------

Field Field::rationals() {
  return Field(intern("Q", [] {
    auto d = std::make_unique<FieldData>();
    d->kind = FieldKind::Rationals;
    return d;
  }));
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !fp::is_prime(p))
    throw Error(ErrorKind::BadSpec, "GF(p) needs a prime p < 2^31, got " + std::to_string(p));
  return Field(intern("F" + std::to_string(p), [p] {
    auto d = std::make_unique<FieldData>();
    d->kind = FieldKind::Prime;
    d->p = p;
    return d;
  }));
}

Field Field::rational_functions(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !fp::is_prime(p))
    throw Error(ErrorKind::BadSpec, "GF(p)(t) needs a prime p < 2^31, got " + std::to_string(p));
  return Field(intern("T" + std::to_string(p), [p] {
    auto d = std::make_unique<FieldData>();
    d->kind = FieldKind::RationalFunction;
    d->p = p;
    return d;
  }));
}

Field Field::extension(const Field& base, const std::vector<Scalar>& minpoly) {
  if (base.kind() == FieldKind::Extension && base.ground().kind() == FieldKind::RationalFunction)
    throw Error(ErrorKind::UnsupportedField, "at most one extension level over GF(p)(t)");
  std::vector<Scalar> m;
  m.reserve(minpoly.size());
  for (const auto& c : minpoly) m.push_back(c.in(base));
  if (m.size() < 3) throw Error(ErrorKind::BadSpec, "extension minimal polynomial must have degree >= 2");
  if (!m.back().is_one()) throw Error(ErrorKind::BadSpec, "extension minimal polynomial must be monic");

  bool verified = false;
  if (base.kind() == FieldKind::Rationals || base.kind() == FieldKind::Prime) {
    if (!is_irreducible(Polynomial(base, m)))
      throw Error(ErrorKind::BadSpec,
                  "minimal polynomial " + Polynomial(base, m).to_string() + " is reducible over " + base.describe());
    verified = true;
  }

  std::string key = "E" + std::to_string(reinterpret_cast<std::uintptr_t>(base.data())) + ":";
  for (const auto& c : m) key += c.to_string() + ";";
  return Field(intern(key, [&] {
    auto d = std::make_unique<FieldData>();
    d->kind = FieldKind::Extension;
    d->p = base.characteristic();
    d->base = base.data();
    d->minpoly = m;
    d->verified = verified;
    return d;
  }));
}

FieldKind Field::kind() const { return data_->kind; }

std::uint64_t Field::characteristic() const { return data_->p; }

bool Field::is_finite() const {
  return ground().kind() == FieldKind::Prime;
}

Field Field::base() const {
  if (data_->kind != FieldKind::Extension) throw Error(ErrorKind::NotAnExtension, describe() + " has no base field");
  return Field(data_->base);
}

const std::vector<Scalar>& Field::minpoly() const {
  if (data_->kind != FieldKind::Extension) throw Error(ErrorKind::NotAnExtension, describe() + " has no minpoly");
  return data_->minpoly;
}

std::size_t Field::degree() const {
  return data_->kind == FieldKind::Extension ? data_->minpoly.size() - 1 : 1;
}

bool Field::irreducibility_verified() const { return data_->verified; }

Field Field::ground() const {
  const FieldData* d = data_;
  while (d->kind == FieldKind::Extension) d = d->base;
  return Field(d);
}

bool Field::extends(const Field& other) const {
  const FieldData* d = data_;
  for (;;) {
    if (d == other.data_) return true;
    if (d->kind != FieldKind::Extension) return false;
    d = d->base;
  }
}

Scalar Field::zero() const { return Scalar(0).in(*this); }
Scalar Field::one() const { return Scalar(1).in(*this); }
Scalar Field::from_int(long long v) const { return Scalar(v).in(*this); }

Scalar Field::generator() const {
  switch (data_->kind) {
    case FieldKind::RationalFunction:
      return Scalar::ratfunc(*this, fp::Poly{0, 1}, fp::Poly{1});
    case FieldKind::Extension: {
      std::vector<Scalar> c(degree(), base().zero());
      c[1] = base().one();
      return Scalar::extension(*this, std::move(c));
    }
    default:
      throw Error(ErrorKind::UnsupportedField, describe() + " has no distinguished generator");
  }
}

Scalar Field::embed(const Scalar& base_element) const {
  if (data_->kind != FieldKind::Extension) return base_element.in(*this);
  if (base_element.field_data() == data_ || !base_element.bound()) return base_element.in(*this);
  Scalar b = base_element.field_data() == data_->base ? base_element : base().embed(base_element);
  std::vector<Scalar> c(degree(), base().zero());
  c[0] = b;
  return Scalar::extension(*this, std::move(c));
}

Scalar Field::parse(std::string_view raw) const {
  std::string s = strip(raw);
  if (s.empty()) throw Error(ErrorKind::Parse, "empty scalar");
  switch (data_->kind) {
    case FieldKind::Rationals: {
      auto slash = s.find('/');
      mpz_class num = parse_integer(s.substr(0, slash));
      mpz_class den = slash == std::string::npos ? mpz_class(1) : parse_integer(s.substr(slash + 1));
      if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + s + "'");
      mpq_class q(num, den);
      q.canonicalize();
      return Scalar::rational(*this, q);
    }
    case FieldKind::Prime: {
      auto slash = s.find('/');
      std::uint64_t num = mod_p(parse_integer(s.substr(0, slash)), data_->p);
      if (slash == std::string::npos) return Scalar::residue(*this, num);
      std::uint64_t den = mod_p(parse_integer(s.substr(slash + 1)), data_->p);
      if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + s + "'");
      return Scalar::residue(*this, fp::mul(num, fp::inv(den, data_->p), data_->p));
    }
    case FieldKind::RationalFunction: {
      auto slash = s.find('/');
      auto unwrap = [](std::string part) {
        if (part.size() >= 2 && part.front() == '(' && part.back() == ')') part = part.substr(1, part.size() - 2);
        return part;
      };
      fp::Poly num = parse_t_poly(unwrap(s.substr(0, slash)), data_->p);
      fp::Poly den = slash == std::string::npos ? fp::Poly{1} : parse_t_poly(unwrap(s.substr(slash + 1)), data_->p);
      if (den.empty()) throw Error(ErrorKind::Parse, "zero denominator in '" + s + "'");
      return Scalar::ratfunc(*this, std::move(num), std::move(den));
    }
    case FieldKind::Extension: {
      if (s.front() != '[' || s.back() != ']')
        throw Error(ErrorKind::Parse, "extension element must be a bracketed coefficient list, got '" + s + "'");
      auto parts = split_top_level(s.substr(1, s.size() - 2));
      if (parts.size() > degree())
        throw Error(ErrorKind::Parse, "too many coefficients in '" + s + "' for degree " + std::to_string(degree()));
      Field b = base();
      std::vector<Scalar> c(degree(), b.zero());
      for (std::size_t i = 0; i < parts.size(); ++i) c[i] = b.parse(parts[i]);
      return Scalar::extension(*this, std::move(c));
    }
  }
  throw Error(ErrorKind::Parse, "unknown field");
}

std::string Field::describe() const {
  switch (data_->kind) {
    case FieldKind::Rationals:
      return "QQ";
    case FieldKind::Prime:
      return "GF(" + std::to_string(data_->p) + ")";
    case FieldKind::RationalFunction:
      return "GF(" + std::to_string(data_->p) + ")(t)";
    case FieldKind::Extension: {
      std::string out = base().describe() + "[x]/(";
      out += Polynomial(base(), data_->minpoly).to_string("x");
      return out + ")";
    }
  }
  return "?";
}

// Scalar --------------------------------------------------------------------

struct ScalarOps {
  static Scalar promote(long long v, const FieldData* f) {
    switch (f->kind) {
      case FieldKind::Rationals:
        return Scalar(f, mpq_class(static_cast<long>(v)));
      case FieldKind::Prime:
        return Scalar(f, Scalar::Residue{fp::reduce(v, f->p)});
      case FieldKind::RationalFunction: {
        fp::Poly num{fp::reduce(v, f->p)};
        fp::trim(num);
        return Scalar(f, Scalar::RatFunc{std::move(num), fp::Poly{1}});
      }
      case FieldKind::Extension: {
        std::vector<Scalar> c(f->minpoly.size() - 1, promote(0, f->base));
        c[0] = promote(v, f->base);
        return Scalar(f, Scalar::ExtElem{std::move(c)});
      }
    }
    return {};
  }

  static void normalize(Scalar::RatFunc& r, std::uint64_t p) {
    if (r.num.empty()) {
      r.den = {1};
      return;
    }
    fp::Poly g = fp::gcd(r.num, r.den, p);
    if (!fp::is_one(g)) {
      r.num = fp::divmod(r.num, g, p).first;
      r.den = fp::divmod(r.den, g, p).first;
    }
    std::uint64_t c = fp::inv(r.den.back(), p);
    r.num = fp::scale(r.num, c, p);
    r.den = fp::scale(r.den, c, p);
  }

  // Makes both operands bound to the same field; returns it (or null if
  // both are unbound literals).
  static const FieldData* unify(Scalar& a, const Scalar& b, Scalar& b_store, const Scalar*& b_ref) {
    b_ref = &b;
    if (!a.field_ && !b.field_) return nullptr;
    const FieldData* f = a.field_ ? a.field_ : b.field_;
    if (a.field_ && b.field_ && a.field_ != b.field_)
      throw Error(ErrorKind::FieldMismatch,
                  Field::from_data(a.field_).describe() + " vs " + Field::from_data(b.field_).describe());
    if (!a.field_) a = promote(std::get<Scalar::Unbound>(a.rep_).value, f);
    if (!b.field_) {
      b_store = promote(std::get<Scalar::Unbound>(b.rep_).value, f);
      b_ref = &b_store;
    }
    return f;
  }

  static std::vector<Scalar> ext_mul(const std::vector<Scalar>& a, const std::vector<Scalar>& b, const FieldData* f) {
    const auto& m = f->minpoly;
    std::size_t d = m.size() - 1;
    std::vector<Scalar> r(2 * d - 1, promote(0, f->base));
    for (std::size_t i = 0; i < d; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < d; ++j) r[i + j] += a[i] * b[j];
    }
    for (std::size_t k = r.size(); k-- > d;) {
      if (r[k].is_zero()) continue;
      Scalar c = r[k];
      for (std::size_t j = 0; j <= d; ++j) r[k - d + j] -= c * m[j];
    }
    r.resize(d);
    return r;
  }

  static Scalar ext_inverse(const Scalar& a) {
    const FieldData* f = a.field_;
    Field base = Field::from_data(f->base);
    Polynomial pa(base, std::get<Scalar::ExtElem>(a.rep_).coeffs);
    Polynomial pm(base, f->minpoly);
    auto [g, s, t] = xgcd(pa, pm);
    if (g.degree() != 0)
      throw Error(ErrorKind::DivisionByZero,
                  "element " + a.to_string() + " is not invertible (minimal polynomial shares a factor)");
    std::vector<Scalar> c(f->minpoly.size() - 1, base.zero());
    for (std::size_t i = 0; i < s.coefficients().size(); ++i) c[i] = s.coefficients()[i];
    return Scalar(f, Scalar::ExtElem{std::move(c)});
  }
};

Scalar Scalar::rational(Field f, mpq_class q) {
  if (f.kind() != FieldKind::Rationals) throw Error(ErrorKind::FieldMismatch, "rational value for " + f.describe());
  q.canonicalize();
  return Scalar(f.data(), std::move(q));
}

Scalar Scalar::residue(Field f, std::uint64_t r) {
  if (f.kind() != FieldKind::Prime) throw Error(ErrorKind::FieldMismatch, "residue for " + f.describe());
  return Scalar(f.data(), Residue{r % f.characteristic()});
}

Scalar Scalar::ratfunc(Field f, fp::Poly num, fp::Poly den) {
  if (f.kind() != FieldKind::RationalFunction)
    throw Error(ErrorKind::FieldMismatch, "rational function for " + f.describe());
  std::uint64_t p = f.characteristic();
  for (auto& c : num) c %= p;
  for (auto& c : den) c %= p;
  fp::trim(num);
  fp::trim(den);
  if (den.empty()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  RatFunc r{std::move(num), std::move(den)};
  ScalarOps::normalize(r, p);
  return Scalar(f.data(), std::move(r));
}

Scalar Scalar::extension(Field f, std::vector<Scalar> coeffs) {
  if (f.kind() != FieldKind::Extension) throw Error(ErrorKind::FieldMismatch, "extension element for " + f.describe());
  Field b = f.base();
  if (coeffs.size() > f.degree()) throw Error(ErrorKind::BadSpec, "too many coefficients for " + f.describe());
  coeffs.resize(f.degree(), b.zero());
  for (auto& c : coeffs) c = c.in(b);
  return Scalar(f.data(), ExtElem{std::move(coeffs)});
}

std::optional<Field> Scalar::field() const {
  if (!field_) return std::nullopt;
  return Field::from_data(field_);
}

Scalar Scalar::in(const Field& f) const {
  if (field_ == f.data()) return *this;
  if (!field_) return ScalarOps::promote(std::get<Unbound>(rep_).value, f.data());
  throw Error(ErrorKind::FieldMismatch, "element of " + Field::from_data(field_).describe() + " used in " + f.describe());
}

bool Scalar::is_zero() const {
  switch (rep_.index()) {
    case 0:
      return std::get<Unbound>(rep_).value == 0;
    case 1:
      return std::get<mpq_class>(rep_) == 0;
    case 2:
      return std::get<Residue>(rep_).value == 0;
    case 3:
      return std::get<RatFunc>(rep_).num.empty();
    default:
      for (const auto& c : std::get<ExtElem>(rep_).coeffs)
        if (!c.is_zero()) return false;
      return true;
  }
}

bool Scalar::is_one() const {
  switch (rep_.index()) {
    case 0:
      return std::get<Unbound>(rep_).value == 1;
    case 1:
      return std::get<mpq_class>(rep_) == 1;
    case 2:
      return std::get<Residue>(rep_).value == 1;
    case 3: {
      const auto& r = std::get<RatFunc>(rep_);
      return fp::is_one(r.num) && fp::is_one(r.den);
    }
    default: {
      const auto& c = std::get<ExtElem>(rep_).coeffs;
      if (!c[0].is_one()) return false;
      for (std::size_t i = 1; i < c.size(); ++i)
        if (!c[i].is_zero()) return false;
      return true;
    }
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  switch (rep_.index()) {
    case 0: {
      long long v = std::get<Unbound>(rep_).value;
      if (v == 1 || v == -1) return Scalar(v);
      throw Error(ErrorKind::UnsupportedField, "inverse of an unbound integer literal");
    }
    case 1: {
      mpq_class q = 1 / std::get<mpq_class>(rep_);
      return Scalar(field_, std::move(q));
    }
    case 2:
      return Scalar(field_, Residue{fp::inv(std::get<Residue>(rep_).value, field_->p)});
    case 3: {
      const auto& r = std::get<RatFunc>(rep_);
      RatFunc out{r.den, r.num};
      ScalarOps::normalize(out, field_->p);
      return Scalar(field_, std::move(out));
    }
    default:
      return ScalarOps::ext_inverse(*this);
  }
}

Scalar Scalar::pow(const mpz_class& e) const {
  if (e < 0) return inverse().pow(mpz_class(-e));
  Scalar result = field_ ? ScalarOps::promote(1, field_) : Scalar(1);
  Scalar base = *this;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result *= result;
    if (mpz_tstbit(e.get_mpz_t(), i)) result *= base;
  }
  return result;
}

const mpq_class& Scalar::as_rational() const {
  if (rep_.index() != 1) throw Error(ErrorKind::FieldMismatch, "not a rational");
  return std::get<mpq_class>(rep_);
}

std::uint64_t Scalar::as_residue() const {
  if (rep_.index() != 2) throw Error(ErrorKind::FieldMismatch, "not a residue");
  return std::get<Residue>(rep_).value;
}

const Scalar::RatFunc& Scalar::as_ratfunc() const {
  if (rep_.index() != 3) throw Error(ErrorKind::FieldMismatch, "not a rational function");
  return std::get<RatFunc>(rep_);
}

const std::vector<Scalar>& Scalar::as_coeffs() const {
  if (rep_.index() != 4) throw Error(ErrorKind::FieldMismatch, "not an extension element");
  return std::get<ExtElem>(rep_).coeffs;
}

long long Scalar::as_unbound() const {
  if (rep_.index() != 0) throw Error(ErrorKind::FieldMismatch, "not an unbound literal");
  return std::get<Unbound>(rep_).value;
}

std::string Scalar::to_string() const {
  switch (rep_.index()) {
    case 0:
      return std::to_string(std::get<Unbound>(rep_).value);
    case 1:
      return std::get<mpq_class>(rep_).get_str();
    case 2:
      return std::to_string(std::get<Residue>(rep_).value);
    case 3: {
      const auto& r = std::get<RatFunc>(rep_);
      if (fp::is_one(r.den)) return poly_text(r.num, field_->p);
      auto wrap = [&](const fp::Poly& q) {
        std::size_t terms = 0;
        for (auto c : q) terms += c != 0;
        std::string t = poly_text(q, field_->p);
        return terms > 1 ? "(" + t + ")" : t;
      };
      return wrap(r.num) + "/" + wrap(r.den);
    }
    default: {
      std::string out = "[";
      const auto& c = std::get<ExtElem>(rep_).coeffs;
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ",";
        out += c[i].to_string();
      }
      return out + "]";
    }
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  Scalar store;
  const Scalar* b;
  const FieldData* f = ScalarOps::unify(*this, o, store, b);
  if (!f) {
    std::get<Unbound>(rep_).value += std::get<Unbound>(o.rep_).value;
    return *this;
  }
  switch (f->kind) {
    case FieldKind::Rationals:
      std::get<mpq_class>(rep_) += std::get<mpq_class>(b->rep_);
      break;
    case FieldKind::Prime: {
      auto& r = std::get<Residue>(rep_).value;
      r = fp::add(r, std::get<Residue>(b->rep_).value, f->p);
      break;
    }
    case FieldKind::RationalFunction: {
      auto& x = std::get<RatFunc>(rep_);
      const auto& y = std::get<RatFunc>(b->rep_);
      if (y.num.empty()) break;
      if (x.den == y.den) {
        x.num = fp::add(x.num, y.num, f->p);
      } else {
        x.num = fp::add(fp::mul(x.num, y.den, f->p), fp::mul(y.num, x.den, f->p), f->p);
        x.den = fp::mul(x.den, y.den, f->p);
      }
      ScalarOps::normalize(x, f->p);
      break;
    }
    case FieldKind::Extension: {
      auto& x = std::get<ExtElem>(rep_).coeffs;
      const auto& y = std::get<ExtElem>(b->rep_).coeffs;
      for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
      break;
    }
  }
  return *this;
}

Scalar Scalar::operator-() const {
  switch (rep_.index()) {
    case 0:
      return Scalar(-std::get<Unbound>(rep_).value);
    case 1:
      return Scalar(field_, mpq_class(-std::get<mpq_class>(rep_)));
    case 2:
      return Scalar(field_, Residue{fp::sub(0, std::get<Residue>(rep_).value, field_->p)});
    case 3: {
      auto r = std::get<RatFunc>(rep_);
      r.num = fp::sub(fp::Poly{}, r.num, field_->p);
      return Scalar(field_, std::move(r));
    }
    default: {
      auto c = std::get<ExtElem>(rep_).coeffs;
      for (auto& x : c) x = -x;
      return Scalar(field_, ExtElem{std::move(c)});
    }
  }
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  Scalar store;
  const Scalar* b;
  const FieldData* f = ScalarOps::unify(*this, o, store, b);
  if (!f) {
    std::get<Unbound>(rep_).value *= std::get<Unbound>(o.rep_).value;
    return *this;
  }
  switch (f->kind) {
    case FieldKind::Rationals:
      std::get<mpq_class>(rep_) *= std::get<mpq_class>(b->rep_);
      break;
    case FieldKind::Prime: {
      auto& r = std::get<Residue>(rep_).value;
      r = fp::mul(r, std::get<Residue>(b->rep_).value, f->p);
      break;
    }
    case FieldKind::RationalFunction: {
      auto& x = std::get<RatFunc>(rep_);
      const auto& y = std::get<RatFunc>(b->rep_);
      x.num = fp::mul(x.num, y.num, f->p);
      x.den = fp::mul(x.den, y.den, f->p);
      ScalarOps::normalize(x, f->p);
      break;
    }
    case FieldKind::Extension: {
      auto& x = std::get<ExtElem>(rep_).coeffs;
      x = ScalarOps::ext_mul(x, std::get<ExtElem>(b->rep_).coeffs, f);
      break;
    }
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  if (!o.field_ && !field_) {
    long long d = std::get<Unbound>(o.rep_).value;
    long long& v = std::get<Unbound>(rep_).value;
    if (v % d != 0) throw Error(ErrorKind::UnsupportedField, "inexact division of unbound integer literals");
    v /= d;
    return *this;
  }
  const FieldData* f = field_ ? field_ : o.field_;
  Scalar d = o.in(Field::from_data(f));
  return *this *= d.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!a.field_ && !b.field_) return std::get<Scalar::Unbound>(a.rep_).value == std::get<Scalar::Unbound>(b.rep_).value;
  if (a.field_ && b.field_ && a.field_ != b.field_)
    throw Error(ErrorKind::FieldMismatch,
                Field::from_data(a.field_).describe() + " vs " + Field::from_data(b.field_).describe());
  const FieldData* f = a.field_ ? a.field_ : b.field_;
  Field field = Field::from_data(f);
  Scalar x = a.in(field), y = b.in(field);
  switch (f->kind) {
    case FieldKind::Rationals:
      return std::get<mpq_class>(x.rep_) == std::get<mpq_class>(y.rep_);
    case FieldKind::Prime:
      return std::get<Scalar::Residue>(x.rep_).value == std::get<Scalar::Residue>(y.rep_).value;
    case FieldKind::RationalFunction: {
      const auto& r = std::get<Scalar::RatFunc>(x.rep_);
      const auto& s = std::get<Scalar::RatFunc>(y.rep_);
      return r.num == s.num && r.den == s.den;
    }
    case FieldKind::Extension:
      return std::get<Scalar::ExtElem>(x.rep_).coeffs == std::get<Scalar::ExtElem>(y.rep_).coeffs;
  }
  return false;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

bool canonical_less(const Scalar& a, const Scalar& b) {
  if (a.field_data() == b.field_data() && a.bound()) {
    switch (a.field()->kind()) {
      case FieldKind::Rationals:
        return a.as_rational() < b.as_rational();
      case FieldKind::Prime:
        return a.as_residue() < b.as_residue();
      case FieldKind::Extension: {
        const auto& x = a.as_coeffs();
        const auto& y = b.as_coeffs();
        for (std::size_t i = x.size(); i-- > 0;) {
          if (canonical_less(x[i], y[i])) return true;
          if (canonical_less(y[i], x[i])) return false;
        }
        return false;
      }
      default:
        break;
    }
  }
  std::string sa = a.to_string(), sb = b.to_string();
  if (sa.size() != sb.size()) return sa.size() < sb.size();
  return sa < sb;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) return 0;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  for (;;) {
    std::uint64_t v = rng();
    if (v < limit) return v % n;
  }
}

Scalar random_scalar(const Field& f, std::mt19937_64& rng, int bound) {
  auto small = [&] { return static_cast<long long>(uniform_below(rng, 2 * bound + 1)) - bound; };
  switch (f.kind()) {
    case FieldKind::Rationals: {
      long long num = small();
      long long den = static_cast<long long>(uniform_below(rng, bound)) + 1;
      return Scalar::rational(f, mpq_class(static_cast<long>(num), static_cast<unsigned long>(den)));
    }
    case FieldKind::Prime:
      return Scalar::residue(f, uniform_below(rng, f.characteristic()));
    case FieldKind::RationalFunction: {
      std::uint64_t p = f.characteristic();
      fp::Poly num(3), den(3);
      for (auto& c : num) c = uniform_below(rng, p);
      fp::trim(num);
      do {
        den.assign(3, 0);
        for (auto& c : den) c = uniform_below(rng, p);
        fp::trim(den);
      } while (den.empty());
      return Scalar::ratfunc(f, num, den);
    }
    case FieldKind::Extension: {
      std::vector<Scalar> c;
      for (std::size_t i = 0; i < f.degree(); ++i) c.push_back(random_scalar(f.base(), rng, bound));
      return Scalar::extension(f, std::move(c));
    }
  }
  return {};
}

}  // namespace pca
