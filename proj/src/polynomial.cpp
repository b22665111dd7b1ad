#include "pca/polynomial.hpp"

#include <algorithm>
#include <functional>

namespace pca {

Polynomial::Polynomial(Field f, std::vector<Scalar> coeffs) : field_(f), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c = c.in(field_);
  trim();
}

Polynomial Polynomial::constant(Field f, const Scalar& c) { return Polynomial(f, {c}); }

Polynomial Polynomial::monomial(Field f, const Scalar& c, std::size_t degree) {
  std::vector<Scalar> v(degree + 1, f.zero());
  v[degree] = c;
  return Polynomial(f, std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Polynomial::check(const Polynomial& o) const {
  if (field_ != o.field_)
    throw Error(ErrorKind::FieldMismatch, "polynomials over " + field_.describe() + " and " + o.field_.describe());
}

Scalar Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_.zero(); }

Scalar Polynomial::leading() const { return coeffs_.empty() ? field_.zero() : coeffs_.back(); }

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Scalar inv = leading().inverse();
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c *= inv;
  return r;
}

Polynomial Polynomial::derivative() const {
  std::vector<Scalar> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * field_.from_int(static_cast<long long>(i)));
  return Polynomial(field_, std::move(d));
}

Scalar Polynomial::eval(const Scalar& at) const {
  Scalar r = field_.zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * at + coeffs_[i];
  return r;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k].is_zero()) continue;
    std::string c = coeffs_[k].to_string();
    bool simple = field_.kind() == FieldKind::Rationals || field_.kind() == FieldKind::Prime;
    if (!out.empty()) {
      if (simple && c[0] == '-') {
        out += "-";
        c = c.substr(1);
      } else {
        out += "+";
      }
    } else if (simple && c[0] == '-' && k > 0) {
      out += "-";
      c = c.substr(1);
    }
    if (k == 0) {
      out += simple ? c : "(" + c + ")";
      continue;
    }
    if (c != "1") out += simple ? c + "*" : "(" + c + ")*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check(o);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_.zero());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  check(o);
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Scalar> r(coeffs_.size() + o.coeffs_.size() - 1, field_.zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

Polynomial operator*(const Scalar& c, const Polynomial& p) {
  return Polynomial::constant(p.field(), c) * p;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

PolyDivMod divmod(const Polynomial& f, const Polynomial& g) {
  if (f.field() != g.field()) throw Error(ErrorKind::FieldMismatch, "divmod over different fields");
  if (g.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  Field k = f.field();
  std::vector<Scalar> r = f.coefficients();
  const auto& gc = g.coefficients();
  if (r.size() < gc.size()) return {Polynomial(k), f};
  std::vector<Scalar> q(r.size() - gc.size() + 1, k.zero());
  Scalar lead_inv = g.leading().inverse();
  for (std::size_t i = q.size(); i-- > 0;) {
    Scalar c = r[i + gc.size() - 1] * lead_inv;
    q[i] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < gc.size(); ++j) r[i + j] -= c * gc[j];
  }
  return {Polynomial(k, std::move(q)), Polynomial(k, std::move(r))};
}

Polynomial operator/(const Polynomial& f, const Polynomial& g) { return divmod(f, g).quotient; }
Polynomial operator%(const Polynomial& f, const Polynomial& g) { return divmod(f, g).remainder; }

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

PolyXGcd xgcd(const Polynomial& a, const Polynomial& b) {
  Field k = a.field();
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(k, k.one()), s1(k);
  Polynomial t0(k), t1 = Polynomial::constant(k, k.one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Polynomial s = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s);
    Polynomial t = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Scalar c = r0.leading().inverse();
  return {c * r0, c * s0, c * t0};
}

bool factor_order_less(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (canonical_less(x[i], y[i])) return true;
    if (canonical_less(y[i], x[i])) return false;
  }
  return false;
}

namespace {

// Integer polynomials, low-to-high.
using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly zmul(const ZPoly& f, const ZPoly& g) {
  if (f.empty() || g.empty()) return {};
  ZPoly r(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) r[i + j] += f[i] * g[j];
  ztrim(r);
  return r;
}

ZPoly zmod(const ZPoly& f, const mpz_class& m) {
  ZPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) mpz_fdiv_r(r[i].get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
  ztrim(r);
  return r;
}

// Symmetric residues in (-m/2, m/2].
ZPoly zsymmetric(const ZPoly& f, const mpz_class& m) {
  ZPoly r = zmod(f, m);
  mpz_class half = m / 2;
  for (auto& c : r)
    if (c > half) c -= m;
  ztrim(r);
  return r;
}

mpz_class zcontent(const ZPoly& f) {
  mpz_class g = 0;
  for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly zprimitive(ZPoly f) {
  mpz_class c = zcontent(f);
  if (c == 0) return f;
  if (f.back() < 0) c = -c;
  for (auto& x : f) x /= c;
  return f;
}

// Exact division over Z; returns false if g does not divide f.
bool zdivide(const ZPoly& f, const ZPoly& g, ZPoly& q) {
  ZPoly r = f;
  if (r.size() < g.size()) return r.empty() ? (q = {}, true) : false;
  q.assign(r.size() - g.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    const mpz_class& top = r[i + g.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), g.back().get_mpz_t())) return false;
    mpz_class c = top / g.back();
    q[i] = c;
    for (std::size_t j = 0; j < g.size(); ++j) r[i + j] -= c * g[j];
  }
  for (const auto& c : r)
    if (c != 0) return false;
  ztrim(q);
  return true;
}

fp::Poly to_fp(const ZPoly& f, std::uint64_t p) {
  fp::Poly r(f.size());
  mpz_class t;
  for (std::size_t i = 0; i < f.size(); ++i) {
    mpz_fdiv_r_ui(t.get_mpz_t(), f[i].get_mpz_t(), static_cast<unsigned long>(p));
    r[i] = t.get_ui();
  }
  fp::trim(r);
  return r;
}

ZPoly from_fp(const fp::Poly& f) {
  ZPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = static_cast<unsigned long>(f[i]);
  return r;
}

// Lifts monic F = G*H (mod p) to mod p^k with G, H monic; F is monic mod p^k.
void hensel_lift(const ZPoly& F, ZPoly& G, ZPoly& H, std::uint64_t p, unsigned k) {
  fp::Poly g = to_fp(G, p), h = to_fp(H, p);
  auto bez = fp::xgcd(g, h, p);  // s*g + t*h = 1
  mpz_class pj = static_cast<unsigned long>(p);
  mpz_class pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), p, k);
  for (unsigned j = 1; j < k; ++j) {
    ZPoly diff = F;
    ZPoly gh = zmul(G, H);
    if (diff.size() < gh.size()) diff.resize(gh.size(), 0);
    for (std::size_t i = 0; i < gh.size(); ++i) diff[i] -= gh[i];
    ztrim(diff);
    for (auto& c : diff) c /= pj;  // exact: F == GH mod p^j
    fp::Poly e = to_fp(diff, p);
    auto [q, dg] = fp::divmod(fp::mul(e, bez.t, p), g, p);
    fp::Poly dh = fp::add(fp::mul(e, bez.s, p), fp::mul(q, h, p), p);
    ZPoly DG = from_fp(dg), DH = from_fp(dh);
    for (std::size_t i = 0; i < DG.size(); ++i) G[i] += pj * DG[i];
    for (std::size_t i = 0; i < DH.size(); ++i) H[i] += pj * DH[i];
    pj *= p;
  }
  G = zmod(G, pk);
  H = zmod(H, pk);
}

std::vector<ZPoly> factor_squarefree_z(const ZPoly& f, std::mt19937_64& rng) {
  int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};
  const mpz_class lc = f.back();

  std::uint64_t p = 3;
  fp::Poly fbar;
  for (;; p += 2) {
    if (!fp::is_prime(p)) continue;
    if (mpz_divisible_ui_p(lc.get_mpz_t(), static_cast<unsigned long>(p))) continue;
    fbar = to_fp(f, p);
    if (fp::degree(fp::gcd(fbar, fp::derivative(fbar, p), p)) == 0) break;
  }
  auto modp = fp::factor(fbar, p, rng);
  if (modp.size() == 1) return {f};

  // Landau-Mignotte style bound on factor coefficients, times |lc|.
  mpz_class maxc = 0;
  for (const auto& c : f) maxc = std::max(maxc, mpz_class(abs(c)));
  mpz_class bound = maxc * (n + 1);
  bound <<= n;
  bound *= abs(lc);
  unsigned k = 1;
  mpz_class pk = static_cast<unsigned long>(p);
  while (pk <= 2 * bound) {
    pk *= p;
    ++k;
  }

  // Monic F = lc^{-1} f mod p^k.
  mpz_class lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t());
  ZPoly F = f;
  for (auto& c : F) c *= lc_inv;
  F = zmod(F, pk);

  std::vector<ZPoly> lifted;
  ZPoly rest = F;
  for (std::size_t i = 0; i + 1 < modp.size(); ++i) {
    ZPoly G = from_fp(modp[i].first);
    fp::Poly hbar{1};
    for (std::size_t j = i + 1; j < modp.size(); ++j) hbar = fp::mul(hbar, modp[j].first, p);
    ZPoly H = from_fp(hbar);
    hensel_lift(rest, G, H, p, k);
    lifted.push_back(G);
    rest = H;
  }
  lifted.push_back(rest);

  // Zassenhaus recombination over subsets of increasing size.
  std::vector<ZPoly> found;
  ZPoly current = f;
  std::vector<std::size_t> alive(lifted.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
  std::size_t s = 1;
  while (2 * s <= alive.size()) {
    bool progress = false;
    std::vector<std::size_t> pick(s);
    std::function<bool(std::size_t, std::size_t)> search = [&](std::size_t start, std::size_t depth) -> bool {
      if (depth == s) {
        ZPoly cand{current.back()};
        for (auto idx : pick) cand = zmod(zmul(cand, lifted[alive[idx]]), pk);
        cand = zprimitive(zsymmetric(cand, pk));
        ZPoly q;
        if (!cand.empty() && zdivide(current, cand, q)) {
          found.push_back(cand);
          current = q;
          std::vector<std::size_t> next;
          for (std::size_t i = 0; i < alive.size(); ++i)
            if (std::find(pick.begin(), pick.end(), i) == pick.end()) next.push_back(alive[i]);
          alive = next;
          return true;
        }
        return false;
      }
      for (std::size_t i = start; i < alive.size(); ++i) {
        pick[depth] = i;
        if (search(i + 1, depth + 1)) return true;
      }
      return false;
    };
    while (2 * s <= alive.size() && search(0, 0)) progress = true;
    (void)progress;
    ++s;
  }
  if (current.size() > 1) found.push_back(zprimitive(current));
  return found;
}

std::vector<FactorTerm> squarefree_rational(const Polynomial& f) {
  // Yun's algorithm in characteristic zero.
  std::vector<FactorTerm> out;
  Polynomial fm = f.monic();
  Polynomial d = fm.derivative();
  Polynomial a = gcd(fm, d);
  Polynomial b = fm / a;
  Polynomial c = d / a;
  Polynomial e = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Polynomial g = gcd(b, e);
    if (g.degree() > 0) out.push_back({g, i});
    b = b / g;
    c = e / g;
    e = c - b.derivative();
    ++i;
  }
  return out;
}

}  // namespace

std::vector<FactorTerm> factor(const Polynomial& f, std::uint64_t seed) {
  if (f.is_zero()) throw Error(ErrorKind::BadSpec, "cannot factor the zero polynomial");
  Field k = f.field();
  std::mt19937_64 rng(seed);
  std::vector<FactorTerm> out;
  if (k.kind() == FieldKind::Prime) {
    std::uint64_t p = k.characteristic();
    fp::Poly g;
    for (const auto& c : f.coefficients()) g.push_back(c.as_residue());
    for (auto& [h, m] : fp::factor(g, p, rng)) {
      std::vector<Scalar> c;
      for (auto v : h) c.push_back(Scalar::residue(k, v));
      out.push_back({Polynomial(k, std::move(c)), m});
    }
  } else if (k.kind() == FieldKind::Rationals) {
    for (auto& [part, mult] : squarefree_rational(f)) {
      // clear denominators
      mpz_class l = 1;
      for (const auto& c : part.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.as_rational().get_den_mpz_t());
      ZPoly z;
      for (const auto& c : part.coefficients()) z.push_back(mpz_class(c.as_rational() * l));
      z = zprimitive(z);
      for (auto& g : factor_squarefree_z(z, rng)) {
        std::vector<Scalar> c;
        for (auto& v : g) c.push_back(Scalar::rational(k, mpq_class(v)));
        out.push_back({Polynomial(k, std::move(c)).monic(), mult});
      }
    }
  } else {
    throw Error(ErrorKind::UnsupportedField, "factorization over " + k.describe() + " is not supported");
  }
  std::sort(out.begin(), out.end(), [](const FactorTerm& a, const FactorTerm& b) {
    if (a.factor != b.factor) return factor_order_less(a.factor, b.factor);
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

bool is_irreducible(const Polynomial& f) {
  if (f.degree() < 1) return false;
  auto fs = factor(f);
  return fs.size() == 1 && fs[0].multiplicity == 1;
}

}  // namespace pca
