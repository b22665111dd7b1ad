#include "pca/fp_poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "pca/field.hpp"

namespace pca::fp {

std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + p - b; }

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw Error(ErrorKind::DivisionByZero, "inverse of 0 in GF(" + std::to_string(p) + ")");
  // extended Euclid on signed 128-bit values
  __int128 r0 = p, r1 = a % p, s0 = 0, s1 = 1;
  while (r1 != 0) {
    __int128 q = r0 / r1;
    __int128 t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  s0 %= static_cast<__int128>(p);
  if (s0 < 0) s0 += p;
  return static_cast<std::uint64_t>(s0);
}

std::uint64_t reduce(long long v, std::uint64_t p) {
  __int128 r = static_cast<__int128>(v) % static_cast<__int128>(p);
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

bool is_one(const Poly& f) { return f.size() == 1 && f[0] == 1; }

Poly add(const Poly& f, const Poly& g, std::uint64_t p) {
  Poly r(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = add(r[i], g[i], p);
  trim(r);
  return r;
}

Poly sub(const Poly& f, const Poly& g, std::uint64_t p) {
  Poly r(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = sub(r[i], g[i], p);
  trim(r);
  return r;
}

Poly mul(const Poly& f, const Poly& g, std::uint64_t p) {
  if (f.empty() || g.empty()) return {};
  Poly r(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) r[i + j] = add(r[i + j], mul(f[i], g[j], p), p);
  }
  trim(r);
  return r;
}

Poly scale(const Poly& f, std::uint64_t c, std::uint64_t p) {
  Poly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = mul(f[i], c, p);
  trim(r);
  return r;
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g, std::uint64_t p) {
  if (g.empty()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  Poly r = f;
  if (r.size() < g.size()) return {{}, r};
  Poly q(r.size() - g.size() + 1, 0);
  std::uint64_t lead_inv = inv(g.back(), p);
  for (std::size_t k = q.size(); k-- > 0;) {
    std::uint64_t c = mul(r[k + g.size() - 1], lead_inv, p);
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) r[k + j] = sub(r[k + j], mul(c, g[j], p), p);
  }
  trim(q);
  trim(r);
  return {q, r};
}

Poly rem(const Poly& f, const Poly& g, std::uint64_t p) { return divmod(f, g, p).second; }

Poly monic(const Poly& f, std::uint64_t p) {
  if (f.empty()) return f;
  return scale(f, inv(f.back(), p), p);
}

Poly gcd(Poly f, Poly g, std::uint64_t p) {
  while (!g.empty()) {
    Poly r = rem(f, g, p);
    f = std::move(g);
    g = std::move(r);
  }
  return monic(f, p);
}

XGcd xgcd(const Poly& f, const Poly& h, std::uint64_t p) {
  Poly r0 = f, r1 = h, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
  trim(s0);
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s = sub(s0, mul(q, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s);
    Poly t = sub(t0, mul(q, t1, p), p);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.empty()) return {r0, s0, t0};
  std::uint64_t c = inv(r0.back(), p);
  return {scale(r0, c, p), scale(s0, c, p), scale(t0, c, p)};
}

Poly derivative(const Poly& f, std::uint64_t p) {
  if (f.size() <= 1) return {};
  Poly r(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = mul(f[i], i % p, p);
  trim(r);
  return r;
}

Poly pow_mod(const Poly& base, const mpz_class& e, const Poly& modulus, std::uint64_t p) {
  Poly result = rem(Poly{1}, modulus, p);
  Poly b = rem(base, modulus, p);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, p), modulus, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b, p), modulus, p);
  }
  return result;
}

namespace {

using Factors = std::vector<std::pair<Poly, int>>;

Factors squarefree(const Poly& f, std::uint64_t p) {
  Factors out;
  Poly c = gcd(f, derivative(f, p), p);
  Poly w = divmod(f, c, p).first;
  int i = 1;
  while (degree(w) > 0) {
    Poly y = gcd(w, c, p);
    Poly z = divmod(w, y, p).first;
    if (degree(z) > 0) out.emplace_back(monic(z, p), i);
    ++i;
    w = y;
    c = divmod(c, y, p).first;
  }
  if (degree(c) > 0) {
    // c is a p-th power; coefficients of F_p are fixed by Frobenius
    Poly root(c.size() / p + 1, 0);
    for (std::size_t k = 0; k < c.size(); k += p) root[k / p] = c[k];
    trim(root);
    for (auto& [g, m] : squarefree(root, p)) out.emplace_back(g, m * static_cast<int>(p));
  }
  return out;
}

std::vector<std::pair<Poly, int>> distinct_degree(Poly f, std::uint64_t p) {
  std::vector<std::pair<Poly, int>> out;
  Poly x = {0, 1};
  Poly h = rem(x, f, p);
  int d = 1;
  while (degree(f) >= 2 * d) {
    h = pow_mod(h, mpz_class(static_cast<unsigned long>(p)), f, p);
    Poly g = gcd(sub(h, x, p), f, p);
    if (degree(g) > 0) {
      out.emplace_back(g, d);
      f = divmod(f, g, p).first;
      h = rem(h, f, p);
    }
    ++d;
  }
  if (degree(f) > 0) out.emplace_back(monic(f, p), degree(f));
  return out;
}

void equal_degree(const Poly& f, int d, std::uint64_t p, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (degree(f) == d) {
    out.push_back(monic(f, p));
    return;
  }
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), p, static_cast<unsigned long>(d));
  for (;;) {
    Poly a(static_cast<std::size_t>(degree(f)));
    for (auto& c : a) c = uniform_below(rng, p);
    trim(a);
    if (degree(a) < 1) continue;
    Poly b;
    if (p == 2) {
      Poly term = a;
      b = a;
      for (int i = 1; i < d; ++i) {
        term = rem(mul(term, term, p), f, p);
        b = add(b, term, p);
      }
    } else {
      mpz_class e = (q - 1) / 2;
      b = sub(pow_mod(a, e, f, p), Poly{1}, p);
    }
    Poly g = gcd(b, f, p);
    if (degree(g) > 0 && degree(g) < degree(f)) {
      equal_degree(g, d, p, rng, out);
      equal_degree(divmod(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<Poly, int>> factor(const Poly& f, std::uint64_t p, std::mt19937_64& rng) {
  if (f.empty()) throw Error(ErrorKind::BadSpec, "cannot factor the zero polynomial");
  std::vector<std::pair<Poly, int>> out;
  if (degree(f) == 0) return out;
  for (auto& [part, mult] : squarefree(monic(f, p), p)) {
    for (auto& [block, d] : distinct_degree(part, p)) {
      std::vector<Poly> irreducibles;
      equal_degree(block, d, p, rng, irreducibles);
      for (auto& g : irreducibles) out.emplace_back(std::move(g), mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  return out;
}

}  // namespace pca::fp
