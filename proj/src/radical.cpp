#include "pca/radical.hpp"

#include <cstdint>

#include "pca/wedderburn.hpp"

namespace pca {

const char* to_string(RadicalMethod m) {
  switch (m) {
    case RadicalMethod::TraceForm:
      return "trace_form";
    case RadicalMethod::CharPChain:
      return "char_p_chain";
    case RadicalMethod::BruteForce:
      return "brute_force";
  }
  return "?";
}

namespace {

using u64 = std::uint64_t;
using IMat = std::vector<u64>;  // row-major n x n

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m); }

IMat imul(const IMat& a, const IMat& b, std::size_t n, u64 m) {
  IMat c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      u64 x = a[i * n + k];
      if (!x) continue;
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] = (c[i * n + j] + mulmod(x, b[k * n + j], m)) % m;
    }
  return c;
}

u64 trace_of_power(IMat x, std::size_t n, u64 e, u64 m) {
  IMat r(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) r[i * n + i] = 1 % m;
  while (e) {
    if (e & 1) r = imul(r, x, n, m);
    e >>= 1;
    if (e) x = imul(x, x, n, m);
  }
  u64 t = 0;
  for (std::size_t i = 0; i < n; ++i) t = (t + r[i * n + i]) % m;
  return t;
}

// Left regular representation over GF(p) with entries in [0, p).
struct ResidueTable {
  std::size_t n;
  u64 p;
  std::vector<IMat> left;  // L_{e_k}

  explicit ResidueTable(const FinAlg& a) : n(static_cast<std::size_t>(a.dim())), p(a.field().characteristic()) {
    for (Index k = 0; k < a.dim(); ++k) {
      IMat m(n * n, 0);
      const Matrix& l = a.left_basis(k);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i * n + j] = l(static_cast<Index>(i), static_cast<Index>(j)).as_residue();
      left.push_back(std::move(m));
    }
  }

  IMat left_of(const std::vector<u64>& z) const {
    IMat m(n * n, 0);
    for (std::size_t k = 0; k < n; ++k) {
      if (!z[k]) continue;
      for (std::size_t t = 0; t < n * n; ++t) m[t] = (m[t] + mulmod(z[k], left[k][t], p)) % p;
    }
    return m;
  }
};

std::vector<u64> residues(const Vector& v) {
  std::vector<u64> out;
  for (Index i = 0; i < v.rows(); ++i) out.push_back(v(i).as_residue());
  return out;
}

Subspace trace_form_kernel(const FinAlg& a) {
  const Field& f = a.field();
  const Index n = a.dim();
  std::vector<Scalar> tr;
  for (Index k = 0; k < n; ++k) {
    Scalar t = f.zero();
    for (Index i = 0; i < n; ++i) t += a.left_basis(k)(i, i);
    tr.push_back(t);
  }
  Matrix form = zeros(f, n, n);
  for (const auto& c : a.structure_constants()) form(c.j, c.i) += c.value * tr[static_cast<std::size_t>(c.k)];
  return Subspace::span(f, n, nullspace(form));
}

// Descending chain over GF(p): I_{-1} = A, and I_i is the set of x in I_{i-1}
// with g_i(xy) = 0 for all y, where g_i(z) = tr(L~_z^{p^i}) / p^i mod p for
// the integer lift L~_z. Stops at i = floor(log_p(dim)).
Subspace prime_chain(const FinAlg& a) {
  const Field& f = a.field();
  const Index n = a.dim();
  const u64 p = f.characteristic();
  ResidueTable table(a);
  Subspace current = Subspace::whole(f, n);
  u64 pi = 1;  // p^i
  for (int i = 0;; ++i) {
    if (i > 0) {
      if (pi > static_cast<u64>(n) / p) break;
      pi *= p;
    }
    const u64 modulus = pi * p;
    Matrix cond = zeros(f, current.dim(), n);
    for (Index b = 0; b < current.dim(); ++b) {
      Vector x = current.basis_vector(b);
      for (Index j = 0; j < n; ++j) {
        std::vector<u64> z = residues(apply(a.right_basis(j), x));
        u64 t = trace_of_power(table.left_of(z), static_cast<std::size_t>(n), pi, modulus);
        if (t % pi != 0)
          throw Error(ErrorKind::InternalVerificationFailed, "trace of p-power not divisible by p^" + std::to_string(i));
        cond(b, j) = f.from_int(static_cast<long long>(t / pi));
      }
    }
    Matrix kernel = nullspace(cond.transpose());
    std::vector<Vector> next;
    for (Index r = 0; r < kernel.rows(); ++r) {
      Vector v = zero_vector(f, n);
      for (Index b = 0; b < current.dim(); ++b)
        if (!kernel(r, b).is_zero()) v += kernel(r, b) * current.basis_vector(b);
      next.push_back(v);
    }
    current = Subspace::span(f, n, next);
    if (current.is_zero()) break;
  }
  return current;
}

struct RawRadical {
  Subspace space;
  RadicalMethod method;
};

RawRadical raw_radical(const FinAlg& a) {
  const Field& f = a.field();
  Field ground = f.ground();
  if (ground.kind() == FieldKind::RationalFunction)
    throw Error(ErrorKind::UnsupportedField, "radical over " + f.describe() + " is not supported");
  if (a.dim() == 1) return {Subspace(f, 1), RadicalMethod::TraceForm};
  const u64 p = f.characteristic();
  if (p == 0 || p > static_cast<u64>(a.dim())) return {trace_form_kernel(a), RadicalMethod::TraceForm};
  if (f.kind() == FieldKind::Prime) return {prime_chain(a), RadicalMethod::CharPChain};
  FinAlg r = restrict_scalars(a, ground);
  Subspace rj = prime_chain(r);
  std::vector<Vector> back;
  for (Index b = 0; b < rj.dim(); ++b) back.push_back(unrestrict_vector(a, ground, rj.basis_vector(b)));
  return {Subspace::span(f, a.dim(), back), RadicalMethod::CharPChain};
}

}  // namespace

std::vector<Ideal> power_filtration(const FinAlg& a, const Ideal& j) {
  std::vector<Ideal> out{j};
  while (!out.back().space().is_zero()) {
    if (static_cast<Index>(out.size()) > a.dim())
      throw Error(ErrorKind::InternalVerificationFailed, "ideal is not nilpotent");
    Subspace next = product_space(a, out.back().space(), j.space());
    if (next == out.back().space()) throw Error(ErrorKind::InternalVerificationFailed, "ideal is not nilpotent");
    out.push_back(Ideal::make(a, next, Side::TwoSided));
  }
  return out;
}

RadicalResult radical(const FinAlg& a) {
  RawRadical raw = raw_radical(a);
  auto fail = [](const std::string& what) { return Error(ErrorKind::InternalVerificationFailed, what); };
  std::optional<Ideal> j;
  try {
    j = Ideal::make(a, raw.space, Side::TwoSided);
  } catch (const Error& e) {
    throw fail(std::string("computed radical is not an ideal: ") + e.what());
  }
  std::vector<Ideal> filtration = power_filtration(a, *j);
  if (!j->space().is_zero()) {
    Quotient q = quotient(a, *j);
    if (!raw_radical(q.algebra).space.is_zero()) throw fail("A/J has a nonzero radical");
  }
  int index = j->space().is_zero() ? 0 : static_cast<int>(filtration.size());
  return RadicalResult{*j, std::move(filtration), index, raw.method, true};
}

bool is_semisimple(const FinAlg& a) { return radical(a).radical.space().is_zero(); }

Ideal radical_oracle(const FinAlg& a) {
  const Field& f = a.field();
  if (f.kind() != FieldKind::Prime) throw Error(ErrorKind::UnsupportedField, "the oracle needs a prime field");
  const u64 p = f.characteristic();
  const std::size_t n = static_cast<std::size_t>(a.dim());
  u64 count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    count *= p;
    if (count > (u64{1} << 16)) throw Error(ErrorKind::TooLarge, "p^dim exceeds 2^16");
  }
  ResidueTable table(a);
  std::vector<u64> mult(n * n * n, 0);
  for (const auto& c : a.structure_constants())
    mult[(static_cast<std::size_t>(c.i) * n + static_cast<std::size_t>(c.j)) * n + static_cast<std::size_t>(c.k)] = c.value.as_residue();
  std::vector<u64> unit = residues(a.unit());

  auto digits = [&](u64 code) {
    std::vector<u64> v(n);
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = code % p;
      code /= p;
    }
    return v;
  };
  auto full_rank = [&](IMat m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
      std::size_t piv = rank;
      while (piv < n && m[piv * n + col] == 0) ++piv;
      if (piv == n) return false;
      for (std::size_t t = 0; t < n; ++t) std::swap(m[rank * n + t], m[piv * n + t]);
      u64 inv = fp::inv(m[rank * n + col], p);
      for (std::size_t t = 0; t < n; ++t) m[rank * n + t] = mulmod(m[rank * n + t], inv, p);
      for (std::size_t r = 0; r < n; ++r) {
        if (r == rank || m[r * n + col] == 0) continue;
        u64 c = m[r * n + col];
        for (std::size_t t = 0; t < n; ++t) m[r * n + t] = (m[r * n + t] + p - mulmod(c, m[rank * n + t], p)) % p;
      }
      ++rank;
    }
    return rank == n;
  };

  std::vector<Vector> members;
  for (u64 xc = 0; xc < count; ++xc) {
    std::vector<u64> x = digits(xc);
    bool in = true;
    for (u64 yc = 0; yc < count && in; ++yc) {
      std::vector<u64> y = digits(yc);
      std::vector<u64> w = unit;  // 1 - yx
      for (std::size_t i = 0; i < n; ++i) {
        if (!y[i]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (!x[j]) continue;
          u64 yx = mulmod(y[i], x[j], p);
          for (std::size_t k = 0; k < n; ++k) {
            u64 c = mult[(i * n + j) * n + k];
            if (c) w[k] = (w[k] + p - mulmod(yx, c, p)) % p;
          }
        }
      }
      in = full_rank(table.left_of(w));
    }
    if (!in) continue;
    Vector v(static_cast<Index>(n));
    for (std::size_t i = 0; i < n; ++i) v(static_cast<Index>(i)) = f.from_int(static_cast<long long>(x[i]));
    members.push_back(v);
  }
  Subspace s = Subspace::span(f, a.dim(), members);
  u64 expected = 1;
  for (Index i = 0; i < s.dim(); ++i) expected *= p;
  if (expected != members.size())
    throw Error(ErrorKind::InternalVerificationFailed, "oracle set is not a linear subspace");
  return Ideal::make(a, s, Side::TwoSided);
}

Ideal maximal_twosided_intersection(const FinAlg& a) {
  RadicalResult r = radical(a);
  Quotient q = quotient(a, r.radical);
  BlockDecomposition d = central_idempotents(q.algebra);
  const Field& f = a.field();
  Subspace meet = Subspace::whole(f, a.dim());
  for (const Vector& e : d.idempotents) {
    Vector comp = q.algebra.unit() - e;
    std::vector<Vector> gens = r.radical.space().basis_vectors();
    for (Index i = 0; i < q.algebra.dim(); ++i) gens.push_back(apply(q.lift, q.algebra.mul(comp, q.algebra.basis_vector(i))));
    meet = meet.intersect(Subspace::span(f, a.dim(), gens));
  }
  if (meet != r.radical.space())
    throw Error(ErrorKind::TheoremViolation, "intersection of maximal two-sided ideals differs from J(A)");
  return Ideal::make(a, meet, Side::TwoSided);
}

}  // namespace pca
