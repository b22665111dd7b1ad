#include "pca/wedderburn.hpp"

#include <algorithm>
#include <random>

#include "pca/radical.hpp"

namespace pca {

Subspace center(const FinAlg& a) {
  const Index n = a.dim();
  Matrix sys = zeros(a.field(), n * n, n);
  for (Index i = 0; i < n; ++i) sys.block(i * n, 0, n, n) = a.left_basis(i) - a.right_basis(i);
  return Subspace::span(a.field(), n, nullspace(sys));
}

namespace {

// Subspace of A spanned by the given elements, as an algebra with unit `unit`.
struct SubAlg {
  FinAlg algebra;
  Matrix embedding;  // columns are the basis in A
};

SubAlg subalgebra_on(const FinAlg& a, const Subspace& s, const Vector& unit) {
  const Index d = s.dim();
  auto basis = s.basis_vectors();
  std::vector<StructureConstant> mult;
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      Vector c = s.coordinates(a.mul(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]));
      for (Index k = 0; k < d; ++k)
        if (!c(k).is_zero()) mult.push_back({i, j, k, c(k)});
    }
  std::vector<std::string> labels;
  for (Index i = 0; i < d; ++i) labels.push_back("b" + std::to_string(i));
  Matrix emb = zeros(a.field(), a.dim(), d);
  for (Index i = 0; i < d; ++i) emb.col(i) = basis[static_cast<std::size_t>(i)];
  return {FinAlg::make(a.field(), labels, mult, s.coordinates(unit)), emb};
}

// Splits the central idempotent e by the CRT idempotents of the squarefree
// minimal polynomial of z (an element of Ce).
std::vector<Vector> split_by(const FinAlg& a, const Vector& z, const Vector& e, const std::vector<FactorTerm>& fs,
                             const Polynomial& mu) {
  std::vector<Vector> out;
  for (const auto& t : fs) {
    Polynomial cof = mu / t.factor;
    PolyXGcd g = xgcd(cof, t.factor);  // s*cof + ... = 1
    Polynomial idem = (g.s * cof) % mu;
    out.push_back(evaluate(a, idem, z, e));
  }
  return out;
}

class Splitter {
 public:
  Splitter(const FinAlg& a, const Subspace& c, std::uint64_t seed) : a_(a), center_(c), rng_(seed) {}

  void run(const Vector& e, std::vector<Vector>& out) {
    const Field& f = a_.field();
    // Ce, spanned by e times a basis of the center
    std::vector<Vector> gens;
    for (Index i = 0; i < center_.dim(); ++i) gens.push_back(a_.mul(center_.basis_vector(i), e));
    Subspace ce = Subspace::span(f, a_.dim(), gens);
    if (ce.dim() == 1) {
      out.push_back(e);
      return;
    }
    std::optional<std::vector<Vector>> parts =
        f.kind() == FieldKind::Prime ? split_finite(ce, e) : split_rational(ce, e);
    if (!parts) {
      out.push_back(e);
      return;
    }
    for (const auto& p : *parts) run(p, out);
  }

 private:
  std::vector<FactorTerm> squarefree_factors(const Polynomial& mu) {
    auto fs = factor(mu, seed_++);
    for (const auto& t : fs)
      if (t.multiplicity > 1) throw Error(ErrorKind::NotSemisimple, "the center contains a nonzero nilpotent");
    return fs;
  }

  // Berlekamp: the fixed space of z -> z^p on Ce has dimension equal to the
  // number of fields in Ce, and its non-scalar elements split e.
  std::optional<std::vector<Vector>> split_finite(const Subspace& ce, const Vector& e) {
    const Field& f = a_.field();
    const std::uint64_t p = f.characteristic();
    const Index d = ce.dim();
    Matrix frob = zeros(f, d, d);
    for (Index k = 0; k < d; ++k) {
      Vector zk = ce.basis_vector(k);
      frob.col(k) = ce.coordinates(a_.pow(zk, p)) - unit_vector(f, d, k);
    }
    Matrix fixed = nullspace(frob);
    if (fixed.rows() == 1) return std::nullopt;
    Subspace line = Subspace::span(f, a_.dim(), std::vector<Vector>{e});
    for (Index r = 0; r < fixed.rows(); ++r) {
      Vector z = zero_vector(f, a_.dim());
      for (Index k = 0; k < d; ++k)
        if (!fixed(r, k).is_zero()) z += fixed(r, k) * ce.basis_vector(k);
      if (line.contains(z)) continue;
      Polynomial mu = minimal_polynomial(a_, z, e);
      auto fs = squarefree_factors(mu);
      if (fs.size() < 2) throw Error(ErrorKind::InternalVerificationFailed, "fixed element with irreducible minimal polynomial");
      return split_by(a_, z, e, fs, mu);
    }
    throw Error(ErrorKind::InternalVerificationFailed, "fixed space has no non-scalar element");
  }

  // Over QQ: a random (then exhaustively searched) element z of Ce. A reducible
  // minimal polynomial splits e; an irreducible one of degree dim Ce shows Ce
  // is a field.
  std::optional<std::vector<Vector>> split_rational(const Subspace& ce, const Vector& e) {
    const Field& f = a_.field();
    const Index d = ce.dim();
    auto attempt = [&](const std::vector<long long>& coeffs) -> std::optional<std::optional<std::vector<Vector>>> {
      Vector z = zero_vector(f, a_.dim());
      for (Index k = 0; k < d; ++k)
        if (coeffs[static_cast<std::size_t>(k)] != 0) z += f.from_int(coeffs[static_cast<std::size_t>(k)]) * ce.basis_vector(k);
      Polynomial mu = minimal_polynomial(a_, z, e);
      auto fs = squarefree_factors(mu);
      if (fs.size() >= 2) return std::optional<std::vector<Vector>>(split_by(a_, z, e, fs, mu));
      if (mu.degree() == d) return std::optional<std::vector<Vector>>(std::nullopt);
      return std::nullopt;
    };
    for (int t = 0; t < 16; ++t) {
      std::vector<long long> c;
      for (Index k = 0; k < d; ++k) c.push_back(static_cast<long long>(uniform_below(rng_, 21)) - 10);
      if (auto r = attempt(c)) return *r;
    }
    for (long long bound = 1; bound <= 64; ++bound) {
      // all coefficient vectors with entries in [-bound, bound] and max |c| = bound
      std::vector<long long> c(static_cast<std::size_t>(d), -bound);
      for (;;) {
        long long m = 0;
        for (auto x : c) m = std::max(m, x < 0 ? -x : x);
        if (m == bound)
          if (auto r = attempt(c)) return *r;
        std::size_t pos = 0;
        while (pos < c.size() && c[pos] == bound) c[pos++] = -bound;
        if (pos == c.size()) break;
        ++c[pos];
      }
    }
    throw Error(ErrorKind::InternalVerificationFailed, "no element generating the center was found");
  }

  const FinAlg& a_;
  const Subspace& center_;
  std::mt19937_64 rng_;
  std::uint64_t seed_ = 0;
};

bool vector_less(const Vector& x, const Vector& y) {
  for (Index i = 0; i < x.rows(); ++i) {
    if (x(i) == y(i)) continue;
    return canonical_less(x(i), y(i));
  }
  return false;
}

// Primitive central idempotents of an algebra over QQ or GF(p).
std::vector<Vector> ground_idempotents(const FinAlg& a, std::uint64_t seed) {
  Subspace c = center(a);
  Splitter s(a, c, seed);
  std::vector<Vector> out;
  s.run(a.unit(), out);
  return out;
}

}  // namespace

BlockDecomposition central_idempotents(const FinAlg& a, std::uint64_t seed) {
  const Field& f = a.field();
  Field ground = f.ground();
  if (ground.kind() == FieldKind::RationalFunction)
    throw Error(ErrorKind::UnsupportedField, "central idempotents over " + f.describe() + " are not supported");
  if (!is_semisimple(a)) throw Error(ErrorKind::NotSemisimple, "J(A) is nonzero");

  std::vector<Vector> idem;
  if (f == ground) {
    idem = ground_idempotents(a, seed);
  } else {
    // Idempotents do not depend on the field of scalars.
    FinAlg r = restrict_scalars(a, ground);
    for (const Vector& e : ground_idempotents(r, seed)) idem.push_back(unrestrict_vector(a, ground, e));
  }

  // exact checks: complete, orthogonal, central
  Subspace z = center(a);
  Vector sum = a.zero();
  for (std::size_t i = 0; i < idem.size(); ++i) {
    sum += idem[i];
    if (!z.contains(idem[i])) throw Error(ErrorKind::InternalVerificationFailed, "idempotent is not central");
    for (std::size_t j = 0; j < idem.size(); ++j) {
      Vector prod = a.mul(idem[i], idem[j]);
      if (!equal(prod, i == j ? idem[i] : a.zero()))
        throw Error(ErrorKind::InternalVerificationFailed, "idempotents are not orthogonal");
    }
  }
  if (!equal(sum, a.unit())) throw Error(ErrorKind::InternalVerificationFailed, "idempotents do not sum to 1");

  struct Entry {
    Vector e;
    SubAlg block;
  };
  std::vector<Entry> entries;
  for (const Vector& e : idem) {
    std::vector<Vector> gens;
    for (Index i = 0; i < a.dim(); ++i) gens.push_back(a.mul(a.basis_vector(i), e));
    Subspace ae = Subspace::span(f, a.dim(), gens);
    entries.push_back({e, subalgebra_on(a, ae, e)});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
    if (x.block.algebra.dim() != y.block.algebra.dim()) return x.block.algebra.dim() < y.block.algebra.dim();
    return vector_less(x.e, y.e);
  });

  BlockDecomposition out{{}, {}, {}, {}, AlgHom::identity(a)};
  std::vector<Matrix> parts;
  for (auto& en : entries) {
    const FinAlg& b = en.block.algebra;
    Index cdim = center(b).dim();
    BlockData data{b.dim(), cdim, std::nullopt};
    if (f.is_finite()) {
      if (b.dim() % cdim != 0) throw Error(ErrorKind::InternalVerificationFailed, "center dimension does not divide block dimension");
      Index sq = b.dim() / cdim, n = 0;
      while ((n + 1) * (n + 1) <= sq) ++n;
      if (n * n != sq) throw Error(ErrorKind::InternalVerificationFailed, "block is not a full matrix algebra over its center");
      data.matrix_degree = n;
    }
    out.idempotents.push_back(en.e);
    out.blocks.push_back(b);
    out.embeddings.push_back(en.block.embedding);
    out.block_data.push_back(data);
  }

  // a -> (coordinates of a e_i in block i)
  FinAlg prod = direct_product(out.blocks);
  Matrix m = zeros(f, prod.dim(), a.dim());
  Index row = 0;
  for (std::size_t t = 0; t < out.blocks.size(); ++t) {
    std::vector<Vector> cols;
    for (Index c = 0; c < out.embeddings[t].cols(); ++c) cols.push_back(out.embeddings[t].col(c));
    Subspace s = Subspace::span(f, a.dim(), cols);
    for (Index i = 0; i < a.dim(); ++i) m.block(row, i, s.dim(), 1) = s.coordinates(a.mul(a.basis_vector(i), out.idempotents[t]));
    row += s.dim();
  }
  out.reassembly = AlgHom::make(m, a, prod);
  if (!out.reassembly.is_injective() || !out.reassembly.is_surjective())
    throw Error(ErrorKind::InternalVerificationFailed, "blocks do not reassemble to A");
  return out;
}

Vector crt_lift(const FinAlg& a, const std::vector<Ideal>& ideals, const std::vector<Vector>& targets) {
  if (ideals.empty() || ideals.size() != targets.size())
    throw Error(ErrorKind::BadSpec, "crt_lift needs one target per ideal");
  const Field& f = a.field();
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    if (!ideals[i].algebra().same_table(a)) throw Error(ErrorKind::AmbientMismatch, "ideal of another algebra");
    if (ideals[i].side() == Side::Right) throw Error(ErrorKind::NotAnIdeal, "crt_lift needs left or two-sided ideals");
    if (!ideals[i].is_proper()) throw Error(ErrorKind::ImproperIdeal, "ideal " + std::to_string(i) + " is the whole algebra");
    for (std::size_t j = i + 1; j < ideals.size(); ++j)
      if (!(ideals[i].space() + ideals[j].space()).is_whole())
        throw Error(ErrorKind::NotCoprime, "ideals " + std::to_string(i) + " and " + std::to_string(j) + " are not coprime");
  }
  std::vector<Vector> t = targets;
  for (auto& v : t) {
    if (v.rows() != a.dim()) throw Error(ErrorKind::AmbientMismatch, "target has the wrong length");
    bind_to(v, f);
  }

  Vector b = t[0];
  Subspace meet = ideals[0].space();
  for (std::size_t n = 1; n < ideals.size(); ++n) {
    const Subspace& in = ideals[n].space();
    // 1 = x + y with x in I_1 ∩ ... ∩ I_{n-1}, y in I_n
    Matrix cols = hstack(meet.basis().transpose(), in.basis().transpose());
    auto sol = solve(cols, a.unit());
    if (!sol) throw Error(ErrorKind::NoSolutionInconsistency, "1 is not in I_1...I_{n-1} + I_n");
    Vector x = zero_vector(f, a.dim()), y = zero_vector(f, a.dim());
    for (Index k = 0; k < meet.dim(); ++k) x += (*sol)(k) * meet.basis_vector(k);
    for (Index k = 0; k < in.dim(); ++k) y += (*sol)(meet.dim() + k) * in.basis_vector(k);
    b = a.mul(b, y) + a.mul(t[n], x);
    meet = meet.intersect(in);
  }
  for (std::size_t i = 0; i < ideals.size(); ++i)
    if (!ideals[i].space().contains(Vector(b - t[i])))
      throw Error(ErrorKind::NoSolutionInconsistency, "lift misses target " + std::to_string(i));
  return b;
}

}  // namespace pca
