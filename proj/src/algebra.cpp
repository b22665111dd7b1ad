#include "pca/algebra.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace pca {

struct FinAlg::Impl {
  Field field;
  Index dim;
  std::vector<std::string> labels;
  std::vector<StructureConstant> mult;
  Vector unit;
  std::vector<Vector> products;  // e_i e_j at i * dim + j
  std::vector<Matrix> left;      // L_{e_i}
  std::vector<Matrix> right;     // R_{e_i}
};

namespace {

std::string index_triple(Index i, Index j, Index k) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) + ")";
}

std::vector<StructureConstant> canonical_constants(const Field& f, Index n, std::vector<StructureConstant> mult) {
  std::map<std::tuple<Index, Index, Index>, Scalar> acc;
  for (auto& c : mult) {
    if (c.i < 0 || c.j < 0 || c.k < 0 || c.i >= n || c.j >= n || c.k >= n)
      throw Error(ErrorKind::BadSpec, "structure constant index out of range " + index_triple(c.i, c.j, c.k));
    auto [it, fresh] = acc.try_emplace({c.i, c.j, c.k}, f.zero());
    it->second += c.value.in(f);
  }
  std::vector<StructureConstant> out;
  for (auto& [key, v] : acc)
    if (!v.is_zero()) out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), v});
  return out;
}

}  // namespace

FinAlg FinAlg::make(Field f, std::vector<std::string> labels, std::vector<StructureConstant> mult,
                    std::optional<Vector> unit) {
  const Index n = static_cast<Index>(labels.size());
  if (n == 0) throw Error(ErrorKind::BadSpec, "algebra of dimension 0");
  auto impl = std::make_shared<Impl>(Impl{f, n, std::move(labels), canonical_constants(f, n, std::move(mult)), {}, {}, {}, {}});

  impl->products.assign(static_cast<std::size_t>(n * n), zero_vector(f, n));
  impl->left.assign(static_cast<std::size_t>(n), zeros(f, n, n));
  impl->right.assign(static_cast<std::size_t>(n), zeros(f, n, n));
  for (const auto& c : impl->mult) {
    impl->products[static_cast<std::size_t>(c.i * n + c.j)](c.k) = c.value;
    impl->left[static_cast<std::size_t>(c.i)](c.k, c.j) = c.value;
    impl->right[static_cast<std::size_t>(c.j)](c.k, c.i) = c.value;
  }

  // associativity on all basis triples: (e_i e_j) e_k = e_i (e_j e_k)
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Vector& ij = impl->products[static_cast<std::size_t>(i * n + j)];
      for (Index k = 0; k < n; ++k) {
        Vector lhs = apply(impl->right[static_cast<std::size_t>(k)], ij);
        Vector rhs = apply(impl->left[static_cast<std::size_t>(i)], impl->products[static_cast<std::size_t>(j * n + k)]);
        if (!equal(lhs, rhs))
          throw Error(ErrorKind::NotAssociative, "(e_i e_j) e_k != e_i (e_j e_k) at " + index_triple(i, j, k));
      }
    }

  auto is_identity = [&](const Vector& u) {
    Matrix lu = zeros(f, n, n), ru = zeros(f, n, n);
    for (Index i = 0; i < n; ++i) {
      if (u(i).is_zero()) continue;
      lu += u(i) * impl->left[static_cast<std::size_t>(i)];
      ru += u(i) * impl->right[static_cast<std::size_t>(i)];
    }
    Matrix id = identity(f, n);
    return equal(lu, id) && equal(ru, id);
  };

  if (unit) {
    if (unit->rows() != n) throw Error(ErrorKind::BadSpec, "unit vector has wrong length");
    Vector u = *unit;
    bind_to(u, f);
    if (!is_identity(u)) throw Error(ErrorKind::NoUnit, "declared unit is not a two-sided identity");
    impl->unit = u;
  } else {
    // u e_j = e_j and e_j u = e_j for all j, as a linear system in u
    Matrix sys = zeros(f, 2 * n * n, n);
    Vector rhs = zero_vector(f, 2 * n * n);
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        Index r = j * n + k;
        for (Index i = 0; i < n; ++i) {
          sys(r, i) = impl->products[static_cast<std::size_t>(i * n + j)](k);
          sys(n * n + r, i) = impl->products[static_cast<std::size_t>(j * n + i)](k);
        }
        if (j == k) rhs(r) = rhs(n * n + r) = f.one();
      }
    auto u = solve(sys, rhs);
    if (!u) throw Error(ErrorKind::NoUnit, "no two-sided identity exists");
    Vector uu = *u;
    bind_to(uu, f);
    impl->unit = uu;
  }
  return FinAlg(std::move(impl));
}

const Field& FinAlg::field() const { return impl_->field; }
Index FinAlg::dim() const { return impl_->dim; }
const std::vector<std::string>& FinAlg::labels() const { return impl_->labels; }
const std::vector<StructureConstant>& FinAlg::structure_constants() const { return impl_->mult; }
const Vector& FinAlg::unit() const { return impl_->unit; }

Vector FinAlg::zero() const { return zero_vector(impl_->field, impl_->dim); }

Vector FinAlg::basis_vector(Index i) const { return unit_vector(impl_->field, impl_->dim, i); }

Vector FinAlg::mul(const Vector& x, const Vector& y) const {
  const Index n = impl_->dim;
  if (x.rows() != n || y.rows() != n) throw Error(ErrorKind::AmbientMismatch, "element has wrong length");
  Vector r = zero();
  for (const auto& c : impl_->mult) {
    const Scalar& a = x(c.i);
    if (a.is_zero()) continue;
    const Scalar& b = y(c.j);
    if (b.is_zero()) continue;
    r(c.k) += a * b * c.value;
  }
  return r;
}

const Vector& FinAlg::basis_product(Index i, Index j) const {
  return impl_->products[static_cast<std::size_t>(i * impl_->dim + j)];
}

Vector FinAlg::pow(const Vector& x, std::uint64_t n) const {
  Vector r = impl_->unit;
  Vector b = x;
  while (n) {
    if (n & 1) r = mul(r, b);
    n >>= 1;
    if (n) b = mul(b, b);
  }
  return r;
}

Matrix FinAlg::left_mul(const Vector& x) const {
  Matrix m = zeros(impl_->field, impl_->dim, impl_->dim);
  for (const auto& c : impl_->mult)
    if (!x(c.i).is_zero()) m(c.k, c.j) += x(c.i) * c.value;
  return m;
}

Matrix FinAlg::right_mul(const Vector& x) const {
  Matrix m = zeros(impl_->field, impl_->dim, impl_->dim);
  for (const auto& c : impl_->mult)
    if (!x(c.j).is_zero()) m(c.k, c.i) += x(c.j) * c.value;
  return m;
}

const Matrix& FinAlg::left_basis(Index i) const { return impl_->left[static_cast<std::size_t>(i)]; }
const Matrix& FinAlg::right_basis(Index i) const { return impl_->right[static_cast<std::size_t>(i)]; }

bool FinAlg::is_commutative() const {
  for (Index i = 0; i < dim(); ++i)
    for (Index j = i + 1; j < dim(); ++j)
      if (!equal(basis_product(i, j), basis_product(j, i))) return false;
  return true;
}

bool FinAlg::same_table(const FinAlg& o) const {
  if (impl_ == o.impl_) return true;
  if (field() != o.field() || dim() != o.dim() || !equal(unit(), o.unit())) return false;
  const auto& a = structure_constants();
  const auto& b = o.structure_constants();
  if (a.size() != b.size()) return false;
  for (std::size_t t = 0; t < a.size(); ++t)
    if (a[t].i != b[t].i || a[t].j != b[t].j || a[t].k != b[t].k || a[t].value != b[t].value) return false;
  return true;
}

// Ideals --------------------------------------------------------------------

const char* to_string(Side s) {
  switch (s) {
    case Side::Left:
      return "left";
    case Side::Right:
      return "right";
    case Side::TwoSided:
      return "twosided";
  }
  return "?";
}

Ideal Ideal::make(const FinAlg& a, Subspace space, Side side) {
  if (space.ambient() != a.dim() || space.field() != a.field())
    throw Error(ErrorKind::AmbientMismatch, "ideal basis does not live in the algebra");
  for (Index b = 0; b < space.dim(); ++b) {
    Vector v = space.basis_vector(b);
    for (Index i = 0; i < a.dim(); ++i) {
      if (side != Side::Right && !space.contains(apply(a.left_basis(i), v)))
        throw Error(ErrorKind::NotAnIdeal, "not closed under left multiplication by " + a.labels()[static_cast<std::size_t>(i)]);
      if (side != Side::Left && !space.contains(apply(a.right_basis(i), v)))
        throw Error(ErrorKind::NotAnIdeal, "not closed under right multiplication by " + a.labels()[static_cast<std::size_t>(i)]);
    }
  }
  return Ideal(a, std::move(space), side);
}

Ideal ideal_closure(const FinAlg& a, const std::vector<Vector>& generators, Side side) {
  Subspace s = Subspace::span(a.field(), a.dim(), generators);
  for (;;) {
    std::vector<Vector> next = s.basis_vectors();
    for (Index b = 0; b < s.dim(); ++b) {
      Vector v = s.basis_vector(b);
      for (Index i = 0; i < a.dim(); ++i) {
        if (side != Side::Right) next.push_back(apply(a.left_basis(i), v));
        if (side != Side::Left) next.push_back(apply(a.right_basis(i), v));
      }
    }
    Subspace grown = Subspace::span(a.field(), a.dim(), next);
    if (grown.dim() == s.dim()) break;
    s = std::move(grown);
  }
  return Ideal::make(a, std::move(s), side);
}

Subspace product_space(const FinAlg& a, const Subspace& u, const Subspace& v) {
  std::vector<Vector> prods;
  for (Index i = 0; i < u.dim(); ++i)
    for (Index j = 0; j < v.dim(); ++j) prods.push_back(a.mul(u.basis_vector(i), v.basis_vector(j)));
  return Subspace::span(a.field(), a.dim(), prods);
}

// Homomorphisms ---------------------------------------------------------------

AlgHom AlgHom::make(Matrix matrix, FinAlg source, FinAlg target) {
  if (source.field() != target.field()) throw Error(ErrorKind::FieldMismatch, "homomorphism between different fields");
  if (matrix.rows() != target.dim() || matrix.cols() != source.dim())
    throw Error(ErrorKind::BadSpec, "homomorphism matrix has the wrong shape");
  bind_to(matrix, source.field());
  if (!equal(pca::apply(matrix, source.unit()), target.unit()))
    throw Error(ErrorKind::NotAHom, "phi(1) != 1");
  std::vector<Vector> img;
  for (Index i = 0; i < source.dim(); ++i) img.push_back(matrix.col(i));
  for (Index i = 0; i < source.dim(); ++i)
    for (Index j = 0; j < source.dim(); ++j) {
      Vector lhs = pca::apply(matrix, source.basis_product(i, j));
      Vector rhs = target.mul(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(j)]);
      if (!equal(lhs, rhs))
        throw Error(ErrorKind::NotAHom, "phi(e_i e_j) != phi(e_i) phi(e_j) for (" + source.labels()[static_cast<std::size_t>(i)] +
                                            ", " + source.labels()[static_cast<std::size_t>(j)] + ")");
    }
  return AlgHom(std::move(matrix), std::move(source), std::move(target));
}

AlgHom AlgHom::identity(const FinAlg& a) { return make(pca::identity(a.field(), a.dim()), a, a); }

Vector AlgHom::apply(const Vector& x) const { return pca::apply(matrix_, x); }

Subspace AlgHom::image(const Subspace& u) const { return pca::image(matrix_, u, target_.field()); }

bool AlgHom::is_surjective() const { return rank(matrix_) == target_.dim(); }

bool AlgHom::is_injective() const { return rank(matrix_) == source_.dim(); }

Ideal AlgHom::kernel() const {
  return Ideal::make(source_, Subspace::span(source_.field(), source_.dim(), nullspace(matrix_)), Side::TwoSided);
}

AlgHom AlgHom::compose(const AlgHom& inner) const {
  if (!inner.target_.same_table(source_)) throw Error(ErrorKind::BadSpec, "composition of non-composable homomorphisms");
  return make(product(matrix_, inner.matrix_), inner.source_, target_);
}

AlgHom hom_check(const Matrix& matrix, const FinAlg& source, const FinAlg& target) {
  return AlgHom::make(matrix, source, target);
}

// Quotients -------------------------------------------------------------------

Quotient quotient(const FinAlg& a, const Ideal& ideal) {
  if (ideal.side() != Side::TwoSided) throw Error(ErrorKind::NotAnIdeal, "quotient needs a two-sided ideal");
  if (!ideal.is_proper()) throw Error(ErrorKind::ImproperIdeal, "quotient by the whole algebra");
  const Subspace& s = ideal.space();
  const Field& f = a.field();
  auto reps = s.non_pivots();
  const Index q = static_cast<Index>(reps.size());
  Matrix proj = s.quotient_map();

  std::vector<std::string> labels;
  for (Index r : reps) labels.push_back(a.labels()[static_cast<std::size_t>(r)]);
  std::vector<StructureConstant> mult;
  for (Index x = 0; x < q; ++x)
    for (Index y = 0; y < q; ++y) {
      Vector img = apply(proj, a.basis_product(reps[static_cast<std::size_t>(x)], reps[static_cast<std::size_t>(y)]));
      for (Index k = 0; k < q; ++k)
        if (!img(k).is_zero()) mult.push_back({x, y, k, img(k)});
    }
  Vector unit = apply(proj, a.unit());
  FinAlg qa = FinAlg::make(f, std::move(labels), std::move(mult), unit);

  Matrix lift = zeros(f, a.dim(), q);
  for (Index x = 0; x < q; ++x) lift(reps[static_cast<std::size_t>(x)], x) = f.one();
  return Quotient{qa, AlgHom::make(proj, a, qa), lift};
}

// Constructions ---------------------------------------------------------------

namespace {

std::string power_label(const std::string& var, std::size_t k) {
  if (k == 0) return "1";
  if (k == 1) return var;
  return var + "^" + std::to_string(k);
}

}  // namespace

FinAlg group_algebra(std::size_t n, const Field& f) {
  if (n == 0) throw Error(ErrorKind::BadSpec, "cyclic group of order 0");
  std::vector<std::string> labels;
  std::vector<StructureConstant> mult;
  const Index m = static_cast<Index>(n);
  for (Index i = 0; i < m; ++i) {
    labels.push_back(power_label("g", static_cast<std::size_t>(i)));
    for (Index j = 0; j < m; ++j) mult.push_back({i, j, (i + j) % m, f.one()});
  }
  return FinAlg::make(f, std::move(labels), std::move(mult), unit_vector(f, m, 0));
}

FinAlg matrix_algebra(std::size_t n, const Field& f) {
  if (n == 0) throw Error(ErrorKind::BadSpec, "matrix algebra of size 0");
  const Index m = static_cast<Index>(n);
  std::vector<std::string> labels;
  std::vector<StructureConstant> mult;
  auto idx = [m](Index r, Index c) { return r * m + c; };
  for (Index r = 0; r < m; ++r)
    for (Index c = 0; c < m; ++c) labels.push_back("E" + std::to_string(r + 1) + std::to_string(c + 1));
  for (Index r = 0; r < m; ++r)
    for (Index c = 0; c < m; ++c)
      for (Index d = 0; d < m; ++d) mult.push_back({idx(r, c), idx(c, d), idx(r, d), f.one()});
  Vector unit = zero_vector(f, m * m);
  for (Index r = 0; r < m; ++r) unit(idx(r, r)) = f.one();
  return FinAlg::make(f, std::move(labels), std::move(mult), unit);
}

FinAlg upper_triangular(std::size_t n, const Field& f) {
  if (n == 0) throw Error(ErrorKind::BadSpec, "triangular algebra of size 0");
  const Index m = static_cast<Index>(n);
  std::map<std::pair<Index, Index>, Index> index;
  std::vector<std::string> labels;
  for (Index r = 0; r < m; ++r)
    for (Index c = r; c < m; ++c) {
      index[{r, c}] = static_cast<Index>(labels.size());
      labels.push_back("E" + std::to_string(r + 1) + std::to_string(c + 1));
    }
  std::vector<StructureConstant> mult;
  for (auto& [rc, i] : index)
    for (auto& [cd, j] : index)
      if (rc.second == cd.first) mult.push_back({i, j, index[{rc.first, cd.second}], f.one()});
  Vector unit = zero_vector(f, static_cast<Index>(labels.size()));
  for (Index r = 0; r < m; ++r) unit(index[{r, r}]) = f.one();
  return FinAlg::make(f, std::move(labels), std::move(mult), unit);
}

FinAlg truncated_polynomial(std::size_t n, const Field& f) {
  if (n == 0) throw Error(ErrorKind::BadSpec, "k[x]/(x^0) is the zero algebra");
  const Index m = static_cast<Index>(n);
  std::vector<std::string> labels;
  std::vector<StructureConstant> mult;
  for (Index i = 0; i < m; ++i) {
    labels.push_back(power_label("x", static_cast<std::size_t>(i)));
    for (Index j = 0; i + j < m; ++j) mult.push_back({i, j, i + j, f.one()});
  }
  return FinAlg::make(f, std::move(labels), std::move(mult), unit_vector(f, m, 0));
}

FinAlg polynomial_quotient(const Polynomial& modulus) {
  if (modulus.degree() < 1) throw Error(ErrorKind::BadSpec, "k[x]/(f) needs deg f >= 1");
  const Field& f = modulus.field();
  Polynomial m = modulus.monic();
  const Index d = m.degree();
  std::vector<std::string> labels;
  std::vector<StructureConstant> mult;
  for (Index i = 0; i < d; ++i) labels.push_back(power_label("x", static_cast<std::size_t>(i)));
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      Polynomial r = Polynomial::monomial(f, f.one(), static_cast<std::size_t>(i + j)) % m;
      for (Index k = 0; k <= r.degree(); ++k)
        if (!r.coeff(static_cast<std::size_t>(k)).is_zero()) mult.push_back({i, j, k, r.coeff(static_cast<std::size_t>(k))});
    }
  return FinAlg::make(f, std::move(labels), std::move(mult), unit_vector(f, d, 0));
}

FinAlg field_extension_algebra(const Field& e) {
  Field base = e.base();
  std::vector<Scalar> m = e.minpoly();
  return polynomial_quotient(Polynomial(base, m));
}

FinAlg direct_product(const std::vector<FinAlg>& factors) {
  if (factors.empty()) throw Error(ErrorKind::BadSpec, "direct product of no algebras");
  const Field& f = factors.front().field();
  std::vector<std::string> labels;
  std::vector<StructureConstant> mult;
  std::vector<Scalar> unit;
  Index offset = 0;
  for (std::size_t t = 0; t < factors.size(); ++t) {
    const FinAlg& a = factors[t];
    if (a.field() != f) throw Error(ErrorKind::FieldMismatch, "direct product over different fields");
    for (const auto& l : a.labels()) labels.push_back("(" + std::to_string(t + 1) + ")" + l);
    for (const auto& c : a.structure_constants()) mult.push_back({c.i + offset, c.j + offset, c.k + offset, c.value});
    for (Index i = 0; i < a.dim(); ++i) unit.push_back(a.unit()(i));
    offset += a.dim();
  }
  Vector u(offset);
  for (Index i = 0; i < offset; ++i) u(i) = unit[static_cast<std::size_t>(i)];
  return FinAlg::make(f, std::move(labels), std::move(mult), u);
}

FinAlg opposite(const FinAlg& a) {
  std::vector<StructureConstant> mult;
  for (const auto& c : a.structure_constants()) mult.push_back({c.j, c.i, c.k, c.value});
  return FinAlg::make(a.field(), a.labels(), std::move(mult), a.unit());
}

FinAlg tensor(const FinAlg& a, const FinAlg& b) {
  if (a.field() != b.field()) throw Error(ErrorKind::FieldMismatch, "tensor product over different fields");
  const Index m = b.dim();
  std::vector<std::string> labels;
  for (const auto& x : a.labels())
    for (const auto& y : b.labels()) labels.push_back(x + "⊗" + y);
  std::vector<StructureConstant> mult;
  for (const auto& c : a.structure_constants())
    for (const auto& d : b.structure_constants())
      mult.push_back({c.i * m + d.i, c.j * m + d.j, c.k * m + d.k, c.value * d.value});
  Vector unit = zero_vector(a.field(), a.dim() * m);
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < m; ++j) unit(i * m + j) = a.unit()(i) * b.unit()(j);
  return FinAlg::make(a.field(), std::move(labels), std::move(mult), unit);
}

FinAlg base_change(const FinAlg& a, const Field& e) {
  if (e == a.field()) return a;
  if (!e.extends(a.field()))
    throw Error(ErrorKind::NotAnExtension, e.describe() + " is not an extension of " + a.field().describe());
  std::vector<StructureConstant> mult;
  for (const auto& c : a.structure_constants()) mult.push_back({c.i, c.j, c.k, e.embed(c.value)});
  Vector unit(a.dim());
  for (Index i = 0; i < a.dim(); ++i) unit(i) = e.embed(a.unit()(i));
  return FinAlg::make(e, a.labels(), std::move(mult), unit);
}

namespace {

// One level: A over E (degree d over F = E.base()) -> algebra over F.
FinAlg restrict_once(const FinAlg& a) {
  const Field& e = a.field();
  Field f = e.base();
  const Index d = static_cast<Index>(e.degree());
  const Index n = a.dim();
  std::vector<Scalar> alpha_pows;  // alpha^s for s < 2d - 1
  Scalar x = e.one();
  for (Index s = 0; s < 2 * d - 1; ++s) {
    alpha_pows.push_back(x);
    x *= e.generator();
  }
  std::vector<std::string> labels;
  for (Index i = 0; i < n; ++i)
    for (Index r = 0; r < d; ++r)
      labels.push_back(a.labels()[static_cast<std::size_t>(i)] + (r == 0 ? "" : "*" + power_label("a", static_cast<std::size_t>(r))));
  std::vector<StructureConstant> mult;
  for (const auto& c : a.structure_constants())
    for (Index r = 0; r < d; ++r)
      for (Index s = 0; s < d; ++s) {
        Scalar v = c.value * alpha_pows[static_cast<std::size_t>(r + s)];
        const auto& coords = v.as_coeffs();
        for (Index t = 0; t < d; ++t)
          if (!coords[static_cast<std::size_t>(t)].is_zero())
            mult.push_back({c.i * d + r, c.j * d + s, c.k * d + t, coords[static_cast<std::size_t>(t)]});
      }
  Vector unit = zero_vector(f, n * d);
  for (Index i = 0; i < n; ++i) {
    const auto& coords = a.unit()(i).as_coeffs();
    for (Index t = 0; t < d; ++t) unit(i * d + t) = coords[static_cast<std::size_t>(t)];
  }
  return FinAlg::make(f, std::move(labels), std::move(mult), unit);
}

Vector unrestrict(const Field& e, Index n, const Field& ground, const Vector& v) {
  if (e == ground) return v;
  Field f = e.base();
  const Index d = static_cast<Index>(e.degree());
  Vector w = unrestrict(f, n * d, ground, v);
  Vector out(n);
  for (Index i = 0; i < n; ++i) {
    std::vector<Scalar> c;
    for (Index r = 0; r < d; ++r) c.push_back(w(i * d + r));
    out(i) = Scalar::extension(e, std::move(c));
  }
  return out;
}

}  // namespace

FinAlg restrict_scalars(const FinAlg& a, const Field& ground) {
  if (!a.field().extends(ground))
    throw Error(ErrorKind::NotAnExtension, a.field().describe() + " does not extend " + ground.describe());
  FinAlg cur = a;
  while (cur.field() != ground) cur = restrict_once(cur);
  return cur;
}

Vector unrestrict_vector(const FinAlg& original, const Field& ground, const Vector& v) {
  return unrestrict(original.field(), original.dim(), ground, v);
}

// Elements ----------------------------------------------------------------------

Polynomial minimal_polynomial(const FinAlg& a, const Vector& x, const Vector& unit) {
  const Field& f = a.field();
  std::vector<Vector> powers{unit};
  for (;;) {
    Vector next = a.mul(powers.back(), x);
    Matrix cols = rows_of(powers, a.dim()).transpose();
    if (auto c = solve(cols, next)) {
      std::vector<Scalar> coeffs;
      for (Index i = 0; i < c->rows(); ++i) coeffs.push_back(-(*c)(i));
      coeffs.push_back(f.one());
      return Polynomial(f, std::move(coeffs));
    }
    powers.push_back(next);
  }
}

Polynomial minimal_polynomial(const FinAlg& a, const Vector& x) { return minimal_polynomial(a, x, a.unit()); }

Vector evaluate(const FinAlg& a, const Polynomial& p, const Vector& x, const Vector& unit) {
  Vector r = a.zero();
  for (std::size_t i = p.coefficients().size(); i-- > 0;) {
    r = a.mul(r, x);
    r += p.coefficients()[i] * unit;
  }
  return r;
}

}  // namespace pca
