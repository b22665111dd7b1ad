#include "pca/linalg.hpp"

#include <algorithm>

namespace pca {

Matrix zeros(const Field& f, Index rows, Index cols) { return Matrix::Constant(rows, cols, f.zero()); }

Vector zero_vector(const Field& f, Index n) { return Vector::Constant(n, f.zero()); }

Vector unit_vector(const Field& f, Index n, Index i) {
  Vector v = zero_vector(f, n);
  v(i) = f.one();
  return v;
}

Matrix identity(const Field& f, Index n) {
  Matrix m = zeros(f, n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

namespace {

// Zero of the field of the first bound entry, or an unbound zero.
template <class A, class B>
Scalar common_zero(const A& a, const B& b) {
  for (Index i = 0; i < a.size(); ++i)
    if (auto f = a.data()[i].field()) return f->zero();
  for (Index i = 0; i < b.size(); ++i)
    if (auto f = b.data()[i].field()) return f->zero();
  return Scalar(0);
}

}  // namespace

Matrix product(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::AmbientMismatch, "matrix product dimension mismatch");
  Matrix r = Matrix::Constant(a.rows(), b.cols(), common_zero(a, b));
  for (Index i = 0; i < a.rows(); ++i)
    for (Index k = 0; k < a.cols(); ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (Index j = 0; j < b.cols(); ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) r(i, j) += x * y;
      }
    }
  return r;
}

Vector apply(const Matrix& a, const Vector& v) {
  if (a.cols() != v.rows()) throw Error(ErrorKind::AmbientMismatch, "matrix-vector dimension mismatch");
  Vector r = Vector::Constant(a.rows(), common_zero(a, v));
  for (Index k = 0; k < a.cols(); ++k) {
    const Scalar& x = v(k);
    if (x.is_zero()) continue;
    for (Index i = 0; i < a.rows(); ++i) {
      const Scalar& y = a(i, k);
      if (!y.is_zero()) r(i) += y * x;
    }
  }
  return r;
}

Echelon rref(Matrix m) {
  Echelon out;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = -1;
    for (Index r = row; r < m.rows(); ++r)
      if (!m(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    Scalar inv = m(row, col).inverse();
    for (Index j = col; j < m.cols(); ++j)
      if (!m(row, j).is_zero()) m(row, j) *= inv;
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Scalar factor = m(r, col);
      for (Index j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(r, j) -= factor * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = m.topRows(row);
  return out;
}

Index rank(const Matrix& m) { return static_cast<Index>(rref(m).pivots.size()); }

Matrix nullspace(const Matrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (Index c : e.pivots) is_pivot[c] = true;
  std::vector<Index> free;
  for (Index c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  // Rows ordered so that the result is already in reduced echelon form
  // after a final normalization pass.
  Matrix basis(static_cast<Index>(free.size()), m.cols());
  for (std::size_t k = 0; k < free.size(); ++k) {
    Index f = free[k];
    basis(static_cast<Index>(k), f) = Scalar(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      if (!e.reduced(static_cast<Index>(r), f).is_zero())
        basis(static_cast<Index>(k), e.pivots[r]) = -e.reduced(static_cast<Index>(r), f);
  }
  if (basis.rows() == 0) return basis;
  return rref(basis).reduced;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  if (m.rows() != b.rows()) throw Error(ErrorKind::AmbientMismatch, "solve: row count mismatch");
  Echelon e = rref(hstack(m, b));
  Matrix x(m.cols(), b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    Index c = e.pivots[r];
    if (c >= m.cols()) return std::nullopt;
    x.row(c) = e.reduced.row(static_cast<Index>(r)).tail(b.cols());
  }
  return x;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  auto x = solve(m, Matrix(b));
  if (!x) return std::nullopt;
  return Vector(x->col(0));
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::AmbientMismatch, "inverse of a non-square matrix");
  Matrix id(m.rows(), m.rows());
  for (Index i = 0; i < m.rows(); ++i) id(i, i) = Scalar(1);
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, id);
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols()) throw Error(ErrorKind::AmbientMismatch, "vstack column mismatch");
  Matrix r(top.rows() + bottom.rows(), top.cols());
  r.topRows(top.rows()) = top;
  r.bottomRows(bottom.rows()) = bottom;
  return r;
}

Matrix hstack(const Matrix& left, const Matrix& right) {
  if (left.rows() != right.rows()) throw Error(ErrorKind::AmbientMismatch, "hstack row mismatch");
  Matrix r(left.rows(), left.cols() + right.cols());
  r.leftCols(left.cols()) = left;
  r.rightCols(right.cols()) = right;
  return r;
}

Matrix rows_of(const std::vector<Vector>& vs, Index ambient) {
  Matrix m(static_cast<Index>(vs.size()), ambient);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].rows() != ambient) throw Error(ErrorKind::AmbientMismatch, "vector length mismatch");
    m.row(static_cast<Index>(i)) = vs[i].transpose();
  }
  return m;
}

// Subspace -----------------------------------------------------------------

Subspace::Subspace(Field f, Index ambient) : field_(f), ambient_(ambient), basis_(0, ambient) {}

Subspace Subspace::span(Field f, Index ambient, const Matrix& rows) {
  if (rows.rows() > 0 && rows.cols() != ambient) throw Error(ErrorKind::AmbientMismatch, "span: wrong ambient dimension");
  Subspace s(f, ambient);
  if (rows.rows() == 0) return s;
  Echelon e = rref(rows);
  s.basis_ = std::move(e.reduced);
  bind_to(s.basis_, f);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::span(Field f, Index ambient, const std::vector<Vector>& vectors) {
  return span(f, ambient, rows_of(vectors, ambient));
}

Subspace Subspace::whole(Field f, Index ambient) { return span(f, ambient, identity(f, ambient)); }

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  for (Index i = 0; i < dim(); ++i) out.push_back(basis_vector(i));
  return out;
}

std::vector<Index> Subspace::non_pivots() const {
  std::vector<Index> out;
  std::size_t k = 0;
  for (Index c = 0; c < ambient_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.rows() != ambient_) throw Error(ErrorKind::AmbientMismatch, "reduce: wrong vector length");
  Vector r = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Scalar c = r(pivots_[i]);
    if (c.is_zero()) continue;
    for (Index j = 0; j < ambient_; ++j)
      if (!basis_(static_cast<Index>(i), j).is_zero()) r(j) -= c * basis_(static_cast<Index>(i), j);
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return pca::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  check(other);
  for (Index i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw Error(ErrorKind::AmbientMismatch, "coordinates: vector not in subspace");
  Vector c(dim());
  for (std::size_t i = 0; i < pivots_.size(); ++i) c(static_cast<Index>(i)) = v(pivots_[i]).in(field_);
  return c;
}

Matrix Subspace::quotient_map() const {
  auto np = non_pivots();
  Matrix q = zeros(field_, static_cast<Index>(np.size()), ambient_);
  for (Index j = 0; j < ambient_; ++j) {
    Vector r = reduce(unit_vector(field_, ambient_, j));
    for (std::size_t k = 0; k < np.size(); ++k) q(static_cast<Index>(k), j) = r(np[k]);
  }
  return q;
}

void Subspace::check(const Subspace& o) const {
  if (ambient_ != o.ambient_ || field_ != o.field_)
    throw Error(ErrorKind::AmbientMismatch, "subspaces of different ambient spaces");
}

Subspace Subspace::operator+(const Subspace& o) const {
  check(o);
  return span(field_, ambient_, vstack(basis_, o.basis_));
}

Subspace Subspace::intersect(const Subspace& o) const {
  check(o);
  if (is_zero() || o.is_zero()) return Subspace(field_, ambient_);
  // c_U * U = c_V * V  <=>  [c_U, -c_V] in the left nullspace of [U; V]
  Matrix stacked = vstack(basis_, o.basis_);
  Matrix left = nullspace(stacked.transpose());
  Matrix vecs = zeros(field_, left.rows(), ambient_);
  for (Index k = 0; k < left.rows(); ++k)
    for (Index i = 0; i < dim(); ++i)
      if (!left(k, i).is_zero()) vecs.row(k) += left(k, i) * basis_.row(i);
  return span(field_, ambient_, vecs);
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && field_ == o.field_ && equal(basis_, o.basis_);
}

Subspace image(const Matrix& map, const Subspace& u, const Field& f) {
  std::vector<Vector> imgs;
  for (Index i = 0; i < u.dim(); ++i) imgs.push_back(apply(map, u.basis_vector(i)));
  return Subspace::span(f, map.rows(), imgs);
}

}  // namespace pca
