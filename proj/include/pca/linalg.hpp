#pragma once

// Exact dense linear algebra over a Field, using Eigen matrices of Scalar as
// the storage type. Elimination is plain Gauss-Jordan with the first nonzero
// entry as pivot: all arithmetic is exact, so no pivoting strategy is needed
// for stability and the echelon forms are canonical.

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "pca/field.hpp"

namespace Eigen {
template <>
struct NumTraits<pca::Scalar> : GenericNumTraits<pca::Scalar> {
  using Real = pca::Scalar;
  using NonInteger = pca::Scalar;
  using Literal = pca::Scalar;
  using Nested = pca::Scalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace pca {

using Index = Eigen::Index;
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

Matrix zeros(const Field& f, Index rows, Index cols);
Vector zero_vector(const Field& f, Index n);
Vector unit_vector(const Field& f, Index n, Index i);
Matrix identity(const Field& f, Index n);

// Promotes every unbound literal entry into f.
template <class Derived>
void bind_to(Eigen::MatrixBase<Derived>& m, const Field& f) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) m(i, j) = m(i, j).in(f);
}

template <class Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

template <class A, class B>
bool equal(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

// Product that skips zero entries; structure-constant matrices are sparse.
Matrix product(const Matrix& a, const Matrix& b);
Vector apply(const Matrix& a, const Vector& v);

struct Echelon {
  Matrix reduced;
  std::vector<Index> pivots;  // pivot column of each nonzero row, increasing
};

// Reduced row echelon form; zero rows are dropped from `reduced`.
Echelon rref(Matrix m);
Index rank(const Matrix& m);
// Rows form a basis of {v : m v = 0}, in reduced echelon form.
Matrix nullspace(const Matrix& m);
// One solution x of m x = b (free variables set to zero), or nullopt.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);
std::optional<Vector> solve(const Matrix& m, const Vector& b);
// Inverse of a square matrix, or nullopt if singular.
std::optional<Matrix> inverse(const Matrix& m);

Matrix vstack(const Matrix& top, const Matrix& bottom);
Matrix hstack(const Matrix& left, const Matrix& right);
Matrix rows_of(const std::vector<Vector>& vs, Index ambient);

// A linear subspace of k^n, stored by its canonical reduced-echelon basis.
class Subspace {
 public:
  Subspace(Field f, Index ambient);
  static Subspace span(Field f, Index ambient, const Matrix& rows);
  static Subspace span(Field f, Index ambient, const std::vector<Vector>& vectors);
  static Subspace whole(Field f, Index ambient);

  const Field& field() const { return field_; }
  Index ambient() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  bool is_zero() const { return basis_.rows() == 0; }
  bool is_whole() const { return basis_.rows() == ambient_; }
  const Matrix& basis() const { return basis_; }
  Vector basis_vector(Index i) const { return basis_.row(i).transpose(); }
  std::vector<Vector> basis_vectors() const;
  const std::vector<Index>& pivots() const { return pivots_; }
  std::vector<Index> non_pivots() const;

  // v minus the unique element of the subspace agreeing with v on pivots.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  // Coordinates with respect to basis(); v must lie in the subspace.
  Vector coordinates(const Vector& v) const;
  // Linear map k^n -> k^n / U in the coordinates of the non-pivot positions.
  Matrix quotient_map() const;

  Subspace operator+(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  void check(const Subspace& o) const;

  Field field_;
  Index ambient_;
  Matrix basis_;
  std::vector<Index> pivots_;
};

// Image of U under the linear map given by `map` (columns = images of the
// standard basis).
Subspace image(const Matrix& map, const Subspace& u, const Field& f);

}  // namespace pca
