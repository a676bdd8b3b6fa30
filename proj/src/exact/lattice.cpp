#include "vatwist/exact/lattice.hpp"

#include "vatwist/error.hpp"

namespace vatwist {

QAlphaMatrix QAlphaMatrix::transpose() const {
  QAlphaMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool QAlphaMatrix::is_rational() const {
  for (const auto& v : data_)
    if (!v.is_rational()) return false;
  return true;
}

Lattice Lattice::from_generators(const IntMatrix& generators) {
  return Lattice(generators.cols(), hermite_normal_form(generators));
}

Lattice Lattice::full(std::size_t r) { return Lattice(r, IntMatrix::identity(r)); }

Lattice Lattice::zero(std::size_t r) { return Lattice(r, IntMatrix(0, r)); }

Lattice Lattice::scaled(std::size_t r, const Integer& m) {
  if (m == 0) return zero(r);
  IntMatrix b = IntMatrix::identity(r);
  for (std::size_t i = 0; i < r; ++i) b(i, i) = abs(m);
  return Lattice(r, b);
}

std::optional<IntVector> Lattice::coordinates(const IntVector& v) const {
  if (v.size() != ambient_) throw Error(ErrorKind::RankMismatch, "vector rank differs from lattice ambient rank");
  IntVector rest = v;
  IntVector coords(basis_.rows());
  std::size_t col = 0;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    while (basis_(i, col) == 0) {
      if (rest[col] != 0) return std::nullopt;
      ++col;
    }
    const Integer& pivot = basis_(i, col);
    if (!mpz_divisible_p(rest[col].get_mpz_t(), pivot.get_mpz_t())) return std::nullopt;
    coords[i] = rest[col] / pivot;
    for (std::size_t j = col; j < ambient_; ++j) rest[j] -= coords[i] * basis_(i, j);
    ++col;
  }
  for (const auto& x : rest)
    if (x != 0) return std::nullopt;
  return coords;
}

bool Lattice::contains(const Lattice& other) const {
  if (other.ambient_ != ambient_) return false;
  for (std::size_t i = 0; i < other.rank(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

LatticeIndex lattice_index(const Lattice& outer, const Lattice& inner) {
  if (!outer.contains(inner)) throw Error(ErrorKind::NotASublattice, "inner lattice is not contained in outer");
  if (inner.rank() < outer.rank()) return {true, 0};
  const std::size_t k = outer.rank();
  IntMatrix coords(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    IntVector c = *outer.coordinates(inner.basis().row(i));
    for (std::size_t j = 0; j < k; ++j) coords(i, j) = c[j];
  }
  return {false, abs(determinant(coords))};
}

Lattice lattice_kernel_mod_Z(const QAlphaMatrix& M) {
  const std::size_t r = M.rows();
  const std::size_t c = M.cols();
  Integer common = 1;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      common = lcm(common, M(i, j).rat.den());
      common = lcm(common, M(i, j).alpha.den());
    }
  // Unknowns (x, y) in Z^r x Z^c with  x*A = 0  and  x*R - common*y = 0,
  // where A, R are the scaled alpha and rational parts.
  IntMatrix system(r + c, 2 * c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      system(i, j) = (M(i, j).alpha * Rational(common)).num();
      system(i, c + j) = (M(i, j).rat * Rational(common)).num();
    }
  for (std::size_t j = 0; j < c; ++j) system(r + j, c + j) = -common;
  IntMatrix kernel = integer_left_kernel(system);
  IntMatrix projected(kernel.rows(), r);
  for (std::size_t i = 0; i < kernel.rows(); ++i)
    for (std::size_t j = 0; j < r; ++j) projected(i, j) = kernel(i, j);
  return Lattice::from_generators(projected);
}

bool pairs_integrally(const QAlphaMatrix& M, const IntVector& x) {
  if (x.size() != M.rows()) throw Error(ErrorKind::RankMismatch, "vector length differs from matrix rows");
  for (std::size_t j = 0; j < M.cols(); ++j) {
    QAlpha acc;
    for (std::size_t i = 0; i < M.rows(); ++i) acc += M(i, j) * Rational(x[i]);
    if (!acc.alpha.is_zero() || !acc.rat.is_integer()) return false;
  }
  return true;
}

}  // namespace vatwist
