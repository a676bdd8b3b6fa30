#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "vatwist/exact/circle.hpp"
#include "vatwist/exact/int_matrix.hpp"
#include "vatwist/exact/normal_form.hpp"

namespace vatwist {

/// Dense matrix with entries in Q + Q·alpha.
class QAlphaMatrix {
 public:
  QAlphaMatrix() = default;
  QAlphaMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  QAlpha& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const QAlpha& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  QAlphaMatrix transpose() const;
  bool is_rational() const;
  friend bool operator==(const QAlphaMatrix&, const QAlphaMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<QAlpha> data_;
};

/// Sublattice of Z^r, canonically represented by the Hermite normal form of
/// its basis rows. Two lattices are equal iff their HNF bases are equal.
class Lattice {
 public:
  Lattice() = default;
  /// Lattice spanned by the rows of `generators` (need not be independent).
  static Lattice from_generators(const IntMatrix& generators);
  static Lattice full(std::size_t r);
  static Lattice zero(std::size_t r);
  static Lattice scaled(std::size_t r, const Integer& m);

  std::size_t ambient_rank() const { return ambient_; }
  std::size_t rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }

  /// Integer coordinates of v in the HNF basis, or nullopt if v is not a member.
  std::optional<IntVector> coordinates(const IntVector& v) const;
  bool contains(const IntVector& v) const { return coordinates(v).has_value(); }
  bool contains(const Lattice& other) const;

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  Lattice(std::size_t ambient, IntMatrix hnf) : ambient_(ambient), basis_(std::move(hnf)) {}
  std::size_t ambient_ = 0;
  IntMatrix basis_;
};

struct LatticeIndex {
  bool infinite = false;
  Integer value;  // meaningful only when !infinite
};

/// |outer / inner|; infinite when inner has smaller rank. Throws
/// NotASublattice when inner is not contained in outer.
LatticeIndex lattice_index(const Lattice& outer, const Lattice& inner);

/// {x in Z^r : (M^T x)_j has zero alpha part and integral rational part for
/// every column j}, where M has r rows.
Lattice lattice_kernel_mod_Z(const QAlphaMatrix& M);

/// Membership test for the integrality condition of lattice_kernel_mod_Z.
bool pairs_integrally(const QAlphaMatrix& M, const IntVector& x);

}  // namespace vatwist
