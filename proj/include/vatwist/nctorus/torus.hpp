#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "vatwist/cocycles/classify.hpp"
#include "vatwist/exact/lattice.hpp"

namespace vatwist {

/// Skew-symmetric r x r matrix over Q + Q·alpha.
class ThetaMatrix {
 public:
  /// Throws NotSkew unless M^T = -M.
  explicit ThetaMatrix(QAlphaMatrix M);

  /// [[0, -theta], [theta, 0]].
  static ThetaMatrix rotation(const QAlpha& theta);
  /// diag(0_k, block).
  static ThetaMatrix block_diagonal(std::size_t k, const ThetaMatrix& block);

  std::size_t rank() const { return m_.rows(); }
  const QAlphaMatrix& matrix() const { return m_; }
  const QAlpha& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

 private:
  QAlphaMatrix m_;
};

/// Bilinear cocycle with B = Theta / 2, i.e. exp(pi i <Theta x, y>).
CocycleSpec sigma_theta(const ThetaMatrix& theta);

struct DegeneracyWitness {
  bool degenerate = false;
  std::optional<IntVector> witness;
};

DegeneracyWitness is_degenerate(const ThetaMatrix& theta);

struct DegenerateRank {
  Lattice kernel;            // H = {x : <x, Theta y> in Z for all y}
  std::size_t r_minus_d = 0;  // rank of H
  std::size_t d = 0;
};

DegenerateRank degenerate_rank(const ThetaMatrix& theta);

bool simplicity(const ThetaMatrix& theta);

struct TorusReport {
  std::size_t rank = 0;
  bool rational_class = false;
  bool degenerate = false;
  std::size_t degenerate_rank = 0;  // r - d
  std::size_t d = 0;
  bool simple_AT = false;
  enum class DimKind { Exact, UpperBound } dimnuc_kind = DimKind::Exact;
  std::size_t dimnuc_value = 0;
  std::string note;
};

std::string to_string(TorusReport::DimKind k);

TorusReport dimnuc(const ThetaMatrix& theta);

/// Report for a cocycle job on G: exact h(G) for rational classes; for
/// irrational classes on Z^r the torus report of Theta = -kappa (Theta is
/// determined modulo integer matrices, which do not change the report).
/// nullopt for irrational classes on groups with a nontrivial point group.
std::optional<TorusReport> dimnuc_for_cocycle(const CocycleSpec& sigma, const VAGroup& G);

}  // namespace vatwist
