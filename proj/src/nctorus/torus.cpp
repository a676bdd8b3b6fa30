#include "vatwist/nctorus/torus.hpp"

#include <algorithm>

#include "vatwist/error.hpp"

namespace vatwist {

ThetaMatrix::ThetaMatrix(QAlphaMatrix M) : m_(std::move(M)) {
  if (m_.rows() != m_.cols()) throw Error(ErrorKind::NotSkew, "theta must be square");
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = 0; j < m_.cols(); ++j)
      if (m_(i, j) != -m_(j, i))
        throw Error(ErrorKind::NotSkew, "theta is not skew-symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
}

ThetaMatrix ThetaMatrix::rotation(const QAlpha& theta) {
  QAlphaMatrix M(2, 2);
  M(0, 1) = -theta;
  M(1, 0) = theta;
  return ThetaMatrix(std::move(M));
}

ThetaMatrix ThetaMatrix::block_diagonal(std::size_t k, const ThetaMatrix& block) {
  const std::size_t b = block.rank();
  QAlphaMatrix M(k + b, k + b);
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j) M(k + i, k + j) = block(i, j);
  return ThetaMatrix(std::move(M));
}

CocycleSpec sigma_theta(const ThetaMatrix& theta) {
  QAlphaMatrix B = theta.matrix();
  const Rational half(1, 2);
  for (std::size_t i = 0; i < B.rows(); ++i)
    for (std::size_t j = 0; j < B.cols(); ++j) B(i, j) *= half;
  return CocycleSpec::bilinear(std::move(B));
}

DegenerateRank degenerate_rank(const ThetaMatrix& theta) {
  // <x, Theta y> in Z for all y  <=>  Theta^T x integral.
  DegenerateRank out;
  out.kernel = lattice_kernel_mod_Z(theta.matrix());
  out.r_minus_d = out.kernel.rank();
  out.d = theta.rank() - out.r_minus_d;
  return out;
}

DegeneracyWitness is_degenerate(const ThetaMatrix& theta) {
  auto h = degenerate_rank(theta);
  if (h.r_minus_d == 0) return {};
  return {true, h.kernel.basis().row(0)};
}

bool simplicity(const ThetaMatrix& theta) { return theta.rank() >= 2 && !is_degenerate(theta).degenerate; }

std::string to_string(TorusReport::DimKind k) { return k == TorusReport::DimKind::Exact ? "exact" : "upper_bound"; }

namespace {

ThetaMatrix theta_from_kronecker(const CircleMatrix& kappa) {
  const std::size_t r = kappa.size();
  QAlphaMatrix M(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      M(i, j) = QAlpha(-kappa[i][j].turns(), -kappa[i][j].alpha_coeff());
      M(j, i) = -M(i, j);
    }
  return ThetaMatrix(std::move(M));
}

}  // namespace

TorusReport dimnuc(const ThetaMatrix& theta) {
  TorusReport rep;
  const std::size_t r = theta.rank();
  rep.rank = r;
  auto h = degenerate_rank(theta);
  rep.degenerate_rank = h.r_minus_d;
  rep.d = h.d;
  rep.degenerate = h.d < r;
  rep.simple_AT = h.d == r && r >= 2;
  rep.rational_class = classify(sigma_theta(theta), VAGroup::lattice(r)).is_rational;
  if (rep.rational_class) {
    rep.dimnuc_kind = TorusReport::DimKind::Exact;
    rep.dimnuc_value = r;
  } else {
    rep.dimnuc_kind = TorusReport::DimKind::UpperBound;
    rep.dimnuc_value = std::min<std::size_t>(5, r - h.d + 1);
    if (r == 2) rep.note = "bound coincides with the known value 1 for irrational rotation algebras";
  }
  return rep;
}

std::optional<TorusReport> dimnuc_for_cocycle(const CocycleSpec& sigma, const VAGroup& G) {
  const ClassificationReport cls = classify(sigma, G);
  if (cls.is_rational) {
    TorusReport rep;
    rep.rank = G.rank();
    rep.rational_class = true;
    rep.dimnuc_kind = TorusReport::DimKind::Exact;
    rep.dimnuc_value = hirsch_length(G);
    if (G.point_group().order() == 1) {
      const auto full = dimnuc(theta_from_kronecker(cls.kronecker));
      rep.degenerate = full.degenerate;
      rep.degenerate_rank = full.degenerate_rank;
      rep.d = full.d;
      rep.simple_AT = full.simple_AT;
    }
    return rep;
  }
  if (G.point_group().order() != 1) return std::nullopt;
  return dimnuc(theta_from_kronecker(cls.kronecker));
}

}  // namespace vatwist
