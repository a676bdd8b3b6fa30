#include "vatwist/reps/types.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "vatwist/error.hpp"

namespace vatwist {

Complex unit(double turns) { return std::polar(1.0, 2.0 * std::numbers::pi * turns); }

Complex unit(const Rational& turns) {
  // Exact quarter turns avoid rounding noise on the common values.
  Rational t = turns.frac();
  if (t.is_zero()) return {1.0, 0.0};
  if (t == Rational(1, 2)) return {-1.0, 0.0};
  if (t == Rational(1, 4)) return {0.0, 1.0};
  if (t == Rational(3, 4)) return {0.0, -1.0};
  return unit(t.to_double());
}

CMatrix GroupRep::image(int g) const {
  if (!is_monomial()) return dense[static_cast<std::size_t>(g)];
  CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  const auto& p = perm[static_cast<std::size_t>(g)];
  const auto& ph = phase[static_cast<std::size_t>(g)];
  for (std::size_t j = 0; j < dim; ++j) m(p[j], static_cast<Eigen::Index>(j)) = ph[j];
  return m;
}

CMatrix GroupRep::apply(int g, const CMatrix& V) const {
  if (!is_monomial()) return dense[static_cast<std::size_t>(g)] * V;
  CMatrix out(V.rows(), V.cols());
  const auto& p = perm[static_cast<std::size_t>(g)];
  const auto& ph = phase[static_cast<std::size_t>(g)];
  for (std::size_t j = 0; j < dim; ++j) out.row(p[j]) = ph[j] * V.row(static_cast<Eigen::Index>(j));
  return out;
}

CMatrix GroupRep::conjugate(int g, const CMatrix& X) const {
  if (!is_monomial()) {
    const CMatrix& u = dense[static_cast<std::size_t>(g)];
    return u * X * u.adjoint();
  }
  CMatrix out(X.rows(), X.cols());
  const auto& p = perm[static_cast<std::size_t>(g)];
  const auto& ph = phase[static_cast<std::size_t>(g)];
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      out(p[i], p[j]) = ph[i] * X(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * std::conj(ph[j]);
  return out;
}

Complex GroupRep::trace(int g) const {
  if (!is_monomial()) return dense[static_cast<std::size_t>(g)].trace();
  Complex t = 0;
  const auto& p = perm[static_cast<std::size_t>(g)];
  const auto& ph = phase[static_cast<std::size_t>(g)];
  for (std::size_t j = 0; j < dim; ++j)
    if (p[j] == static_cast<int>(j)) t += ph[j];
  return t;
}

RationalCharacter::RationalCharacter(std::vector<Rational> c) : coords(std::move(c)) {
  for (auto& x : coords) x = x.frac();
}

RationalCharacter RationalCharacter::from_circle(const std::vector<CircleValue>& values) {
  std::vector<Rational> c;
  for (const auto& v : values) {
    if (!v.is_root_of_unity()) throw Error(ErrorKind::InvalidInput, "characters must have rational coordinates");
    c.push_back(v.turns());
  }
  return RationalCharacter(std::move(c));
}

long RationalCharacter::modulus() const {
  Integer m = 1;
  for (const auto& x : coords) m = lcm(m, x.den());
  return to_long(m);
}

Rational RationalCharacter::value(const ZVec& a) const {
  Rational acc;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (a[i] != 0) acc += coords[i] * Rational(a[i]);
  return acc.frac();
}

bool operator<(const RationalCharacter& a, const RationalCharacter& b) {
  return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(), b.coords.end());
}

std::string RationalCharacter::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) s += (i ? ", " : "") + coords[i].str();
  return s + ")";
}

UnitaryRep::UnitaryRep(std::vector<CMatrix> lattice, std::vector<CMatrix> point, long factor_modulus, double tol)
    : lattice_(std::move(lattice)), point_(std::move(point)), factor_modulus_(factor_modulus), tol_(tol) {
  if (point_.empty()) throw Error(ErrorKind::InvalidInput, "representation needs point-group images");
  dim_ = static_cast<std::size_t>(point_.front().rows());
}

CMatrix UnitaryRep::lattice_power(const ZVec& v) const {
  const auto n = static_cast<Eigen::Index>(dim_);
  CMatrix out = CMatrix::Identity(n, n);
  for (std::size_t i = 0; i < v.size(); ++i) {
    long k = v[i];
    if (factor_modulus_ > 0) {
      k %= factor_modulus_;
      if (k < 0) k += factor_modulus_;
    }
    CMatrix base = k < 0 ? CMatrix(lattice_[i].adjoint()) : lattice_[i];
    k = std::labs(k);
    CMatrix acc = CMatrix::Identity(n, n);
    while (k > 0) {
      if (k & 1) acc = acc * base;
      base = base * base;
      k >>= 1;
    }
    out = out * acc;
  }
  return out;
}

CMatrix UnitaryRep::image(const GroupElement& g) const {
  return lattice_power(g.vec) * point_[static_cast<std::size_t>(g.pt)];
}

double UnitaryRep::unitarity_residual() const {
  const auto n = static_cast<Eigen::Index>(dim_);
  const CMatrix I = CMatrix::Identity(n, n);
  double worst = 0;
  for (const auto& m : lattice_) worst = std::max(worst, (m * m.adjoint() - I).norm());
  for (const auto& m : point_) worst = std::max(worst, (m * m.adjoint() - I).norm());
  return worst;
}

double UnitaryRep::relation_residual(const VAGroup& G) const {
  const std::size_t r = G.rank();
  const auto& D = G.point_group();
  double worst = 0;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      worst = std::max(worst, (lattice_[i] * lattice_[j] - lattice_[j] * lattice_[i]).norm());
  for (std::size_t d = 0; d < D.order(); ++d) {
    const CMatrix& t = point_[d];
    for (std::size_t i = 0; i < r; ++i) {
      ZVec e(r, 0);
      e[i] = 1;
      worst = std::max(worst, (t * lattice_[i] * t.adjoint() - lattice_power(G.act(static_cast<int>(d), e))).norm());
    }
  }
  for (std::size_t a = 0; a < D.order(); ++a)
    for (std::size_t b = 0; b < D.order(); ++b) {
      const int ia = static_cast<int>(a), ib = static_cast<int>(b);
      CMatrix rhs = lattice_power(G.delta(ia, ib)) * point_[static_cast<std::size_t>(D.mul(ia, ib))];
      worst = std::max(worst, (point_[a] * point_[b] - rhs).norm());
    }
  const auto n = static_cast<Eigen::Index>(dim_);
  worst = std::max(worst, (point_[static_cast<std::size_t>(D.id())] - CMatrix::Identity(n, n)).norm());
  return worst;
}

Complex IrrepRecord::character_at(const VAGroup& G, const GroupElement& g) const {
  if (factor_modulus == 0) return character[static_cast<std::size_t>(g.pt)];
  return character[static_cast<std::size_t>(quotient_index(G, factor_modulus, g))];
}

double IrrepRecord::character_norm() const {
  double s = 0;
  for (const auto& z : character) s += std::norm(z);
  return s / static_cast<double>(character.size());
}

namespace {

template <class F>
void for_common_quotient(const VAGroup& G, long ma, long mb, F&& f) {
  const long m = std::lcm(std::max(ma, 1L), std::max(mb, 1L));
  const std::size_t n = quotient_order(G, m);
  for (std::size_t i = 0; i < n; ++i) f(quotient_element(G, m, static_cast<int>(i)), n);
}

}  // namespace

double character_distance(const VAGroup& G, const IrrepRecord& a, const IrrepRecord& b) {
  double worst = 0;
  for_common_quotient(G, a.factor_modulus, b.factor_modulus, [&](const GroupElement& g, std::size_t) {
    worst = std::max(worst, std::abs(a.character_at(G, g) - b.character_at(G, g)));
  });
  return worst;
}

Complex character_inner(const VAGroup& G, const IrrepRecord& a, const IrrepRecord& b) {
  Complex s = 0;
  std::size_t count = 0;
  for_common_quotient(G, a.factor_modulus, b.factor_modulus, [&](const GroupElement& g, std::size_t n) {
    s += a.character_at(G, g) * std::conj(b.character_at(G, g));
    count = n;
  });
  return s / static_cast<double>(count);
}

Complex round_character_value(Complex z) {
  auto snap = [](double x) {
    double r = std::round(x);
    return std::abs(x - r) < 1e-9 ? r : x;
  };
  return {snap(z.real()), snap(z.imag())};
}

}  // namespace vatwist
