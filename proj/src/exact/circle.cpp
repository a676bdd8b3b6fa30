#include "vatwist/exact/circle.hpp"

#include <cmath>
#include <numbers>

#include "vatwist/error.hpp"

namespace vatwist {

std::string QAlpha::str() const {
  if (alpha.is_zero()) return rat.str();
  return rat.str() + (alpha.sign() < 0 ? " - " : " + ") +
         (alpha.sign() < 0 ? (-alpha).str() : alpha.str()) + "*alpha";
}

Integer CircleValue::torsion_order() const {
  if (!alpha_.is_zero()) {
    throw Error(ErrorKind::NotTorsion, "circle value " + str() + " is not a root of unity");
  }
  return turns_.den();
}

std::complex<double> CircleValue::to_complex() const {
  if (!alpha_.is_zero()) {
    throw Error(ErrorKind::NotTorsion, "cannot evaluate " + str() + " numerically");
  }
  // Exact lattice points first so that +-1, +-i come out clean.
  const Integer den = turns_.den();
  const Integer num = turns_.num();
  if (den == 1) return {1.0, 0.0};
  if (den == 2) return {-1.0, 0.0};
  if (den == 4) return num == 1 ? std::complex<double>{0.0, 1.0} : std::complex<double>{0.0, -1.0};
  const double angle = 2.0 * std::numbers::pi * turns_.to_double();
  return {std::cos(angle), std::sin(angle)};
}

CircleValue& CircleValue::operator+=(const CircleValue& o) {
  turns_ = (turns_ + o.turns_).frac();
  alpha_ += o.alpha_;
  return *this;
}

CircleValue CircleValue::scaled(const Integer& k) const {
  return CircleValue(turns_ * Rational(k), alpha_ * Rational(k));
}

std::string CircleValue::str() const {
  if (alpha_.is_zero()) return turns_.str();
  return QAlpha(turns_, alpha_).str();
}

}  // namespace vatwist
