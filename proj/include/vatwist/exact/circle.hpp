#pragma once

#include <complex>
#include <ostream>
#include <string>

#include "vatwist/exact/rational.hpp"

namespace vatwist {

/// Element of the rank-2 Q-module Q + Q·alpha, where alpha is one fixed formal
/// irrational. Products alpha·alpha never arise: every pairing in the library
/// is Z-bilinear in integer vectors.
struct QAlpha {
  Rational rat;
  Rational alpha;

  QAlpha() = default;
  QAlpha(Rational r) : rat(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  QAlpha(Rational r, Rational a) : rat(std::move(r)), alpha(std::move(a)) {}
  QAlpha(long r) : rat(r) {}  // NOLINT

  bool is_zero() const { return rat.is_zero() && alpha.is_zero(); }
  bool is_rational() const { return alpha.is_zero(); }

  QAlpha operator-() const { return {-rat, -alpha}; }
  QAlpha& operator+=(const QAlpha& o) { rat += o.rat; alpha += o.alpha; return *this; }
  QAlpha& operator-=(const QAlpha& o) { rat -= o.rat; alpha -= o.alpha; return *this; }
  QAlpha& operator*=(const Rational& s) { rat *= s; alpha *= s; return *this; }

  friend QAlpha operator+(QAlpha a, const QAlpha& b) { return a += b; }
  friend QAlpha operator-(QAlpha a, const QAlpha& b) { return a -= b; }
  friend QAlpha operator*(QAlpha a, const Rational& s) { return a *= s; }
  friend QAlpha operator*(const Rational& s, QAlpha a) { return a *= s; }
  friend bool operator==(const QAlpha&, const QAlpha&) = default;

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const QAlpha& v) { return os << v.str(); }
};

/// Exact element of the circle group T, measured in full turns:
/// exp(2*pi*i*(turns + alpha_coeff*alpha)). `turns` is kept in [0, 1);
/// the alpha coefficient cannot be reduced because alpha is irrational.
class CircleValue {
 public:
  CircleValue() = default;
  explicit CircleValue(const QAlpha& v) : turns_(v.rat.frac()), alpha_(v.alpha) {}
  explicit CircleValue(const Rational& turns, const Rational& alpha = Rational())
      : turns_(turns.frac()), alpha_(alpha) {}

  static CircleValue from_turns(long num, long den) { return CircleValue(Rational(num, den)); }

  const Rational& turns() const { return turns_; }
  const Rational& alpha_coeff() const { return alpha_; }

  bool is_zero() const { return turns_.is_zero() && alpha_.is_zero(); }
  bool is_root_of_unity() const { return alpha_.is_zero(); }
  /// Order of the value as a root of unity; throws NotTorsion otherwise.
  Integer torsion_order() const;

  /// Numeric value; throws NotTorsion when the alpha coefficient is nonzero.
  std::complex<double> to_complex() const;

  CircleValue operator-() const { return CircleValue(-turns_, -alpha_); }
  CircleValue& operator+=(const CircleValue& o);
  CircleValue& operator-=(const CircleValue& o) { return *this += -o; }
  friend CircleValue operator+(CircleValue a, const CircleValue& b) { return a += b; }
  friend CircleValue operator-(CircleValue a, const CircleValue& b) { return a -= b; }
  CircleValue scaled(const Integer& k) const;

  friend bool operator==(const CircleValue&, const CircleValue&) = default;

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const CircleValue& v) { return os << v.str(); }

 private:
  Rational turns_;
  Rational alpha_;
};

}  // namespace vatwist
