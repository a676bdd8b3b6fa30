#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vatwist/exact/circle.hpp"
#include "vatwist/groups/va_group.hpp"

namespace vatwist {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

/// Largest induced dimension for which matrices are materialized.
constexpr std::size_t kMaxRepDim = 64;

/// exp(2 pi i t).
Complex unit(double turns);
Complex unit(const Rational& turns);

/// Representation of a finite group: either dense matrices for every
/// element or monomial data pi(g) e_j = phase[g][j] e_{perm[g][j]}.
struct GroupRep {
  std::size_t dim = 0;
  std::vector<CMatrix> dense;
  std::vector<std::vector<int>> perm;
  std::vector<std::vector<Complex>> phase;

  bool is_monomial() const { return !perm.empty(); }
  std::size_t group_order() const { return is_monomial() ? perm.size() : dense.size(); }
  CMatrix image(int g) const;
  /// pi(g) V.
  CMatrix apply(int g, const CMatrix& V) const;
  /// pi(g) X pi(g)^*.
  CMatrix conjugate(int g, const CMatrix& X) const;
  Complex trace(int g) const;
};

/// Rational point of the dual torus: chi(a) = exp(2 pi i <coords, a>), with
/// coords reduced into [0, 1).
struct RationalCharacter {
  std::vector<Rational> coords;

  RationalCharacter() = default;
  explicit RationalCharacter(std::vector<Rational> c);
  static RationalCharacter from_circle(const std::vector<CircleValue>& values);

  std::size_t rank() const { return coords.size(); }
  /// Lcm of the denominators (order of chi).
  long modulus() const;
  Rational value(const ZVec& a) const;
  friend bool operator==(const RationalCharacter&, const RationalCharacter&) = default;
  friend bool operator<(const RationalCharacter& a, const RationalCharacter& b);
  std::string str() const;
};

/// Unitary representation of a virtually abelian group, given on the
/// generators: image(v, d) = X_1^{v_1} ... X_r^{v_r} T_d.
class UnitaryRep {
 public:
  UnitaryRep() = default;
  UnitaryRep(std::vector<CMatrix> lattice, std::vector<CMatrix> point, long factor_modulus, double tol);

  std::size_t dim() const { return dim_; }
  long factor_modulus() const { return factor_modulus_; }
  double tol() const { return tol_; }
  const std::vector<CMatrix>& lattice_images() const { return lattice_; }
  const std::vector<CMatrix>& point_images() const { return point_; }

  CMatrix image(const GroupElement& g) const;
  /// Largest Frobenius residual of unitarity (bounds the operator norm).
  double unitarity_residual() const;
  /// Largest Frobenius residual of the defining relations of G.
  double relation_residual(const VAGroup& G) const;

 private:
  CMatrix lattice_power(const ZVec& v) const;
  std::size_t dim_ = 0;
  std::vector<CMatrix> lattice_;
  std::vector<CMatrix> point_;
  long factor_modulus_ = 0;  // 0: unknown
  double tol_ = 1e-9;
};

/// Irreducible representation summary. For virtually abelian groups the
/// character is indexed by quotient_index(G, factor_modulus, g); for finite
/// groups by element index (factor_modulus = 0).
struct IrrepRecord {
  std::size_t dim = 0;
  long factor_modulus = 0;
  std::vector<Complex> character;
  std::optional<CircleValue> central_value;
  std::size_t multiplicity = 1;
  std::optional<RationalCharacter> lattice_character;  // orbit representative
  std::optional<UnitaryRep> rep;
  std::optional<GroupRep> finite_rep;

  Complex character_at(const VAGroup& G, const GroupElement& g) const;
  /// (1/|Q|) sum |chi|^2 on the factoring quotient.
  double character_norm() const;
};

/// max_g |chi_a(g) - chi_b(g)| over a common quotient of G.
double character_distance(const VAGroup& G, const IrrepRecord& a, const IrrepRecord& b);
/// <chi_a, chi_b> on G / m Z^r with m = lcm of both moduli.
Complex character_inner(const VAGroup& G, const IrrepRecord& a, const IrrepRecord& b);

/// Snaps real and imaginary parts within 1e-9 of an integer.
Complex round_character_value(Complex z);

}  // namespace vatwist
