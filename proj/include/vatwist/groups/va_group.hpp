#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vatwist/exact/int_matrix.hpp"
#include "vatwist/groups/fin_group.hpp"

namespace vatwist {

/// Lattice coordinates of group elements. Machine integers keep the finite
/// quotient enumerations fast; overflow is detected and reported.
using ZVec = std::vector<long>;

struct GroupElement {
  ZVec vec;
  int pt = 0;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  std::string str() const;
};

struct ValidationReport {
  bool ok = true;
  std::string violation;  // first violated identity with witnesses
  explicit operator bool() const { return ok; }
};

/// Finitely generated virtually abelian group presented as an extension
///   e -> Z^r -> G -> D -> e
/// with point group D, action rho: D -> GL(r, Z) and translation cocycle
/// delta: D x D -> Z^r. Elements are pairs (v, d) with
///   (v1, d1)(v2, d2) = (v1 + rho(d1) v2 + delta(d1, d2), d1 d2).
class VAGroup {
 public:
  VAGroup() = default;
  /// Stores the data without validating it (see validate()). A translation
  /// cocycle with delta(id, id) != 0 is normalized by a constant change of
  /// section.
  VAGroup(std::size_t rank, FinGroup point_group, std::vector<IntMatrix> action, std::vector<ZVec> delta = {});

  /// Free abelian group Z^r.
  static VAGroup lattice(std::size_t r);
  /// Z^r x| D with the given action and zero translation cocycle.
  static VAGroup semidirect(std::size_t r, FinGroup point_group, std::vector<IntMatrix> action);

  std::size_t rank() const { return rank_; }
  const FinGroup& point_group() const { return point_; }
  const IntMatrix& action(int d) const { return action_[static_cast<std::size_t>(d)]; }
  const ZVec& delta(int d1, int d2) const {
    return delta_[static_cast<std::size_t>(d1) * point_.order() + static_cast<std::size_t>(d2)];
  }

  GroupElement identity() const;
  GroupElement lattice_element(ZVec v) const;
  GroupElement basis_element(std::size_t i) const;
  GroupElement point_lift(int d) const;

  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement invert(const GroupElement& a) const;
  GroupElement power(const GroupElement& a, long k) const;
  /// rho(d) v.
  ZVec act(int d, const ZVec& v) const;

  /// Throws RankMismatch when the element does not belong to this group.
  void check_element(const GroupElement& g) const;

 private:
  std::size_t rank_ = 0;
  FinGroup point_;
  std::vector<IntMatrix> action_;
  std::vector<std::vector<long>> action_small_;  // row-major machine copies
  std::vector<ZVec> delta_;
};

/// Exhaustive check of the extension data (|D| <= 256) or first violation.
ValidationReport validate(const VAGroup& g);

std::size_t hirsch_length(const VAGroup& g);

/// Preimage in G of a subgroup K of the point group: point group K, action
/// and translation cocycle restricted.
VAGroup preimage(const VAGroup& g, const Subgroup& k);

struct CentralizerData {
  Subgroup kernel;  // K = {d : rho(d) = 1}
  VAGroup centralizer;  // L = preimage of K; F = L / Z^r is K
  long index = 1;  // [G : L] = [D : K]
};

CentralizerData centralizer_of_lattice(const VAGroup& g);

/// Finite quotient G / m Z^r. Element (v, d) has index
///   d * m^r + sum_i (v_i mod m) m^i.
class FiniteQuotient {
 public:
  static constexpr std::size_t kMaxOrder = 20000;

  FiniteQuotient(const VAGroup& g, long m);

  const FinGroup& group() const { return quotient_; }
  long modulus() const { return m_; }
  std::size_t order() const { return order_; }
  int index_of(const GroupElement& g) const;
  /// Canonical representative with coordinates in [0, m).
  GroupElement element(int index) const;

 private:
  std::size_t rank_;
  long m_;
  std::size_t lattice_size_;
  std::size_t order_;
  FinGroup quotient_;
};

/// Index of the image of g in G / m Z^r without building the quotient table.
int quotient_index(const VAGroup& g, long m, const GroupElement& x);
std::size_t quotient_order(const VAGroup& g, long m);
GroupElement quotient_element(const VAGroup& g, long m, int index);

FiniteQuotient finite_quotient(const VAGroup& g, long m);

}  // namespace vatwist
