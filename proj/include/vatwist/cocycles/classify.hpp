#pragma once

#include <optional>
#include <vector>

#include "vatwist/cocycles/cocycle.hpp"

namespace vatwist {

struct ClassificationReport {
  bool is_rational = false;
  CircleMatrix kronecker;
  std::optional<Integer> class_torsion_order;  // nullopt = infinite
  std::optional<Integer> value_order_n;        // order of values of `representative`
  std::optional<Integer> type_one_witness_m;   // restriction to m Z^r vanishes identically
  std::optional<Integer> witness_index;        // [G : m Z^r] = m^r |D|
  CocycleSpec representative;                  // representative the value data refer to
  bool representative_changed = false;         // alpha parts of bilinear terms were removed
  std::vector<Integer> finite_class_orders;    // per table part, on the group it lives on
};

/// Throws Unsupported when a table part carries alpha-valued entries.
ClassificationReport classify(const CocycleSpec& sigma, const VAGroup& G);

/// Order of the class of a normalized table cocycle in H^2(F; T).
Integer finite_class_order(const FinGroup& F, const std::vector<CircleValue>& table);

/// Bilinear cocycle on Z^r with value sum_{i<j} kappa_ij x_i y_j, whose
/// Kronecker matrix is kappa. Throws IrrationalCocycle on alpha entries.
CocycleSpec canonical_lattice_representative(const CircleMatrix& kappa);

/// Representative with the smallest value order available: the canonical
/// form on Z^r, otherwise the classification representative. Throws
/// IrrationalCocycle when the class is not rational.
CocycleSpec minimal_representative(const CocycleSpec& sigma, const VAGroup& G);

/// Least t >= 1 with q | t^2.
Integer least_square_root_multiple(const Integer& q);

}  // namespace vatwist
