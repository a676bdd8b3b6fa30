#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "vatwist/cocycles/cocycle.hpp"
#include "vatwist/groups/va_group.hpp"

namespace vatwist {

/// Central extension Z_n -> G~ -> G of a virtually abelian group by an
/// n-torsion cocycle, re-presented as a virtually abelian group. The
/// lattice of G~ is generated by h_i = lift(s e_i); the point group D~ has
/// elements (c, w, d) with c in Z_n, w in [0, s)^r, d in D, indexed by
///   c + n * (w_0 + s w_1 + ... + s^r d).
class ExtensionResult {
 public:
  const VAGroup& extended() const { return extended_; }
  const VAGroup& original() const { return original_; }
  /// The generator a of the central Z_n.
  const GroupElement& central_gen() const { return central_gen_; }
  long order_n() const { return n_; }
  long scale_s() const { return s_; }

  /// Projection G~ -> G.
  GroupElement project(const GroupElement& x) const;
  /// The section g -> (0, g) of the concrete extension, in the presentation.
  GroupElement lift(const GroupElement& g) const;
  /// a^k.
  GroupElement embed_centre(long k) const;

  /// Decoded point-group element (c, w, d).
  struct PointData {
    long c = 0;
    ZVec w;
    int d = 0;
  };
  const PointData& point_data(int index) const { return points_[static_cast<std::size_t>(index)]; }

 private:
  friend ExtensionResult central_extension(const VAGroup&, const CocycleSpec&, long);
  VAGroup original_;
  VAGroup extended_;
  GroupElement central_gen_;
  long n_ = 1;
  long s_ = 1;
  std::vector<PointData> points_;
  std::shared_ptr<const TorsionCocycle> tau_;
};

/// Multiplication (c1, g1)(c2, g2) = (c1 + c2 + n sigma(g1, g2), g1 g2).
/// Throws ValueNotTorsionOfOrderN when some value of sigma is not an n-th
/// root of unity and ResourceBound when n |D| s^r exceeds the cap.
ExtensionResult central_extension(const VAGroup& G, const CocycleSpec& sigma, long n);

constexpr std::size_t kMaxExtensionPointOrder = 20000;

}  // namespace vatwist
