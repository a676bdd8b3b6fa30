#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vatwist/exact/circle.hpp"
#include "vatwist/exact/lattice.hpp"
#include "vatwist/groups/va_group.hpp"

namespace vatwist {

class CocycleSpec;

/// value((v1,d1),(v2,d2)) = <B v1, v2> = sum_ij B_ij v1_j v2_i turns.
struct BilinearPart {
  QAlphaMatrix B;
};

/// value depends only on the point-group parts: table[d1 * |D| + d2].
struct FiniteTablePart {
  std::size_t point_order = 1;
  std::vector<CircleValue> table;
};

/// Inflated from the finite quotient G / m Z^r, indexed as in
/// quotient_index(): table[i1 * |Q| + i2].
struct InflationPart {
  long modulus = 1;
  std::size_t rank = 0;
  std::size_t point_order = 1;
  std::vector<CircleValue> table;
};

struct SumPart {
  std::vector<CocycleSpec> parts;
};

/// Finitely specified normalized 2-cocycle with circle values.
class CocycleSpec {
 public:
  using Variant = std::variant<BilinearPart, FiniteTablePart, InflationPart, SumPart>;

  CocycleSpec() : v_(BilinearPart{}) {}
  static CocycleSpec bilinear(QAlphaMatrix B);
  static CocycleSpec finite_table(std::size_t point_order, std::vector<CircleValue> table);
  static CocycleSpec inflation(long modulus, std::size_t rank, std::size_t point_order, std::vector<CircleValue> table);
  static CocycleSpec sum(std::vector<CocycleSpec> parts);
  static CocycleSpec zero(std::size_t rank);

  const Variant& variant() const { return v_; }
  std::string kind() const;

 private:
  explicit CocycleSpec(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

CircleValue eval(const CocycleSpec& sigma, const GroupElement& g1, const GroupElement& g2);

/// sigma(h,k) - sigma(gh,k) + sigma(g,hk) - sigma(g,h).
CircleValue coboundary_defect(const CocycleSpec& sigma, const VAGroup& G, const GroupElement& g,
                              const GroupElement& h, const GroupElement& k);

struct CocycleCheck {
  bool ok = true;
  std::string message;
  std::vector<GroupElement> counterexample;  // (g, h, k) when !ok
  explicit operator bool() const { return ok; }
};

/// Bilinear parts: the defect is a sum of four terms each Z-linear in its
/// lattice arguments, so it vanishes identically iff it vanishes on triples
/// drawn from {basis vectors} u {point-group lifts}. Table parts: exhaustive.
CocycleCheck check_cocycle_identity(const CocycleSpec& sigma, const VAGroup& G);

using CircleMatrix = std::vector<std::vector<CircleValue>>;

/// Entry (i, j) = sigma(e_i, e_j) - sigma(e_j, e_i).
CircleMatrix kronecker_matrix(const CocycleSpec& sigma, const VAGroup& G);

/// Restriction to m Z^r, re-expressed in coordinates of Z^r (trivial point
/// group): bilinear parts scale by m^2, inflation parts are re-indexed and
/// point-group tables vanish.
CocycleSpec restrict_to_sublattice(const CocycleSpec& sigma, const VAGroup& G, long m);

/// Leaves of nested sums, in order.
std::vector<CocycleSpec> flatten(const CocycleSpec& sigma);

/// Homomorphism shapes supported by pullback.
struct GroupHom {
  enum class Kind {
    Identity,            // G -> G
    LatticeMap,          // Z^s -> Z^r, v -> A v (trivial point groups)
    PointProjection,     // G -> D, with D viewed as a rank-0 group
    QuotientProjection,  // G -> G / m Z^r, viewed as a rank-0 group
  };
  Kind kind = Kind::Identity;
  IntMatrix matrix;  // LatticeMap: r x s
  long modulus = 1;  // QuotientProjection

  GroupElement apply(const VAGroup& source, const GroupElement& g) const;
};

/// sigma o (hom x hom). Throws Unsupported for shapes outside GroupHom.
CocycleSpec pullback(const CocycleSpec& sigma, const VAGroup& source, const GroupHom& hom);

/// The group G / m Z^r regarded as a rank-0 virtually abelian group.
VAGroup quotient_as_group(const VAGroup& G, long m);
/// D regarded as a rank-0 virtually abelian group.
VAGroup point_group_as_group(const VAGroup& G);

/// Lcm of the torsion orders of all values reachable by the stored
/// representative (basis pairs for bilinear parts, table entries); nullopt
/// when some value has a nonzero alpha coefficient.
std::optional<Integer> value_order(const CocycleSpec& sigma);

/// Machine-integer evaluator for an n-torsion cocycle: values in Z_n, with
/// sigma = value / n turns.
class TorsionCocycle {
 public:
  TorsionCocycle(const CocycleSpec& sigma, long n);
  long n() const { return n_; }
  long operator()(const GroupElement& g1, const GroupElement& g2) const;

 private:
  struct Table {
    enum class Index { Point, Quotient } index;
    long modulus = 1;
    std::size_t rank = 0;
    std::size_t width = 1;
    std::vector<long> values;
  };
  long n_;
  std::size_t rank_ = 0;
  std::vector<std::vector<long>> bilinear_;  // n*B mod n, row-major per part
  std::vector<Table> tables_;
};

}  // namespace vatwist
