#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace vatwist {

/// Finite group given by its multiplication table. Elements are indices
/// 0..order-1; mul(a, b) is the index of a*b.
class FinGroup {
 public:
  /// Exhaustive associativity check up to this order, sampled above it.
  static constexpr std::size_t kExhaustiveCheckOrder = 256;
  static constexpr std::size_t kSampledTriples = 20000;

  FinGroup() = default;

  /// Builds from a row-major order x order table. Verifies the group axioms
  /// and throws InvalidGroup on failure.
  static FinGroup from_table(std::size_t order, std::vector<std::int32_t> table,
                             std::vector<std::string> labels = {});
  /// Closes permutation generators (images of 0..k-1) into a table.
  /// Composition convention: (a*b)(x) = a(b(x)).
  static FinGroup from_permutations(const std::vector<std::vector<int>>& generators,
                                    std::size_t max_order = kExhaustiveCheckOrder);
  static FinGroup cyclic(std::size_t n);
  static FinGroup trivial() { return cyclic(1); }
  static FinGroup direct_product(const FinGroup& a, const FinGroup& b);

  std::size_t order() const { return order_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  int id() const { return id_; }
  const std::vector<int>& generators() const { return generators_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::int32_t>& table() const { return table_; }

  int pow(int a, long k) const;
  int element_order(int a) const;
  int conjugate(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  int commutator(int a, int b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }
  bool is_central(int a) const;
  bool is_abelian() const;

  /// Sorted element list of the subgroup generated by `gens`.
  std::vector<int> generated_subgroup(const std::vector<int>& gens) const;
  bool is_normal(const std::vector<int>& subgroup) const;
  /// class_of[g] = index of the conjugacy class containing g.
  std::vector<int> conjugacy_classes() const;

 private:
  void finish();

  std::size_t order_ = 0;
  std::vector<std::int32_t> table_;
  std::vector<int> inv_;
  int id_ = 0;
  std::vector<int> generators_;
  std::vector<std::string> labels_;
};

/// Subgroup re-indexed as a FinGroup of its own.
struct Subgroup {
  FinGroup group;
  std::vector<int> to_parent;    // subgroup index -> parent index
  std::vector<int> from_parent;  // parent index -> subgroup index, or -1
};

Subgroup make_subgroup(const FinGroup& parent, const std::vector<int>& elements);

struct QuotientGroup {
  FinGroup group;
  std::vector<int> projection;      // parent index -> quotient index
  std::vector<int> representative;  // quotient index -> a parent element
};

/// Throws InvalidGroup if `normal` is not a normal subgroup.
QuotientGroup quotient(const FinGroup& parent, const std::vector<int>& normal);

std::vector<int> commutator_subgroup(const FinGroup& g);
QuotientGroup abelianization(const FinGroup& g);

/// H3(Z_2), the upper unitriangular 3x3 matrices over Z_2 (dihedral of order 8).
FinGroup heisenberg_mod2();

}  // namespace vatwist
