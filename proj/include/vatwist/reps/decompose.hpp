#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "vatwist/groups/fin_group.hpp"
#include "vatwist/kernels/parallel.hpp"
#include "vatwist/reps/types.hpp"

namespace vatwist {

struct DecomposeOptions {
  double tol = 1e-9;
  std::uint64_t seed = 0;
  int max_attempts = 4;
  kernels::Exec exec = kernels::Exec::Parallel;
};

/// An isotypic component: one irreducible summand and its multiplicity.
struct Component {
  GroupRep rep;
  std::vector<Complex> character;  // by element index
  std::size_t multiplicity = 1;
};

/// (1/|Q|) sum_g pi(g) X pi(g)^*. Chunked so the serial and parallel
/// paths add in the same order.
CMatrix average_commutant(const GroupRep& pi, const CMatrix& X, kernels::Exec exec = kernels::Exec::Parallel);

/// Splits a unitary representation of a finite group into irreducible
/// components by diagonalizing a random self-adjoint element of its
/// commutant. Components are ordered by (dim, character key).
std::vector<Component> decompose(const FinGroup& Q, const GroupRep& pi, const DecomposeOptions& opt = {});

/// All irreducible representations of Q up to equivalence, by splitting the
/// regular representation. Throws ResourceBound above 5000 elements.
std::vector<IrrepRecord> finite_irreps(const FinGroup& Q, const DecomposeOptions& opt = {});

constexpr std::size_t kMaxFiniteIrrepsOrder = 5000;

/// Ind_H^Q of a representation of the subgroup H (sorted element list).
/// Left transversal: least element of each coset. Matrices of dim 1 make
/// the result monomial.
GroupRep induce_finite(const FinGroup& Q, const std::vector<int>& H, std::size_t dim_h,
                       const std::function<CMatrix(int)>& rep_h);

/// Least element of each left coset gH, in increasing order.
std::vector<int> left_transversal(const FinGroup& Q, const std::vector<int>& H);

/// Total order on characters used for tie-breaking: entries compared by
/// larger real part first, then larger imaginary part, after rounding to
/// 1e-6. The trivial character precedes every other linear character.
bool character_key_less(const std::vector<Complex>& a, const std::vector<Complex>& b);

}  // namespace vatwist
