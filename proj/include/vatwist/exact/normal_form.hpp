#pragma once

#include <cstddef>

#include "vatwist/exact/int_matrix.hpp"

namespace vatwist {

struct SmithForm {
  IntMatrix S;  // diagonal, S(i,i) | S(i+1,i+1), nonnegative
  IntMatrix U;  // unimodular, rows(M) x rows(M)
  IntMatrix V;  // unimodular, cols(M) x cols(M)
  std::size_t rank = 0;
};

/// U * M * V = S.
SmithForm smith_normal_form(const IntMatrix& M);

struct HermiteForm {
  IntMatrix H;  // full row-style HNF, zero rows at the bottom
  IntMatrix U;  // unimodular with U * M = H
  std::size_t rank = 0;
};

HermiteForm hermite_decomposition(const IntMatrix& M);

/// Row-style Hermite normal form with the zero rows removed: pivots positive,
/// entries above each pivot reduced into [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& M);

/// Basis (as rows) of {x : x * M = 0} over Z, in Hermite normal form.
IntMatrix integer_left_kernel(const IntMatrix& M);

}  // namespace vatwist
