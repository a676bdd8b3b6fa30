#include "vatwist/exact/normal_form.hpp"

#include <algorithm>
#include <optional>

namespace vatwist {
namespace {

struct Bezout {
  Integer g, s, t;  // s*a + t*b = g >= 0
};

Bezout bezout(const Integer& a, const Integer& b) {
  Bezout r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Replaces rows (p, i) of both matrices by the unimodular combination
//   p' = s*p + t*i,  i' = (-b/g)*p + (a/g)*i
// which zeroes column `col` of row i when a = A(p,col), b = A(i,col).
void combine_rows(IntMatrix& A, IntMatrix& U, std::size_t p, std::size_t i, std::size_t col) {
  const Integer a = A(p, col);
  const Integer b = A(i, col);
  if (b == 0) return;
  // Exact division keeps the pivot when it already divides.
  if (a != 0 && mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
    Integer q = b / a;
    A.add_row_multiple(i, p, -q);
    U.add_row_multiple(i, p, -q);
    return;
  }
  const Bezout bz = bezout(a, b);
  const Integer ag = a / bz.g;
  const Integer bg = b / bz.g;
  auto apply = [&](IntMatrix& M) {
    for (std::size_t j = 0; j < M.cols(); ++j) {
      Integer x = M(p, j);
      Integer y = M(i, j);
      M(p, j) = bz.s * x + bz.t * y;
      M(i, j) = -bg * x + ag * y;
    }
  };
  apply(A);
  apply(U);
}

void combine_cols(IntMatrix& A, IntMatrix& V, std::size_t p, std::size_t j, std::size_t row) {
  const Integer a = A(row, p);
  const Integer b = A(row, j);
  if (b == 0) return;
  if (a != 0 && mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
    Integer q = b / a;
    A.add_col_multiple(j, p, -q);
    V.add_col_multiple(j, p, -q);
    return;
  }
  const Bezout bz = bezout(a, b);
  const Integer ag = a / bz.g;
  const Integer bg = b / bz.g;
  auto apply = [&](IntMatrix& M) {
    for (std::size_t i = 0; i < M.rows(); ++i) {
      Integer x = M(i, p);
      Integer y = M(i, j);
      M(i, p) = bz.s * x + bz.t * y;
      M(i, j) = -bg * x + ag * y;
    }
  };
  apply(A);
  apply(V);
}

std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(const IntMatrix& A, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t i = t; i < A.rows(); ++i)
    for (std::size_t j = t; j < A.cols(); ++j) {
      if (A(i, j) == 0) continue;
      Integer v = abs(A(i, j));
      if (!best || v < best_abs) {
        best = {i, j};
        best_abs = v;
      }
    }
  return best;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& M) {
  SmithForm out{M, IntMatrix::identity(M.rows()), IntMatrix::identity(M.cols()), 0};
  IntMatrix& A = out.S;
  const std::size_t n = std::min(A.rows(), A.cols());
  std::size_t t = 0;
  for (; t < n; ++t) {
    auto pivot = smallest_entry(A, t);
    if (!pivot) break;
    A.swap_rows(t, pivot->first);
    out.U.swap_rows(t, pivot->first);
    A.swap_cols(t, pivot->second);
    out.V.swap_cols(t, pivot->second);
    for (;;) {
      for (std::size_t i = t + 1; i < A.rows(); ++i) combine_rows(A, out.U, t, i, t);
      for (std::size_t j = t + 1; j < A.cols(); ++j) combine_cols(A, out.V, t, j, t);
      bool column_clear = true;
      for (std::size_t i = t + 1; i < A.rows(); ++i) column_clear = column_clear && A(i, t) == 0;
      if (!column_clear) continue;
      // Divisibility chain: fold any offending row into the pivot row.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < A.rows() && !offending; ++i)
        for (std::size_t j = t + 1; j < A.cols(); ++j)
          if (!mpz_divisible_p(A(i, j).get_mpz_t(), A(t, t).get_mpz_t())) {
            offending = i;
            break;
          }
      if (!offending) break;
      A.add_row_multiple(t, *offending, 1);
      out.U.add_row_multiple(t, *offending, 1);
    }
    if (A(t, t) < 0) {
      A.negate_row(t);
      out.U.negate_row(t);
    }
  }
  out.rank = t;
  return out;
}

namespace {

// With `track` false the transform is a rows x 0 matrix, on which every row
// operation is a no-op.
HermiteForm hermite_impl(const IntMatrix& M, bool track) {
  HermiteForm out{M, track ? IntMatrix::identity(M.rows()) : IntMatrix(M.rows(), 0), 0};
  IntMatrix& H = out.H;
  std::size_t row = 0;
  for (std::size_t col = 0; col < H.cols() && row < H.rows(); ++col) {
    // Move the smallest nonzero entry of this column up to limit growth.
    std::optional<std::size_t> best;
    for (std::size_t i = row; i < H.rows(); ++i)
      if (H(i, col) != 0 && (!best || abs(H(i, col)) < abs(H(*best, col)))) best = i;
    if (!best) continue;
    H.swap_rows(row, *best);
    out.U.swap_rows(row, *best);
    for (std::size_t i = row + 1; i < H.rows(); ++i) combine_rows(H, out.U, row, i, col);
    if (H(row, col) < 0) {
      H.negate_row(row);
      out.U.negate_row(row);
    }
    const Integer& pivot = H(row, col);
    for (std::size_t i = 0; i < row; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), H(i, col).get_mpz_t(), pivot.get_mpz_t());
      H.add_row_multiple(i, row, -q);
      out.U.add_row_multiple(i, row, -q);
    }
    ++row;
  }
  out.rank = row;
  return out;
}

}  // namespace

HermiteForm hermite_decomposition(const IntMatrix& M) { return hermite_impl(M, true); }

IntMatrix hermite_normal_form(const IntMatrix& M) {
  HermiteForm hf = hermite_impl(M, false);
  IntMatrix out(hf.rank, M.cols());
  for (std::size_t i = 0; i < hf.rank; ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) out(i, j) = hf.H(i, j);
  return out;
}

IntMatrix integer_left_kernel(const IntMatrix& M) {
  HermiteForm hf = hermite_decomposition(M);
  IntMatrix kernel(M.rows() - hf.rank, M.rows());
  for (std::size_t i = hf.rank; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.rows(); ++j) kernel(i - hf.rank, j) = hf.U(i, j);
  return hermite_normal_form(kernel);
}

}  // namespace vatwist
