#pragma once

#include <cstdint>
#include <random>

#include "vatwist/exact/int_matrix.hpp"
#include "vatwist/exact/lattice.hpp"

namespace vatwist::testing {

inline IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

inline Rational random_rational(std::mt19937_64& rng, long max_num, long max_den) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rational(num(rng), den(rng));
}

// Calls f on every integer vector in [-bound, bound]^r.
template <class F>
void for_each_box_point(std::size_t r, long bound, F&& f) {
  IntVector x(r, Integer(-bound));
  for (;;) {
    f(x);
    std::size_t i = 0;
    while (i < r && x[i] == bound) x[i++] = -bound;
    if (i == r) return;
    x[i] += 1;
  }
}

}  // namespace vatwist::testing
