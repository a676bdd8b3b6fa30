#include "vatwist/groups/catalog.hpp"

namespace vatwist::catalog {

VAGroup inversion_semidirect(std::size_t rank) {
  IntMatrix minus = IntMatrix::identity(rank);
  for (std::size_t i = 0; i < rank; ++i) minus(i, i) = -1;
  return VAGroup::semidirect(rank, FinGroup::cyclic(2), {IntMatrix::identity(rank), minus});
}

VAGroup quarter_turn_semidirect() {
  const IntMatrix q{{0, -1}, {1, 0}};
  std::vector<IntMatrix> action{IntMatrix::identity(2)};
  for (int k = 1; k < 4; ++k) action.push_back(action.back() * q);
  return VAGroup::semidirect(2, FinGroup::cyclic(4), std::move(action));
}

VAGroup infinite_dihedral() { return inversion_semidirect(1); }

FinGroup finite_inversion_semidirect(std::size_t m, std::size_t k) {
  // Element (v, s) with v in Z_m^k, s in {0,1}; index v + m^k s.
  std::size_t lat = 1;
  for (std::size_t i = 0; i < k; ++i) lat *= m;
  const std::size_t n = 2 * lat;
  std::vector<std::int32_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t va = a % lat, sa = a / lat, vb = b % lat, sb = b / lat;
      std::size_t out = 0, place = 1;
      for (std::size_t i = 0; i < k; ++i) {
        std::size_t x = va % m, y = vb % m;
        va /= m;
        vb /= m;
        std::size_t z = sa ? (x + m - y) % m : (x + y) % m;
        out += z * place;
        place *= m;
      }
      table[a * n + b] = static_cast<std::int32_t>(out + lat * ((sa + sb) % 2));
    }
  return FinGroup::from_table(n, std::move(table));
}

}  // namespace vatwist::catalog
