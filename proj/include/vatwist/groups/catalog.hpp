#pragma once

#include <cstddef>

#include "vatwist/groups/fin_group.hpp"
#include "vatwist/groups/va_group.hpp"

namespace vatwist::catalog {

/// Z^2 x| Z_2 with the generator acting by -I.
VAGroup inversion_semidirect(std::size_t rank = 2);
/// Z^2 x| Z_4 with the generator acting by the quarter turn [[0,-1],[1,0]].
VAGroup quarter_turn_semidirect();
/// Z x| Z_2 acting by -1 (the infinite dihedral group).
VAGroup infinite_dihedral();
/// Z_m^k x| Z_2 with the generator acting by inversion.
FinGroup finite_inversion_semidirect(std::size_t m, std::size_t k);

}  // namespace vatwist::catalog
