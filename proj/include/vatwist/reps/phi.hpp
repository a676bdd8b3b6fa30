#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "vatwist/groups/va_group.hpp"
#include "vatwist/reps/decompose.hpp"
#include "vatwist/reps/mackey.hpp"

namespace vatwist {

/// Injective homomorphism iota(v, f) = (d v + gamma(f), f) from a group with
/// trivial point-group action into Z^r x F, where F is the point group.
struct CentralizerEmbedding {
  long d = 1;
  std::vector<ZVec> gamma;  // indexed by F

  std::pair<ZVec, int> apply(const GroupElement& g) const;
};

/// Uses d = |F| and solves d delta = boundary(gamma) over Z with the Smith
/// form of the coboundary map. Throws InvalidInput for a nontrivial action
/// and NoSolution when the system has no integral solution.
CentralizerEmbedding embed_centralizer(const VAGroup& L);

/// True when iota(g h) = iota(g) iota(h) for every g, h in `sample`.
bool check_embedding(const VAGroup& L, const CentralizerEmbedding& iota, const std::vector<GroupElement>& sample);

struct CentralCharIrrep {
  std::size_t m = 0;
  GroupRep pi;
  std::vector<Complex> character;
};

/// Irreducible pi of F with pi(b) = omega, extracted from Ind_<b>^F omega:
/// smallest dimension first, then the least character (character_key_less).
/// Throws NotCentral, or InvalidInput when omega^order(b) != 1.
CentralCharIrrep central_char_irrep(const FinGroup& F, int b, const CircleValue& omega,
                                    const DecomposeOptions& opt = {});

/// Principal d-th root: coordinates taken in (-1/2, 1/2] and divided by d.
std::vector<Rational> root_coords(const RationalCharacter& chi, long d);

struct PhiRep {
  IrrepRecord record;
  CentralizerEmbedding iota;
  std::size_t m = 1;      // dim pi
  std::size_t index = 1;  // [G : L]
};

/// Phi(chi) = Ind_L^G (phi_chi o iota) with
///   phi_chi(x, f) = root_d(chi)(x) pi(f).
/// With `central` the irreducible pi sends the image of a in F to omega;
/// otherwise pi is trivial. Verifies irreducibility, the central value and
/// the lattice restriction. Throws NotInU.
PhiRep phi_rep(const VAGroup& G, const RationalCharacter& chi, const std::optional<CentralCharacter>& central = {},
               const DecomposeOptions& opt = {});

}  // namespace vatwist
