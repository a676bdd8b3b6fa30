#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "vatwist/cocycles/cocycle.hpp"
#include "vatwist/groups/va_group.hpp"
#include "vatwist/reps/decompose.hpp"
#include "vatwist/reps/types.hpp"

namespace vatwist {

/// (d . chi)(a) = chi(rho(d)^-1 a).
RationalCharacter act_on_character(const VAGroup& G, int d, const RationalCharacter& chi);

struct OrbitStabilizer {
  std::vector<RationalCharacter> orbit;  // in order of first appearance over d
  std::vector<int> stabilizer;           // K_chi, sorted
  Subgroup stabilizer_subgroup;
  VAGroup stab;                          // G_chi, the preimage of K_chi
};

OrbitStabilizer orbit_stabilizer(const VAGroup& G, const RationalCharacter& chi);

/// Lexicographically least member of the orbit of chi.
RationalCharacter orbit_representative(const VAGroup& G, const RationalCharacter& chi);

/// G_chi equals the centralizer L of the lattice and no coordinate is 1/2.
bool in_U(const VAGroup& G, const RationalCharacter& chi);

/// Representation of a finite-index subgroup preimage(K) given as a
/// function on elements in the coordinates of G (point part in K).
struct SubgroupRep {
  std::size_t dim = 0;
  std::function<CMatrix(const GroupElement&)> image;
  std::function<Complex(const GroupElement&)> trace;
};

/// Ind from the preimage of K (sorted subset of D) to G. Coset
/// representatives are the point lifts of the least element of each coset
/// dK. Throws ResourceBound when the induced dimension exceeds kMaxRepDim.
UnitaryRep induce(const VAGroup& G, const std::vector<int>& K, const SubgroupRep& rep, long factor_modulus,
                  double tol = 1e-9);
/// Ind of a representation given on the preimage VAGroup of K.
UnitaryRep induce(const VAGroup& G, const Subgroup& K, const UnitaryRep& rep_on_preimage);
/// Character of the induced representation at g.
Complex induced_character(const VAGroup& G, const std::vector<int>& K,
                          const std::function<Complex(const GroupElement&)>& trace, const GroupElement& g);

struct CentralCharacter {
  GroupElement a;
  CircleValue omega;
};

struct IrrepsOptions {
  DecomposeOptions decompose;
  /// Only irreducibles sending a to omega are produced.
  std::optional<CentralCharacter> central;
  bool build_matrices = true;
};

constexpr std::size_t kMaxLittleGroupOrder = 5000;

/// Irreducibles of G whose restriction to Z^r contains chi: Ind from G_chi
/// of the irreducibles tau of G_chi / ker chi lying over chi. Characters are
/// on G / qZ^r, q the modulus of chi.
std::vector<IrrepRecord> irreps_over_character(const VAGroup& G, const RationalCharacter& chi,
                                               const IrrepsOptions& opt = {});

/// Records whose image of the central element a is omega times the
/// identity. Throws NotCentral.
std::vector<IrrepRecord> central_filter(const std::vector<IrrepRecord>& records, const VAGroup& G,
                                        const GroupElement& a, const CircleValue& omega, double tol = 1e-6);

bool is_central_element(const VAGroup& G, const GroupElement& a);

struct TwistedIrreps {
  std::vector<IrrepRecord> records;  // irreducibles of the extended group
  long n = 1;                        // order of the cocycle values
  long s = 1;                        // lattice scale of the extension
  RationalCharacter lifted;          // s . chi on the lattice of the extension
  std::optional<VAGroup> extended;   // absent when the cocycle is trivial
};

/// Irreducible sigma-projective representations of G over the orbit of chi,
/// as irreducibles of the central extension sending its central generator to
/// exp(2 pi i / n). Throws IrrationalCocycle.
TwistedIrreps twisted_irreps(const VAGroup& G, const CocycleSpec& sigma, const RationalCharacter& chi,
                             const IrrepsOptions& opt = {});

/// Characters of modulus dividing q, one per D-orbit (the least member).
std::vector<RationalCharacter> orbit_cross_section(const VAGroup& G, long q,
                                                   kernels::Exec exec = kernels::Exec::Parallel);

/// Sorted dims of all irreducibles of G factoring through G / qZ^r, by the
/// Mackey machine over the orbit cross-section.
std::vector<std::size_t> mackey_dimensions(const VAGroup& G, long q, const DecomposeOptions& opt = {});

}  // namespace vatwist
