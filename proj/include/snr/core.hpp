#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "snr/boolean_map.hpp"
#include "snr/lattice.hpp"
#include "snr/poset.hpp"

namespace snr {

// Ordered pair of element sets <positive part | negative part>; the shape
// of basis inputs and extracted cores.
struct CorePair {
  ElementSet positive_part, negative_part;
  bool operator==(const CorePair&) const = default;
};

struct CoreReport {
  PartialMap core;
  CorePair pair;
  MapFamily family = MapFamily::W_PLUS;
};

// Restriction of a total weighted map to its minimal positives and maximal
// negatives; a core (unique family extension) for either weighted family.
// Throws NotWeighted unless the map is in W_PLUS or W_MINUS.
PartialMap n_core(const Sip& sip, const PartialMap& map);

// The smallest core for the plus family: minimal positives union maximal
// negatives, minus the complement image of the maximal negatives.
// Throws NotWeighted unless classify(map, W_PLUS).
CoreReport fundamental_core_plus(const Sip& sip, const PartialMap& map);

// Dual: drops the complement image of the minimal positives instead.
// Throws NotWeighted unless classify(map, W_MINUS).
CoreReport fundamental_core_minus(const Sip& sip, const PartialMap& map);

// Basis axioms, reported in check order.  DISJOINT and the antichain
// conditions are shared; B1/B2/B3 take their plus or minus reading from
// the function used.
enum class BasisAxiom { NONE, DISJOINT, ANTICHAIN_POS, ANTICHAIN_NEG, B1, B2, B3 };

std::string basis_axiom_name(BasisAxiom axiom);

struct BasisCheck {
  bool ok = false;
  BasisAxiom failed = BasisAxiom::NONE;
};

// Plus-side basis: parts disjoint antichains; B1+ down(Y+) avoids the
// complement image of Y-; B2+ (up(Y+) u up(Y-^c)) avoids down(Y-);
// B3+ those two regions cover the whole poset.
BasisCheck check_w_basis_plus(const Sip& sip, const CorePair& pair);
// Minus-side basis: B1- up(Y-) avoids the complement image of Y+;
// B2- (down(Y-) u down(Y+^c)) avoids up(Y+); B3- coverage.
BasisCheck check_w_basis_minus(const Sip& sip, const CorePair& pair);

bool is_w_basis_plus(const Sip& sip, const CorePair& pair);
bool is_w_basis_minus(const Sip& sip, const CorePair& pair);

// Total map with P on up(Y+) u up(Y-^c) and N on down(Y-); the unique
// W_PLUS map whose fundamental core pair is the input.
// Throws NotABasis unless is_w_basis_plus.
PartialMap span_plus(const Sip& sip, const CorePair& pair);

// Dual: P on up(Y+), N on down(Y-) u down(Y+^c).
PartialMap span_minus(const Sip& sip, const CorePair& pair);

// Fundamental core split into its pair; inverse of span on bases.
CorePair h_plus(const Sip& sip, const PartialMap& map);
CorePair h_minus(const Sip& sip, const PartialMap& map);

// Streams every total map of the family over the poset, deterministically:
// depth-first extension of the P-part over a fixed linear extension with
// sign-filter pruning.  The visitor returns false to stop early.
// Families: W_PLUS / W_MINUS on a bare structure.  Throws CapExceeded when
// the poset has more than `cap` elements (hard limit 64).
void for_each_family_member(const Sip& sip, MapFamily family,
                            const std::function<bool(const PartialMap&)>& visit,
                            std::size_t cap = 32);

// As above plus the lattice-only families W_PLUS_NR / W_MINUS_NR.
void for_each_family_member(const SnrLattice& lattice, MapFamily family,
                            const std::function<bool(const PartialMap&)>& visit,
                            std::size_t cap = 32);

std::vector<PartialMap> enumerate_family(const Sip& sip, MapFamily family,
                                         std::size_t cap = 32);
std::vector<PartialMap> enumerate_family(const SnrLattice& lattice, MapFamily family,
                                         std::size_t cap = 32);

// True iff exactly one enumerated member of the family agrees with `map`
// on `window` (Def: a core pins down its extension uniquely).  Early-exits
// at the second extension.  Throws CapExceeded above `cap` elements.
bool is_core_brute(const Sip& sip, const ElementSet& window, const PartialMap& map,
                   MapFamily family, std::size_t cap = 32);
bool is_core_brute(const SnrLattice& lattice, const ElementSet& window,
                   const PartialMap& map, MapFamily family, std::size_t cap = 32);

}  // namespace snr
