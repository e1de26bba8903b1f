#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "snr/boolean_map.hpp"
#include "snr/lattice.hpp"

namespace snr {

// A violation of the pointwise condition: a domain string, the in-domain
// partition whose blocks all miss the string's sign, and that sign.
struct PointwiseWitness {
  SnrString string;
  std::vector<SnrString> blocks;
  Sign sign = Sign::P;
};

struct PointwiseResult {
  bool ok = false;
  std::optional<PointwiseWitness> witness;
};

// A map is complemented pointwise when for every domain string w and every
// partition of w's symbols into strings that all lie in the domain, at
// least one block carries the sign of w.  Scans domain strings in
// canonical index order and partitions in restricted-growth order, so the
// returned witness is deterministic.  Throws CapExceeded when some domain
// string has more than `star_cap` symbols.
PointwiseResult is_complemented_pointwise(const SnrLattice& lattice, const PartialMap& map,
                                          int star_cap = 12);

// Formally compatible families: total, order-preserving, complemented
// pointwise, and the all-symbols string signed P (plus) or N (minus).
// Partial maps return false (they fail the totality requirement).
bool in_fc_plus(const SnrLattice& lattice, const PartialMap& map, int star_cap = 12);
bool in_fc_minus(const SnrLattice& lattice, const PartialMap& map, int star_cap = 12);

enum class ConjectureVerdict : std::uint8_t { EQUAL, STRICT };

// Exhaustive comparison, over one signed-string lattice, of the formally
// compatible maps against the compatible ones: does every formally
// compatible map actually admit a solution?
struct ConjectureReport {
  SnrParams params;
  bool plus = true;  // plus side (Q2) or minus side (Q3)
  // Total weighted-family members scanned; those also formally compatible
  // (restricted to conventionally signed reserved strings, so that a
  // system exists); those whose core system is feasible.
  std::size_t family_count = 0;
  std::size_t fc_count = 0;
  std::size_t compatible_count = 0;
  ConjectureVerdict verdict = ConjectureVerdict::EQUAL;
  // First formally compatible member with an infeasible system, if any.
  std::optional<PartialMap> witness;
};

// Throws CapExceeded when n exceeds cap_n.  Compatibility of each member
// is decided on its fundamental core's system (the local criterion).
ConjectureReport conjecture_scan(const SnrLattice& lattice, bool plus, int cap_n = 6,
                                 int star_cap = 12);

}  // namespace snr
