#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "snr/lattice.hpp"
#include "snr/poset.hpp"

namespace snr {

enum class Sign : std::uint8_t { N = 0, P = 1 };

char sign_char(Sign sign);
Sign parse_sign(std::string_view token);  // "P" or "N"; ParseError otherwise

// Partial two-valued map on a finite universe of poset elements, stored as
// the disjoint index sets mapped to P and to N.
class PartialMap {
 public:
  PartialMap() = default;
  explicit PartialMap(std::size_t universe)
      : positives_(universe), negatives_(universe) {}

  // Total map sending `positives` to P and everything else to N.
  static PartialMap total_from_positives(const ElementSet& positives);

  std::size_t universe() const { return positives_.size(); }
  const ElementSet& positives() const { return positives_; }
  const ElementSet& negatives() const { return negatives_; }
  ElementSet domain() const { return positives_ | negatives_; }
  std::size_t domain_size() const { return positives_.count() + negatives_.count(); }
  bool is_total() const { return domain_size() == universe(); }

  bool contains(std::size_t x) const { return positives_.test(x) || negatives_.test(x); }
  Sign at(std::size_t x) const;  // throws Error when x is outside the domain
  void assign(std::size_t x, Sign sign);
  void erase(std::size_t x);

  bool operator==(const PartialMap&) const = default;

 private:
  ElementSet positives_, negatives_;
};

// Pointwise extension order: b extends a (a's assignments all appear in b).
bool extends(const PartialMap& smaller, const PartialMap& larger);

// The P-preimage is closed upward within the domain: no x -> P with a
// domain element y >= x mapped to N.
bool is_up_positive(const Poset& poset, const PartialMap& map);

// The N-preimage is closed downward within the domain.
bool is_down_negative(const Poset& poset, const PartialMap& map);

// x <= y implies map(x) <= map(y) with N < P; requires a total map.
bool is_order_preserving(const Poset& poset, const PartialMap& map);

// Every element outside the domain's P-preimage complement condition:
// for all x in the universe, x in P-preimage or c(x) in P-preimage
// (quantified over the domain only for partial maps: whenever both x and
// c(x) are assigned, not both are N).
bool is_complemented_positive(const Involution& involution, const PartialMap& map);

// Whenever both x and c(x) are assigned, not both are P.
bool is_complemented_negative(const Involution& involution, const PartialMap& map);

// Named map families.  The weighted families W_PLUS / W_MINUS live on any
// strong involution poset; the *_NR variants additionally constrain the
// all-symbols string's sign and therefore require the signed-string
// lattice, as do B_NR (all single-symbol strings correctly signed) and
// BT_NR (B_NR restricted to total maps).
enum class MapFamily {
  OP,          // total and order-preserving
  W_PLUS,      // total, up-positive, complemented-positive
  W_MINUS,     // total, down-negative, complemented-negative
  W_PLUS_NR,   // W_PLUS with the all-symbols string mapped to P
  W_MINUS_NR,  // W_MINUS with the all-symbols string mapped to N
  B_NR,        // empty string and all tildes assigned P, all bars assigned N
  BT_NR,       // total B_NR member
};

std::string family_name(MapFamily family);
MapFamily parse_family(std::string_view token);  // ParseError on unknown name

// Families definable on a bare strong involution poset.
bool classify(const Sip& sip, const PartialMap& map, MapFamily family);

// All families; NR variants use the lattice's reserved strings.  B_NR
// requires every single-symbol string (including the empty string) to be
// present with its mandated sign.
bool classify(const SnrLattice& lattice, const PartialMap& map, MapFamily family);

// Minimal elements of the P-preimage / maximal elements of the N-preimage.
ElementSet minimal_positives(const Poset& poset, const PartialMap& map);
ElementSet maximal_negatives(const Poset& poset, const PartialMap& map);

// Elements x with c(x) <= x.
ElementSet complemented_elements(const Sip& sip);

// Text form of a map over signed strings: a parameter line "snr <n> <r>"
// followed by one "<string> <P|N>" line per assignment.
struct MapData {
  SnrParams params;
  std::vector<std::pair<SnrString, Sign>> entries;
};

MapData read_map(std::istream& in);           // ParseError with 1-based line numbers
MapData parse_map(std::string_view text);
PartialMap bind_map(const MapData& data, const SnrLattice& lattice);
// Emits assignments sorted by formatted string (bytewise).
void write_map(std::ostream& out, const SnrLattice& lattice, const PartialMap& map);

}  // namespace snr
