#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace snr {

// Subset of a finite poset's elements, indexed 0..size()-1.
using ElementSet = boost::dynamic_bitset<>;

using IndexPair = std::pair<std::size_t, std::size_t>;

// Finite partially ordered set stored as dense up/down membership rows:
// up_row(x) = { y : x <= y }, down_row(x) = { y : y <= x }.
class Poset {
 public:
  // Builds from a comparison predicate and verifies reflexivity,
  // antisymmetry and transitivity; throws PartialOrderViolation naming the
  // failed axiom and a witnessing pair.
  static Poset from_relation(std::size_t count,
                             const std::function<bool(std::size_t, std::size_t)>& leq);

  // Builds without axiom checks, for relations correct by construction.
  static Poset from_relation_unchecked(
      std::size_t count, const std::function<bool(std::size_t, std::size_t)>& leq);

  std::size_t size() const { return up_.size(); }
  bool leq(std::size_t x, std::size_t y) const { return up_[x].test(y); }
  const ElementSet& up_row(std::size_t x) const { return up_[x]; }
  const ElementSet& down_row(std::size_t x) const { return down_[x]; }

  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet full_set() const { return ~ElementSet(size()); }

 private:
  Poset() = default;
  std::vector<ElementSet> up_, down_;
};

// Order ideal generated by `subset`: union of down_row over its members.
ElementSet down_closure(const Poset& poset, const ElementSet& subset);

// Order filter generated by `subset`.
ElementSet up_closure(const Poset& poset, const ElementSet& subset);

// Members of `subset` with no strictly smaller member of `subset`.
ElementSet minimals(const Poset& poset, const ElementSet& subset);

// Members of `subset` with no strictly larger member of `subset`.
ElementSet maximals(const Poset& poset, const ElementSet& subset);

// True when the members of `subset` are pairwise incomparable.
bool is_antichain(const Poset& poset, const ElementSet& subset);

// All pairs (x, y) with y covering x, sorted by (x, y).
std::vector<IndexPair> cover_edges(const Poset& poset);

// Order-reversing involution on a poset (a "complement" map).  The `strong`
// flag records whether the map is fixed-point free.
class Involution {
 public:
  std::size_t operator()(std::size_t x) const { return table_[x]; }
  const std::vector<std::size_t>& table() const { return table_; }
  bool strong() const { return strong_; }

  // Image { c(x) : x in subset }.
  ElementSet image(const ElementSet& subset) const;

 private:
  friend Involution validate_involution(const Poset&, std::vector<std::size_t>);
  std::vector<std::size_t> table_;
  bool strong_ = false;
};

// Checks that `table` is self-inverse and order-reversing on `poset`;
// throws InvolutionViolation otherwise.  Fixed points are legal and only
// clear the resulting `strong` flag.
Involution validate_involution(const Poset& poset, std::vector<std::size_t> table);

// A poset together with a strong (fixed-point free) order-reversing
// involution: the ambient structure for signed boolean maps.
struct Sip {
  Poset poset;
  Involution involution;
};

}  // namespace snr
