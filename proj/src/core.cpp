#include "snr/core.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "snr/errors.hpp"

namespace snr {

namespace {

MapFamily weighted_family_of(const Sip& sip, const PartialMap& map) {
  if (classify(sip, map, MapFamily::W_PLUS)) return MapFamily::W_PLUS;
  if (classify(sip, map, MapFamily::W_MINUS)) return MapFamily::W_MINUS;
  throw NotWeighted("map is in neither weighted family");
}

PartialMap restriction(const PartialMap& map, const ElementSet& window) {
  PartialMap result(map.universe());
  for (std::size_t x = window.find_first(); x != ElementSet::npos; x = window.find_next(x)) {
    result.assign(x, map.at(x));
  }
  return result;
}

CoreReport make_report(const PartialMap& map, const ElementSet& domain, MapFamily family) {
  CoreReport report{restriction(map, domain), {}, family};
  report.pair = {report.core.positives(), report.core.negatives()};
  return report;
}

}  // namespace

PartialMap n_core(const Sip& sip, const PartialMap& map) {
  weighted_family_of(sip, map);
  return restriction(map, minimal_positives(sip.poset, map) | maximal_negatives(sip.poset, map));
}

CoreReport fundamental_core_plus(const Sip& sip, const PartialMap& map) {
  if (!classify(sip, map, MapFamily::W_PLUS)) {
    throw NotWeighted("fundamental plus-core requires a map in the plus family");
  }
  const ElementSet min_pos = minimal_positives(sip.poset, map);
  const ElementSet max_neg = maximal_negatives(sip.poset, map);
  const ElementSet domain = (min_pos | max_neg) - sip.involution.image(max_neg);
  return make_report(map, domain, MapFamily::W_PLUS);
}

CoreReport fundamental_core_minus(const Sip& sip, const PartialMap& map) {
  if (!classify(sip, map, MapFamily::W_MINUS)) {
    throw NotWeighted("fundamental minus-core requires a map in the minus family");
  }
  const ElementSet min_pos = minimal_positives(sip.poset, map);
  const ElementSet max_neg = maximals(sip.poset, map.negatives());
  const ElementSet domain = (min_pos | max_neg) - sip.involution.image(min_pos);
  return make_report(map, domain, MapFamily::W_MINUS);
}

std::string basis_axiom_name(BasisAxiom axiom) {
  switch (axiom) {
    case BasisAxiom::NONE: return "none";
    case BasisAxiom::DISJOINT: return "disjoint";
    case BasisAxiom::ANTICHAIN_POS: return "antichain-positive";
    case BasisAxiom::ANTICHAIN_NEG: return "antichain-negative";
    case BasisAxiom::B1: return "B1";
    case BasisAxiom::B2: return "B2";
    case BasisAxiom::B3: return "B3";
  }
  throw Error("unknown basis axiom");
}

namespace {

BasisCheck check_basis(const Sip& sip, const CorePair& pair, bool plus) {
  const auto& [pos, neg] = pair;
  if ((pos & neg).any()) return {false, BasisAxiom::DISJOINT};
  if (!is_antichain(sip.poset, pos)) return {false, BasisAxiom::ANTICHAIN_POS};
  if (!is_antichain(sip.poset, neg)) return {false, BasisAxiom::ANTICHAIN_NEG};
  const Involution& c = sip.involution;
  if (plus) {
    const ElementSet positive_region =
        up_closure(sip.poset, pos) | up_closure(sip.poset, c.image(neg));
    const ElementSet negative_region = down_closure(sip.poset, neg);
    if ((down_closure(sip.poset, pos) & c.image(neg)).any()) return {false, BasisAxiom::B1};
    if ((positive_region & negative_region).any()) return {false, BasisAxiom::B2};
    if (!(positive_region | negative_region).all()) return {false, BasisAxiom::B3};
  } else {
    const ElementSet negative_region =
        down_closure(sip.poset, neg) | down_closure(sip.poset, c.image(pos));
    const ElementSet positive_region = up_closure(sip.poset, pos);
    if ((up_closure(sip.poset, neg) & c.image(pos)).any()) return {false, BasisAxiom::B1};
    if ((negative_region & positive_region).any()) return {false, BasisAxiom::B2};
    if (!(negative_region | positive_region).all()) return {false, BasisAxiom::B3};
  }
  return {true, BasisAxiom::NONE};
}

}  // namespace

BasisCheck check_w_basis_plus(const Sip& sip, const CorePair& pair) {
  return check_basis(sip, pair, true);
}

BasisCheck check_w_basis_minus(const Sip& sip, const CorePair& pair) {
  return check_basis(sip, pair, false);
}

bool is_w_basis_plus(const Sip& sip, const CorePair& pair) {
  return check_w_basis_plus(sip, pair).ok;
}

bool is_w_basis_minus(const Sip& sip, const CorePair& pair) {
  return check_w_basis_minus(sip, pair).ok;
}

PartialMap span_plus(const Sip& sip, const CorePair& pair) {
  const BasisCheck check = check_w_basis_plus(sip, pair);
  if (!check.ok) {
    throw NotABasis("plus-span input fails axiom " + basis_axiom_name(check.failed));
  }
  const ElementSet positives = up_closure(sip.poset, pair.positive_part) |
                               up_closure(sip.poset, sip.involution.image(pair.negative_part));
  return PartialMap::total_from_positives(positives);
}

PartialMap span_minus(const Sip& sip, const CorePair& pair) {
  const BasisCheck check = check_w_basis_minus(sip, pair);
  if (!check.ok) {
    throw NotABasis("minus-span input fails axiom " + basis_axiom_name(check.failed));
  }
  const ElementSet negatives = down_closure(sip.poset, pair.negative_part) |
                               down_closure(sip.poset, sip.involution.image(pair.positive_part));
  return PartialMap::total_from_positives(~negatives);
}

CorePair h_plus(const Sip& sip, const PartialMap& map) {
  return fundamental_core_plus(sip, map).pair;
}

CorePair h_minus(const Sip& sip, const PartialMap& map) {
  return fundamental_core_minus(sip, map).pair;
}

namespace {

using Mask = std::uint64_t;

ElementSet to_element_set(Mask mask, std::size_t count) {
  ElementSet set(count);
  for (std::size_t x = 0; x < count; ++x) {
    if (mask >> x & 1u) set.set(x);
  }
  return set;
}

// Compact mask mirror of the poset/involution for fast enumeration.
struct MaskSip {
  std::size_t count = 0;
  std::vector<Mask> up, down;
  std::vector<std::size_t> inv;
  std::vector<std::size_t> order;  // linear extension, top elements first

  explicit MaskSip(const Sip& sip, std::size_t cap) {
    count = sip.poset.size();
    if (count > cap || count > 64) throw CapExceeded("family enumeration above the size cap");
    up.assign(count, 0);
    down.assign(count, 0);
    inv.resize(count);
    for (std::size_t x = 0; x < count; ++x) {
      inv[x] = sip.involution(x);
      for (std::size_t y = 0; y < count; ++y) {
        if (sip.poset.leq(x, y)) {
          up[x] |= Mask{1} << y;
          down[y] |= Mask{1} << x;
        }
      }
    }
    order.resize(count);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return std::popcount(up[a]) < std::popcount(up[b]);
    });
  }
};

// Depth-first choice of the P-part over `order` (larger elements first, so
// prefixes of P decided before their lower covers).  Prunes branches that
// already violate the up-set or complemented-sign conditions.
struct FamilyScan {
  const MaskSip& m;
  bool plus;                     // complemented-positive vs negative filter
  const std::function<bool(const PartialMap&)>& visit;
  bool stopped = false;

  bool run(std::size_t k, Mask pos, Mask assigned) {
    if (k == m.count) {
      if (!visit(PartialMap::total_from_positives(to_element_set(pos, m.count)))) {
        stopped = true;
      }
      return !stopped;
    }
    const std::size_t x = m.order[k];
    const Mask bit = Mask{1} << x;
    // Try x -> P: x's up-set already decided; P-part must be an up-set, so
    // everything assigned above x must be P.
    if ((m.up[x] & assigned & ~pos & ~bit) == 0) {
      if (!run(k + 1, pos | bit, assigned | bit)) return false;
    }
    // Try x -> N: up-set condition holds automatically (nothing below x is
    // decided yet); check the complemented-sign filter where possible.
    {
      const std::size_t cx = m.inv[x];
      const Mask cbit = Mask{1} << cx;
      bool allowed = true;
      if (plus) {
        // complemented positive: never N on both x and c(x)
        if (cx == x || ((assigned & cbit) != 0 && (pos & cbit) == 0)) allowed = false;
      }
      if (allowed) {
        if (!run(k + 1, pos, assigned | bit)) return false;
      }
    }
    return true;
  }
};

// Minus-family scan: symmetric filter (never P on both x and c(x)).
struct FamilyScanMinus {
  const MaskSip& m;
  const std::function<bool(const PartialMap&)>& visit;
  bool stopped = false;

  bool run(std::size_t k, Mask pos, Mask assigned) {
    if (k == m.count) {
      if (!visit(PartialMap::total_from_positives(to_element_set(pos, m.count)))) {
        stopped = true;
      }
      return !stopped;
    }
    const std::size_t x = m.order[k];
    const Mask bit = Mask{1} << x;
    const std::size_t cx = m.inv[x];
    const Mask cbit = Mask{1} << cx;
    if ((m.up[x] & assigned & ~pos & ~bit) == 0) {
      const bool clash = cx == x || ((assigned & cbit) != 0 && (pos & cbit) != 0);
      if (!clash) {
        if (!run(k + 1, pos | bit, assigned | bit)) return false;
      }
    }
    if (!run(k + 1, pos, assigned | bit)) return false;
    return true;
  }
};

}  // namespace

void for_each_family_member(const Sip& sip, MapFamily family,
                            const std::function<bool(const PartialMap&)>& visit,
                            std::size_t cap) {
  if (family != MapFamily::W_PLUS && family != MapFamily::W_MINUS) {
    throw Error("enumeration supports the weighted families only");
  }
  const MaskSip m(sip, cap);
  if (family == MapFamily::W_PLUS) {
    FamilyScan scan{m, true, visit};
    scan.run(0, 0, 0);
  } else {
    FamilyScanMinus scan{m, visit};
    scan.run(0, 0, 0);
  }
}

void for_each_family_member(const SnrLattice& lattice, MapFamily family,
                            const std::function<bool(const PartialMap&)>& visit,
                            std::size_t cap) {
  switch (family) {
    case MapFamily::W_PLUS:
    case MapFamily::W_MINUS:
      for_each_family_member(lattice.sip(), family, visit, cap);
      return;
    case MapFamily::W_PLUS_NR:
    case MapFamily::W_MINUS_NR: {
      const bool plus = family == MapFamily::W_PLUS_NR;
      const std::size_t full = lattice.index(full_string(lattice.params()));
      for_each_family_member(
          lattice.sip(), plus ? MapFamily::W_PLUS : MapFamily::W_MINUS,
          [&](const PartialMap& map) {
            if (map.at(full) != (plus ? Sign::P : Sign::N)) return true;
            return visit(map);
          },
          cap);
      return;
    }
    default:
      throw Error("enumeration supports the weighted families only");
  }
}

std::vector<PartialMap> enumerate_family(const Sip& sip, MapFamily family, std::size_t cap) {
  std::vector<PartialMap> result;
  for_each_family_member(sip, family, [&](const PartialMap& map) {
    result.push_back(map);
    return true;
  }, cap);
  return result;
}

std::vector<PartialMap> enumerate_family(const SnrLattice& lattice, MapFamily family,
                                         std::size_t cap) {
  std::vector<PartialMap> result;
  for_each_family_member(lattice, family, [&](const PartialMap& map) {
    result.push_back(map);
    return true;
  }, cap);
  return result;
}

namespace {

template <typename Enumerate>
bool core_brute(const Enumerate& enumerate, const ElementSet& window, const PartialMap& map) {
  const PartialMap target = restriction(map, window);
  std::size_t extensions = 0;
  enumerate([&](const PartialMap& member) {
    if (extends(target, member)) ++extensions;
    return extensions < 2;
  });
  return extensions == 1;
}

}  // namespace

bool is_core_brute(const Sip& sip, const ElementSet& window, const PartialMap& map,
                   MapFamily family, std::size_t cap) {
  return core_brute(
      [&](const std::function<bool(const PartialMap&)>& visit) {
        for_each_family_member(sip, family, visit, cap);
      },
      window, map);
}

bool is_core_brute(const SnrLattice& lattice, const ElementSet& window, const PartialMap& map,
                   MapFamily family, std::size_t cap) {
  return core_brute(
      [&](const std::function<bool(const PartialMap&)>& visit) {
        for_each_family_member(lattice, family, visit, cap);
      },
      window, map);
}

}  // namespace snr
