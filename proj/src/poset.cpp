#include "snr/poset.hpp"

#include <string>

#include "snr/errors.hpp"

namespace snr {

namespace {

void build_rows(std::size_t count,
                const std::function<bool(std::size_t, std::size_t)>& leq,
                std::vector<ElementSet>& up, std::vector<ElementSet>& down) {
  up.assign(count, ElementSet(count));
  down.assign(count, ElementSet(count));
  for (std::size_t x = 0; x < count; ++x) {
    for (std::size_t y = 0; y < count; ++y) {
      if (leq(x, y)) {
        up[x].set(y);
        down[y].set(x);
      }
    }
  }
}

}  // namespace

Poset Poset::from_relation_unchecked(
    std::size_t count, const std::function<bool(std::size_t, std::size_t)>& leq) {
  Poset poset;
  build_rows(count, leq, poset.up_, poset.down_);
  return poset;
}

Poset Poset::from_relation(std::size_t count,
                           const std::function<bool(std::size_t, std::size_t)>& leq) {
  Poset poset = from_relation_unchecked(count, leq);
  for (std::size_t x = 0; x < count; ++x) {
    if (!poset.up_[x].test(x)) throw PartialOrderViolation("reflexivity", x, x);
  }
  for (std::size_t x = 0; x < count; ++x) {
    for (std::size_t y = poset.up_[x].find_first(); y != ElementSet::npos;
         y = poset.up_[x].find_next(y)) {
      if (x != y && poset.up_[y].test(x)) throw PartialOrderViolation("antisymmetry", x, y);
      // Transitivity: everything above y must already be above x.
      if (!poset.up_[y].is_subset_of(poset.up_[x])) {
        ElementSet missing = poset.up_[y] - poset.up_[x];
        throw PartialOrderViolation("transitivity", x, missing.find_first());
      }
    }
  }
  return poset;
}

ElementSet down_closure(const Poset& poset, const ElementSet& subset) {
  ElementSet result(poset.size());
  for (std::size_t x = subset.find_first(); x != ElementSet::npos; x = subset.find_next(x)) {
    result |= poset.down_row(x);
  }
  return result;
}

ElementSet up_closure(const Poset& poset, const ElementSet& subset) {
  ElementSet result(poset.size());
  for (std::size_t x = subset.find_first(); x != ElementSet::npos; x = subset.find_next(x)) {
    result |= poset.up_row(x);
  }
  return result;
}

ElementSet minimals(const Poset& poset, const ElementSet& subset) {
  ElementSet result(poset.size());
  for (std::size_t x = subset.find_first(); x != ElementSet::npos; x = subset.find_next(x)) {
    ElementSet strictly_below = poset.down_row(x) & subset;
    strictly_below.reset(x);
    if (strictly_below.none()) result.set(x);
  }
  return result;
}

ElementSet maximals(const Poset& poset, const ElementSet& subset) {
  ElementSet result(poset.size());
  for (std::size_t x = subset.find_first(); x != ElementSet::npos; x = subset.find_next(x)) {
    ElementSet strictly_above = poset.up_row(x) & subset;
    strictly_above.reset(x);
    if (strictly_above.none()) result.set(x);
  }
  return result;
}

bool is_antichain(const Poset& poset, const ElementSet& subset) {
  for (std::size_t x = subset.find_first(); x != ElementSet::npos; x = subset.find_next(x)) {
    ElementSet comparable = (poset.up_row(x) | poset.down_row(x)) & subset;
    comparable.reset(x);
    if (comparable.any()) return false;
  }
  return true;
}

std::vector<IndexPair> cover_edges(const Poset& poset) {
  std::vector<IndexPair> edges;
  for (std::size_t x = 0; x < poset.size(); ++x) {
    ElementSet strictly_above = poset.up_row(x);
    strictly_above.reset(x);
    // y covers x iff y is minimal among the elements strictly above x.
    ElementSet covers = minimals(poset, strictly_above);
    for (std::size_t y = covers.find_first(); y != ElementSet::npos;
         y = covers.find_next(y)) {
      edges.emplace_back(x, y);
    }
  }
  return edges;  // outer loop ascending in x, inner ascending in y
}

ElementSet Involution::image(const ElementSet& subset) const {
  ElementSet result(subset.size());
  for (std::size_t x = subset.find_first(); x != ElementSet::npos; x = subset.find_next(x)) {
    result.set(table_[x]);
  }
  return result;
}

Involution validate_involution(const Poset& poset, std::vector<std::size_t> table) {
  const std::size_t count = poset.size();
  if (table.size() != count) {
    throw InvolutionViolation("involution table size does not match poset");
  }
  for (std::size_t x = 0; x < count; ++x) {
    if (table[x] >= count) {
      throw InvolutionViolation("involution value out of range at " + std::to_string(x));
    }
    if (table[table[x]] != x) {
      throw InvolutionViolation("map is not self-inverse at " + std::to_string(x));
    }
  }
  for (std::size_t x = 0; x < count; ++x) {
    for (std::size_t y = poset.up_row(x).find_first(); y != ElementSet::npos;
         y = poset.up_row(x).find_next(y)) {
      if (!poset.leq(table[y], table[x])) {
        throw InvolutionViolation("map is not order-reversing on (" + std::to_string(x) +
                                  ", " + std::to_string(y) + ")");
      }
    }
  }
  Involution involution;
  involution.table_ = std::move(table);
  involution.strong_ = true;
  for (std::size_t x = 0; x < count; ++x) {
    if (involution.table_[x] == x) {
      involution.strong_ = false;
      break;
    }
  }
  return involution;
}

}  // namespace snr
