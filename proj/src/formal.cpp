#include "snr/formal.hpp"

#include "snr/core.hpp"
#include "snr/errors.hpp"
#include "snr/system.hpp"

namespace snr {

PointwiseResult is_complemented_pointwise(const SnrLattice& lattice, const PartialMap& map,
                                          int star_cap) {
  if (map.universe() != lattice.size()) throw Error("map universe does not match lattice");
  const ElementSet domain = map.domain();
  for (std::size_t x = domain.find_first(); x != ElementSet::npos; x = domain.find_next(x)) {
    const SnrString w = lattice.at(x);
    const Sign sign = map.at(x);
    PointwiseResult violation{true, std::nullopt};
    for_each_partition(
        w,
        [&](const std::vector<SnrString>& blocks) {
          bool sign_seen = false;
          for (const SnrString& block : blocks) {
            const std::size_t b = string_index(block);
            if (!map.contains(b)) return true;  // partition not fully in domain
            if (map.at(b) == sign) {
              sign_seen = true;
              break;  // this partition cannot violate
            }
          }
          if (sign_seen) return true;
          violation.ok = false;
          violation.witness = PointwiseWitness{w, blocks, sign};
          return false;  // stop at the first violation
        },
        star_cap);
    if (!violation.ok) return violation;
  }
  return {true, std::nullopt};
}

namespace {

bool in_fc(const SnrLattice& lattice, const PartialMap& map, bool plus, int star_cap) {
  if (!map.is_total()) return false;
  if (!classify(lattice, map, MapFamily::OP)) return false;
  const std::size_t full = lattice.index(full_string(lattice.params()));
  if (map.at(full) != (plus ? Sign::P : Sign::N)) return false;
  return is_complemented_pointwise(lattice, map, star_cap).ok;
}

}  // namespace

bool in_fc_plus(const SnrLattice& lattice, const PartialMap& map, int star_cap) {
  return in_fc(lattice, map, true, star_cap);
}

bool in_fc_minus(const SnrLattice& lattice, const PartialMap& map, int star_cap) {
  return in_fc(lattice, map, false, star_cap);
}

ConjectureReport conjecture_scan(const SnrLattice& lattice, bool plus, int cap_n,
                                 int star_cap) {
  const SnrParams params = lattice.params();
  if (params.n > cap_n) throw CapExceeded("conjecture scan above the configured cap");
  ConjectureReport report;
  report.params = params;
  report.plus = plus;
  const MapFamily family = plus ? MapFamily::W_PLUS_NR : MapFamily::W_MINUS_NR;
  for_each_family_member(
      lattice, family,
      [&](const PartialMap& map) {
        ++report.family_count;
        // Only maps with conventional reserved-string signs correspond to
        // systems at all; others cannot be images of compatible systems.
        if (!classify(lattice, map, MapFamily::BT_NR)) return true;
        if (!is_complemented_pointwise(lattice, map, star_cap).ok) return true;
        ++report.fc_count;
        const CoreReport core = plus ? fundamental_core_plus(lattice.sip(), map)
                                     : fundamental_core_minus(lattice.sip(), map);
        const NrSystem core_system = tau(lattice, core.core);
        if (compatible(core_system).fm.verdict == Verdict::FEASIBLE) {
          ++report.compatible_count;
        } else if (!report.witness) {
          report.witness = map;
        }
        return true;
      },
      lattice.size());
  report.verdict = report.fc_count == report.compatible_count ? ConjectureVerdict::EQUAL
                                                              : ConjectureVerdict::STRICT;
  return report;
}

}  // namespace snr
