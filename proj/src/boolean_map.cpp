#include "snr/boolean_map.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "snr/errors.hpp"

namespace snr {

char sign_char(Sign sign) { return sign == Sign::P ? 'P' : 'N'; }

Sign parse_sign(std::string_view token) {
  if (token == "P") return Sign::P;
  if (token == "N") return Sign::N;
  throw ParseError("expected sign P or N", 0);
}

PartialMap PartialMap::total_from_positives(const ElementSet& positives) {
  PartialMap map(positives.size());
  map.positives_ = positives;
  map.negatives_ = ~positives;
  return map;
}

Sign PartialMap::at(std::size_t x) const {
  if (positives_.test(x)) return Sign::P;
  if (negatives_.test(x)) return Sign::N;
  throw Error("element is outside the map's domain");
}

void PartialMap::assign(std::size_t x, Sign sign) {
  positives_.set(x, sign == Sign::P);
  negatives_.set(x, sign == Sign::N);
}

void PartialMap::erase(std::size_t x) {
  positives_.reset(x);
  negatives_.reset(x);
}

bool extends(const PartialMap& smaller, const PartialMap& larger) {
  return smaller.positives().is_subset_of(larger.positives()) &&
         smaller.negatives().is_subset_of(larger.negatives());
}

bool is_up_positive(const Poset& poset, const PartialMap& map) {
  // up(P-preimage) may not meet the N-preimage.
  return (up_closure(poset, map.positives()) & map.negatives()).none();
}

bool is_down_negative(const Poset& poset, const PartialMap& map) {
  return (down_closure(poset, map.negatives()) & map.positives()).none();
}

bool is_order_preserving(const Poset& poset, const PartialMap& map) {
  if (!map.is_total()) throw Error("order preservation requires a total map");
  return is_up_positive(poset, map);
}

bool is_complemented_positive(const Involution& involution, const PartialMap& map) {
  // No assigned pair x, c(x) may be N, N.
  return (involution.image(map.negatives()) & map.negatives()).none();
}

bool is_complemented_negative(const Involution& involution, const PartialMap& map) {
  return (involution.image(map.positives()) & map.positives()).none();
}

std::string family_name(MapFamily family) {
  switch (family) {
    case MapFamily::OP: return "op";
    case MapFamily::W_PLUS: return "wplus";
    case MapFamily::W_MINUS: return "wminus";
    case MapFamily::W_PLUS_NR: return "wplus-nr";
    case MapFamily::W_MINUS_NR: return "wminus-nr";
    case MapFamily::B_NR: return "b-nr";
    case MapFamily::BT_NR: return "bt-nr";
  }
  throw Error("unknown family");
}

MapFamily parse_family(std::string_view token) {
  for (MapFamily family : {MapFamily::OP, MapFamily::W_PLUS, MapFamily::W_MINUS,
                           MapFamily::W_PLUS_NR, MapFamily::W_MINUS_NR, MapFamily::B_NR,
                           MapFamily::BT_NR}) {
    if (family_name(family) == token) return family;
  }
  throw ParseError("unknown map family '" + std::string(token) + "'", 0);
}

bool classify(const Sip& sip, const PartialMap& map, MapFamily family) {
  if (map.universe() != sip.poset.size()) throw Error("map universe does not match poset");
  switch (family) {
    case MapFamily::OP:
      return map.is_total() && is_up_positive(sip.poset, map);
    case MapFamily::W_PLUS:
      return map.is_total() && is_up_positive(sip.poset, map) &&
             is_complemented_positive(sip.involution, map);
    case MapFamily::W_MINUS:
      return map.is_total() && is_down_negative(sip.poset, map) &&
             is_complemented_negative(sip.involution, map);
    default:
      throw Error("family requires the signed-string lattice");
  }
}

bool classify(const SnrLattice& lattice, const PartialMap& map, MapFamily family) {
  const SnrParams params = lattice.params();
  auto has_sign = [&](const SnrString& w, Sign sign) {
    const std::size_t x = lattice.index(w);
    return map.contains(x) && map.at(x) == sign;
  };
  switch (family) {
    case MapFamily::OP:
    case MapFamily::W_PLUS:
    case MapFamily::W_MINUS:
      return classify(lattice.sip(), map, family);
    case MapFamily::W_PLUS_NR:
      return classify(lattice.sip(), map, MapFamily::W_PLUS) &&
             has_sign(full_string(params), Sign::P);
    case MapFamily::W_MINUS_NR:
      return classify(lattice.sip(), map, MapFamily::W_MINUS) &&
             has_sign(full_string(params), Sign::N);
    case MapFamily::B_NR: {
      if (map.universe() != lattice.size()) throw Error("map universe does not match lattice");
      for (int i = 0; i <= params.r; ++i) {
        if (!has_sign(xi(params, i), Sign::P)) return false;
      }
      for (int j = 1; j <= params.bars(); ++j) {
        if (!has_sign(eta(params, j), Sign::N)) return false;
      }
      return true;
    }
    case MapFamily::BT_NR:
      return map.is_total() && classify(lattice, map, MapFamily::B_NR);
  }
  throw Error("unknown family");
}

ElementSet minimal_positives(const Poset& poset, const PartialMap& map) {
  return minimals(poset, map.positives());
}

ElementSet maximal_negatives(const Poset& poset, const PartialMap& map) {
  return maximals(poset, map.negatives());
}

ElementSet complemented_elements(const Sip& sip) {
  ElementSet result(sip.poset.size());
  for (std::size_t x = 0; x < sip.poset.size(); ++x) {
    if (sip.poset.leq(sip.involution(x), x)) result.set(x);
  }
  return result;
}

namespace {

// Splits a line into whitespace-separated tokens.
std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream stream(line);
  std::vector<std::string> tokens;
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

// Reads the "snr <n> <r>" parameter line shared by the textual formats.
// Returns the params and the number of the line it was found on.
SnrParams read_params_line(std::istream& in, std::size_t& line_number) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_number;
    const std::vector<std::string> tokens = tokens_of(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 3 || tokens[0] != "snr") {
      throw ParseError("expected parameter line 'snr <n> <r>'", line_number);
    }
    try {
      SnrParams params{std::stoi(tokens[1]), std::stoi(tokens[2])};
      validate_params(params);
      return params;
    } catch (const Error&) {
      throw ParseError("invalid parameters", line_number);
    } catch (const std::exception&) {
      throw ParseError("invalid parameters", line_number);
    }
  }
  throw ParseError("missing parameter line 'snr <n> <r>'", line_number);
}

}  // namespace

MapData read_map(std::istream& in) {
  MapData data;
  std::size_t line_number = 0;
  data.params = read_params_line(in, line_number);
  std::string line;
  std::vector<bool> seen(std::size_t{1} << data.params.n, false);
  while (std::getline(in, line)) {
    ++line_number;
    const std::vector<std::string> tokens = tokens_of(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) throw ParseError("expected '<string> <P|N>'", line_number);
    SnrString w;
    Sign sign;
    try {
      w = parse_string(tokens[0], data.params);
      sign = parse_sign(tokens[1]);
    } catch (const ParseError& error) {
      throw ParseError(std::string("bad map entry: ") + error.what(), line_number);
    }
    if (seen[string_index(w)]) throw ParseError("duplicate string in map", line_number);
    seen[string_index(w)] = true;
    data.entries.emplace_back(w, sign);
  }
  return data;
}

MapData parse_map(std::string_view text) {
  std::istringstream stream{std::string(text)};
  return read_map(stream);
}

PartialMap bind_map(const MapData& data, const SnrLattice& lattice) {
  if (data.params != lattice.params()) throw Error("map parameters do not match lattice");
  PartialMap map(lattice.size());
  for (const auto& [w, sign] : data.entries) map.assign(lattice.index(w), sign);
  return map;
}

void write_map(std::ostream& out, const SnrLattice& lattice, const PartialMap& map) {
  const SnrParams params = lattice.params();
  out << "snr " << params.n << ' ' << params.r << '\n';
  std::vector<std::string> lines;
  const ElementSet domain = map.domain();
  for (std::size_t x = domain.find_first(); x != ElementSet::npos; x = domain.find_next(x)) {
    lines.push_back(format_string(lattice.at(x)) + ' ' + sign_char(map.at(x)));
  }
  std::sort(lines.begin(), lines.end());
  for (const std::string& line : lines) out << line << '\n';
}

}  // namespace snr
