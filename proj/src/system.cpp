#include "snr/system.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "snr/errors.hpp"

namespace snr {

bool is_admissible_row_string(const SnrString& w) { return star_size(w) >= 2; }

NrSystem::NrSystem(SnrParams params, std::vector<SystemRow> rows)
    : params_(params), rows_(std::move(rows)) {
  validate_params(params_);
  std::sort(rows_.begin(), rows_.end(), [](const SystemRow& a, const SystemRow& b) {
    return string_index(a.first) < string_index(b.first);
  });
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (rows_[k].first.params() != params_) {
      throw InvalidSystem("row string parameters do not match the system");
    }
    if (!is_admissible_row_string(rows_[k].first)) {
      throw InvalidSystem("row string '" + format_string(rows_[k].first) +
                          "' is empty or a singleton");
    }
    if (k > 0 && rows_[k].first == rows_[k - 1].first) {
      throw InvalidSystem("duplicate row string '" + format_string(rows_[k].first) + "'");
    }
  }
}

std::optional<RowRel> NrSystem::relation_of(const SnrString& w) const {
  const auto it = std::lower_bound(
      rows_.begin(), rows_.end(), string_index(w),
      [](const SystemRow& row, std::size_t index) { return string_index(row.first) < index; });
  if (it != rows_.end() && it->first == w) return it->second;
  return std::nullopt;
}

SystemClass classify_system(const NrSystem& system) {
  const SnrParams params = system.params();
  SystemClass result;
  const std::size_t admissible_count =
      (std::size_t{1} << params.n) - 1 - static_cast<std::size_t>(params.n);
  result.total = system.rows().size() == admissible_count;
  if (const auto rel = system.relation_of(full_string(params))) {
    result.weighted_positive = *rel == RowRel::GEQ0;
    result.weighted_negative = *rel == RowRel::LT0;
  }
  return result;
}

PartialMap chi(const NrSystem& system, const SnrLattice& lattice) {
  if (system.params() != lattice.params()) {
    throw InvalidSystem("system parameters do not match lattice");
  }
  const SnrParams params = lattice.params();
  PartialMap map(lattice.size());
  for (int i = 0; i <= params.r; ++i) map.assign(lattice.index(xi(params, i)), Sign::P);
  for (int j = 1; j <= params.bars(); ++j) map.assign(lattice.index(eta(params, j)), Sign::N);
  for (const auto& [w, rel] : system.rows()) {
    map.assign(lattice.index(w), rel == RowRel::GEQ0 ? Sign::P : Sign::N);
  }
  return map;
}

NrSystem tau(const SnrLattice& lattice, const PartialMap& map) {
  const SnrParams params = lattice.params();
  if (map.universe() != lattice.size()) throw Error("map universe does not match lattice");
  auto demand = [&](const SnrString& w, Sign sign) {
    const std::size_t x = lattice.index(w);
    if (map.contains(x) && map.at(x) != sign) {
      throw NotInBnr("reserved string '" + format_string(w) + "' carries the wrong sign");
    }
  };
  for (int i = 0; i <= params.r; ++i) demand(xi(params, i), Sign::P);
  for (int j = 1; j <= params.bars(); ++j) demand(eta(params, j), Sign::N);
  std::vector<SystemRow> rows;
  const ElementSet domain = map.domain();
  for (std::size_t x = domain.find_first(); x != ElementSet::npos; x = domain.find_next(x)) {
    const SnrString w = lattice.at(x);
    if (!is_admissible_row_string(w)) continue;
    rows.emplace_back(w, map.at(x) == Sign::P ? RowRel::GEQ0 : RowRel::LT0);
  }
  return NrSystem(params, std::move(rows));
}

bool subsystem_leq(const NrSystem& smaller, const NrSystem& larger) {
  if (smaller.params() != larger.params()) {
    throw InvalidSystem("subsystem comparison across different parameters");
  }
  return std::all_of(smaller.rows().begin(), smaller.rows().end(), [&](const SystemRow& row) {
    return larger.relation_of(row.first) == row.second;
  });
}

std::string var_name(SnrParams params, std::size_t index) {
  if (index < static_cast<std::size_t>(params.r)) {
    return "x" + std::to_string(params.r - static_cast<int>(index));
  }
  if (index < static_cast<std::size_t>(params.n)) {
    return "y" + std::to_string(static_cast<int>(index) - params.r + 1);
  }
  throw Error("variable index out of range");
}

namespace {

std::size_t var_of_tilde(SnrParams params, int i) {
  return static_cast<std::size_t>(params.r - i);
}

std::size_t var_of_bar(SnrParams params, int j) {
  return static_cast<std::size_t>(params.r + j - 1);
}

LinearConstraint row_constraint(SnrParams params, const SystemRow& row) {
  LinearConstraint c;
  c.coeffs.assign(static_cast<std::size_t>(params.n), Rational(0));
  const Rational unit = row.second == RowRel::GEQ0 ? 1 : -1;
  for (int i = 1; i <= params.r; ++i) {
    if (row.first.tilde_mask >> (i - 1) & 1u) c.coeffs[var_of_tilde(params, i)] = unit;
  }
  for (int j = 1; j <= params.bars(); ++j) {
    if (row.first.bar_mask >> (j - 1) & 1u) c.coeffs[var_of_bar(params, j)] = unit;
  }
  c.rel = row.second == RowRel::GEQ0 ? Rel::GEQ : Rel::GT;
  return c;
}

}  // namespace

std::vector<LinearConstraint> to_linear(const NrSystem& system) {
  const SnrParams params = system.params();
  const std::size_t nvars = static_cast<std::size_t>(params.n);
  std::vector<LinearConstraint> constraints;
  auto chain = [&](std::size_t positive, std::size_t negative, Rel rel) {
    LinearConstraint c;
    c.coeffs.assign(nvars, Rational(0));
    c.coeffs[positive] += 1;
    if (negative != nvars) c.coeffs[negative] -= 1;
    c.rel = rel;
    constraints.push_back(std::move(c));
  };
  // x_r >= ... >= x_1 >= 0
  for (int i = params.r; i >= 2; --i) {
    chain(var_of_tilde(params, i), var_of_tilde(params, i - 1), Rel::GEQ);
  }
  chain(var_of_tilde(params, 1), nvars, Rel::GEQ);
  if (params.bars() > 0) {
    // 0 > y_1 >= ... >= y_{n-r}
    LinearConstraint strict;
    strict.coeffs.assign(nvars, Rational(0));
    strict.coeffs[var_of_bar(params, 1)] = -1;
    strict.rel = Rel::GT;
    constraints.push_back(std::move(strict));
    for (int j = 1; j + 1 <= params.bars(); ++j) {
      chain(var_of_bar(params, j), var_of_bar(params, j + 1), Rel::GEQ);
    }
  }
  for (const SystemRow& row : system.rows()) {
    constraints.push_back(row_constraint(params, row));
  }
  return constraints;
}

namespace {

WeightFunction weights_from_witness(SnrParams params, const std::vector<Rational>& witness) {
  std::vector<Rational> tilde(static_cast<std::size_t>(params.r));
  std::vector<Rational> bar(static_cast<std::size_t>(params.bars()));
  for (int i = 1; i <= params.r; ++i) {
    tilde[static_cast<std::size_t>(i - 1)] = witness[var_of_tilde(params, i)];
  }
  for (int j = 1; j <= params.bars(); ++j) {
    bar[static_cast<std::size_t>(j - 1)] = witness[var_of_bar(params, j)];
  }
  return WeightFunction(params, std::move(tilde), std::move(bar));
}

}  // namespace

CompatibilityResult compatible(const NrSystem& system, const FmOptions& options) {
  CompatibilityResult result;
  result.fm = feasible(to_linear(system), static_cast<std::size_t>(system.params().n), options);
  if (result.fm.verdict == Verdict::FEASIBLE) {
    result.solution = weights_from_witness(system.params(), result.fm.witness);
  }
  return result;
}

bool is_solution(const WeightFunction& f, const NrSystem& system) {
  if (f.params() != system.params()) throw Error("weight parameters do not match system");
  return std::all_of(system.rows().begin(), system.rows().end(), [&](const SystemRow& row) {
    const Rational sum = sigma(f, row.first);
    return row.second == RowRel::GEQ0 ? sum >= 0 : sum < 0;
  });
}

bool equivalent(const NrSystem& a, const NrSystem& b) {
  if (a.params() != b.params()) {
    throw InvalidSystem("equivalence comparison across different parameters");
  }
  if (compatible(a).fm.verdict != Verdict::FEASIBLE ||
      compatible(b).fm.verdict != Verdict::FEASIBLE) {
    throw Incompatible("equivalence requires both systems compatible");
  }
  const SnrParams params = a.params();
  auto implies_all = [&](const NrSystem& from, const NrSystem& into) {
    const std::vector<LinearConstraint> base = to_linear(from);
    return std::all_of(into.rows().begin(), into.rows().end(), [&](const SystemRow& row) {
      // A row `from` already contains is implied outright; elimination is
      // only needed for rows with no syntactic counterpart.
      if (from.relation_of(row.first) == row.second) return true;
      return implies(base, row_constraint(params, row));
    });
  };
  return implies_all(a, b) && implies_all(b, a);
}

GenerativeResult is_generative(const NrSystem& system, int cap_n) {
  const SnrParams params = system.params();
  if (params.n > cap_n) throw CapExceeded("generativity scan above the configured cap");
  if (compatible(system).fm.verdict != Verdict::FEASIBLE) {
    throw Incompatible("generativity is defined for compatible systems only");
  }
  std::vector<SystemRow> rows(system.rows());
  const std::size_t nvars = static_cast<std::size_t>(params.n);
  std::vector<LinearConstraint> base = to_linear(system);
  for (std::size_t idx = 0; idx < (std::size_t{1} << params.n); ++idx) {
    const SnrString w = string_at(params, idx);
    if (!is_admissible_row_string(w) || system.relation_of(w)) continue;
    const auto probe = [&](RowRel rel) {
      std::vector<LinearConstraint> probe_set = base;
      probe_set.push_back(row_constraint(params, {w, rel}));
      return feasible(std::move(probe_set), nvars).verdict == Verdict::FEASIBLE;
    };
    const bool can_pos = probe(RowRel::GEQ0);
    const bool can_neg = probe(RowRel::LT0);
    if (can_pos && can_neg) {
      GenerativeResult result;
      result.verdict = GenerativeVerdict::NOT_GENERATIVE;
      result.witness = w;
      return result;
    }
    if (!can_pos && !can_neg) {
      throw Error("internal error: a compatible system forces no relation");
    }
    rows.emplace_back(w, can_pos ? RowRel::GEQ0 : RowRel::LT0);
  }
  GenerativeResult result;
  result.verdict = GenerativeVerdict::GENERATIVE;
  result.total_system = NrSystem(params, std::move(rows));
  return result;
}

namespace {

LocalCriterionReport local_criterion(const SnrLattice& lattice, const PartialMap& map,
                                     bool plus) {
  const MapFamily family = plus ? MapFamily::W_PLUS_NR : MapFamily::W_MINUS_NR;
  if (!classify(lattice, map, family)) {
    throw NotWeighted("local criterion requires a total map of the matching weighted family");
  }
  LocalCriterionReport report;
  report.core = plus ? fundamental_core_plus(lattice.sip(), map)
                     : fundamental_core_minus(lattice.sip(), map);
  const NrSystem map_system = tau(lattice, map);  // NotInBnr on bad reserved signs
  const NrSystem core_system = tau(lattice, report.core.core);
  report.map_verdict = compatible(map_system).fm.verdict;
  report.core_verdict = compatible(core_system).fm.verdict;
  report.verdicts_equal = report.map_verdict == report.core_verdict;
  if (report.core_verdict == Verdict::FEASIBLE) {
    // Constrain the core witness to the map's weight class by adding the
    // all-symbols row when it is not already present (it cannot be a row
    // at all when n = 1).
    const SnrString full = full_string(lattice.params());
    std::vector<SystemRow> rows(core_system.rows());
    if (!core_system.relation_of(full) && is_admissible_row_string(full)) {
      rows.emplace_back(full, plus ? RowRel::GEQ0 : RowRel::LT0);
    }
    const CompatibilityResult constrained = compatible(NrSystem(lattice.params(), rows));
    if (constrained.fm.verdict == Verdict::FEASIBLE) {
      report.witness = constrained.solution;
      report.witness_lifts = is_solution(*constrained.solution, map_system);
    }
  }
  return report;
}

}  // namespace

LocalCriterionReport plc_check(const SnrLattice& lattice, const PartialMap& map) {
  return local_criterion(lattice, map, true);
}

LocalCriterionReport nlc_check(const SnrLattice& lattice, const PartialMap& map) {
  return local_criterion(lattice, map, false);
}

NrSystem read_system(std::istream& in) {
  std::size_t line_number = 0;
  SnrParams params{};
  bool have_params = false;
  std::vector<SystemRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream stream(line);
    std::vector<std::string> tokens;
    std::string token;
    while (stream >> token) tokens.push_back(token);
    if (tokens.empty()) continue;
    if (!have_params) {
      if (tokens.size() != 3 || tokens[0] != "snr") {
        throw ParseError("expected parameter line 'snr <n> <r>'", line_number);
      }
      try {
        params = {std::stoi(tokens[1]), std::stoi(tokens[2])};
        validate_params(params);
      } catch (const std::exception&) {
        throw ParseError("invalid parameters", line_number);
      }
      have_params = true;
      continue;
    }
    if (tokens.size() != 2 || (tokens[0] != ">=" && tokens[0] != "<")) {
      throw ParseError("expected row '>= <string>' or '< <string>'", line_number);
    }
    try {
      rows.emplace_back(parse_string(tokens[1], params),
                        tokens[0] == ">=" ? RowRel::GEQ0 : RowRel::LT0);
    } catch (const ParseError& error) {
      throw ParseError(std::string("bad row: ") + error.what(), line_number);
    }
  }
  if (!have_params) throw ParseError("missing parameter line 'snr <n> <r>'", line_number);
  try {
    return NrSystem(params, std::move(rows));
  } catch (const InvalidSystem& error) {
    throw ParseError(error.what(), line_number);
  }
}

NrSystem parse_system(std::string_view text) {
  std::istringstream stream{std::string(text)};
  return read_system(stream);
}

void write_system(std::ostream& out, const NrSystem& system) {
  const SnrParams params = system.params();
  out << "snr " << params.n << ' ' << params.r << '\n';
  std::vector<std::string> lines;
  for (const auto& [w, rel] : system.rows()) {
    lines.push_back((rel == RowRel::GEQ0 ? std::string(">= ") : std::string("< ")) +
                    format_string(w));
  }
  std::sort(lines.begin(), lines.end(),
            [](const std::string& a, const std::string& b) {
              return a.substr(a.find(' ') + 1) < b.substr(b.find(' ') + 1);
            });
  for (const std::string& line : lines) out << line << '\n';
}

}  // namespace snr
