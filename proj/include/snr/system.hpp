#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "snr/boolean_map.hpp"
#include "snr/core.hpp"
#include "snr/feasibility.hpp"
#include "snr/lattice.hpp"
#include "snr/weights.hpp"

namespace snr {

// Relation of one system row: the subset sum over the row string's symbols
// is >= 0 or < 0.  The variable chain constraints are always implicit.
enum class RowRel : std::uint8_t { GEQ0, LT0 };

using SystemRow = std::pair<SnrString, RowRel>;

// A string may be a row iff it has at least two symbols (neither the empty
// string nor a singleton, whose signs are fixed by convention).
bool is_admissible_row_string(const SnrString& w);

// Inequality system over the signed-string variables.  Rows are stored
// sorted by canonical string index and are pairwise distinct.
class NrSystem {
 public:
  // Throws InvalidSystem on parameter mismatch, inadmissible row strings,
  // or duplicate strings (contradictory duplicate included).
  NrSystem(SnrParams params, std::vector<SystemRow> rows);

  SnrParams params() const { return params_; }
  const std::vector<SystemRow>& rows() const { return rows_; }
  std::optional<RowRel> relation_of(const SnrString& w) const;

  bool operator==(const NrSystem&) const = default;

 private:
  SnrParams params_;
  std::vector<SystemRow> rows_;
};

struct SystemClass {
  bool total = false;              // rows cover every admissible string
  bool weighted_positive = false;  // all-symbols row present with GEQ0
  bool weighted_negative = false;  // all-symbols row present with LT0
};

SystemClass classify_system(const NrSystem& system);

// Partial map of the system: rows keep their relation as a sign
// (GEQ0 -> P, LT0 -> N) and every reserved single-symbol string gets its
// conventional sign (empty string and tildes P, bars N).
PartialMap chi(const NrSystem& system, const SnrLattice& lattice);

// Inverse direction: one row per domain string with at least two symbols.
// Any reserved string present in the domain must carry its conventional
// sign; otherwise NotInBnr.
NrSystem tau(const SnrLattice& lattice, const PartialMap& map);

// Row-set containment (the subsystem partial order).  Throws InvalidSystem
// on parameter mismatch.
bool subsystem_leq(const NrSystem& smaller, const NrSystem& larger);

// Variable layout of the linear encoding: index 0..r-1 hold x_r..x_1,
// index r..n-1 hold y_1..y_{n-r}.
std::string var_name(SnrParams params, std::size_t index);

// Chain constraints plus one 0/1 subset row per system row (LT0 rows are
// negated into strict form).
std::vector<LinearConstraint> to_linear(const NrSystem& system);

struct CompatibilityResult {
  FeasibilityResult fm;
  // Witness repackaged as a weight function when FEASIBLE.
  std::optional<WeightFunction> solution;
};

// Exact feasibility of the system (chain included).
CompatibilityResult compatible(const NrSystem& system, const FmOptions& options = {});

// Same solutions in both directions, decided by mutual row implication.
// Throws InvalidSystem on parameter mismatch, Incompatible when either
// side has no solutions.
bool equivalent(const NrSystem& a, const NrSystem& b);

enum class GenerativeVerdict : std::uint8_t { GENERATIVE, NOT_GENERATIVE };

struct GenerativeResult {
  GenerativeVerdict verdict = GenerativeVerdict::NOT_GENERATIVE;
  // First admissible string (canonical index order) feasible with both
  // relations, when NOT_GENERATIVE.
  std::optional<SnrString> witness;
  // The equivalent total system, when GENERATIVE.
  std::optional<NrSystem> total_system;
};

// Probes every admissible string not fixed by the system with both
// relations.  Throws Incompatible when the system is infeasible and
// CapExceeded when n > cap_n.
GenerativeResult is_generative(const NrSystem& system, int cap_n = 12);

// Local-criterion report: the fundamental core's system decides the total
// map's system, and a class-constrained core witness lifts to it.
struct LocalCriterionReport {
  CoreReport core;
  Verdict map_verdict = Verdict::INFEASIBLE;
  Verdict core_verdict = Verdict::INFEASIBLE;
  bool verdicts_equal = false;
  // Solution of the core system constrained to the map's weight class
  // (the full-string row is added when absent), when feasible.
  std::optional<WeightFunction> witness;
  // Witness checked against the total map's system.
  bool witness_lifts = false;
};

// Plus-side local criterion.  Requires a total map in W_PLUS_NR
// (NotWeighted) whose reserved strings are conventionally signed
// (NotInBnr, via tau).
LocalCriterionReport plc_check(const SnrLattice& lattice, const PartialMap& map);

// Minus-side dual for W_MINUS_NR.
LocalCriterionReport nlc_check(const SnrLattice& lattice, const PartialMap& map);

// Text form: "snr <n> <r>" then one row per line, ">= <string>" or
// "< <string>"; rows emitted sorted by formatted string.
NrSystem read_system(std::istream& in);
NrSystem parse_system(std::string_view text);
void write_system(std::ostream& out, const NrSystem& system);

}  // namespace snr
