#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "snr/rational.hpp"

namespace snr {

// Homogeneous linear relation  sum(coeffs[i] * v_i)  >= 0  or  > 0.
enum class Rel : std::uint8_t { GEQ, GT };

struct LinearConstraint {
  std::vector<Rational> coeffs;
  Rel rel = Rel::GEQ;
  bool operator==(const LinearConstraint&) const = default;
};

// One variable-elimination step of the Fourier-Motzkin run.
struct FmStep {
  std::size_t var = 0;       // variable index eliminated at this step
  std::size_t lowers = 0;    // constraints bounding it from below
  std::size_t uppers = 0;    // constraints bounding it from above
  std::size_t frees = 0;     // constraints not mentioning it
  std::size_t produced = 0;  // combined constraints after deduplication
};

// The derivation of 0 > 0: the eliminated variable (npos when an input
// constraint was already contradictory) and the two parent constraints.
struct FmContradiction {
  std::size_t var = 0;
  LinearConstraint lower, upper;
};

struct FmTrace {
  std::vector<FmStep> steps;
  std::optional<FmContradiction> contradiction;
};

enum class Verdict : std::uint8_t { FEASIBLE, INFEASIBLE };

struct FeasibilityResult {
  Verdict verdict = Verdict::INFEASIBLE;
  // One exact value per variable when FEASIBLE; empty otherwise.
  std::vector<Rational> witness;
  FmTrace trace;
};

struct FmOptions {
  // Default elimination order is descending variable index; reversed is
  // ascending.  Feasibility verdicts are order-independent.
  bool reverse_order = false;
  // Distance used for witness coordinates bounded on one side only.
  Rational offset = 1;
  // Merge positively-proportional constraints between steps.
  bool dedup = true;
};

// Exact rational Fourier-Motzkin elimination.  Every constraint must have
// exactly `variable_count` coefficients.  A FEASIBLE result carries a
// witness that satisfies all input constraints (verified internally);
// an INFEASIBLE result carries the contradiction derivation.
FeasibilityResult feasible(std::vector<LinearConstraint> constraints,
                           std::size_t variable_count, const FmOptions& options = {});

// Exact check of an assignment against every constraint.
bool check_witness(const std::vector<LinearConstraint>& constraints,
                   const std::vector<Rational>& assignment);

// True when every solution of `constraints` also satisfies `candidate`
// (decided by testing the negation for feasibility).
bool implies(const std::vector<LinearConstraint>& constraints,
             const LinearConstraint& candidate);

}  // namespace snr
