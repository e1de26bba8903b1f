#include "snr/feasibility.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include "snr/errors.hpp"

namespace snr {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

bool all_zero(const LinearConstraint& c) {
  return std::all_of(c.coeffs.begin(), c.coeffs.end(),
                     [](const Rational& q) { return q == 0; });
}

// Scales so the first nonzero coefficient has absolute value 1; positive
// scaling preserves the solution set of a homogeneous relation.
std::vector<Rational> normalized_coeffs(const LinearConstraint& c) {
  std::vector<Rational> coeffs = c.coeffs;
  for (const Rational& q : coeffs) {
    if (q != 0) {
      const Rational scale = abs(q);
      for (Rational& v : coeffs) v /= scale;
      break;
    }
  }
  return coeffs;
}

// Conjunction of proportional constraints: the strict one is binding.
void dedup_constraints(std::vector<LinearConstraint>& constraints) {
  std::map<std::vector<Rational>, std::size_t> index_of;
  std::vector<LinearConstraint> kept;
  kept.reserve(constraints.size());
  for (LinearConstraint& c : constraints) {
    std::vector<Rational> key = normalized_coeffs(c);
    auto [it, inserted] = index_of.emplace(std::move(key), kept.size());
    if (inserted) {
      kept.push_back(std::move(c));
    } else if (c.rel == Rel::GT) {
      kept[it->second].rel = Rel::GT;
    }
  }
  constraints = std::move(kept);
}

Rational evaluate(const LinearConstraint& c, const std::vector<Rational>& assignment) {
  Rational sum = 0;
  for (std::size_t i = 0; i < c.coeffs.size(); ++i) sum += c.coeffs[i] * assignment[i];
  return sum;
}

bool satisfied(const LinearConstraint& c, const std::vector<Rational>& assignment) {
  const Rational sum = evaluate(c, assignment);
  return c.rel == Rel::GT ? sum > 0 : sum >= 0;
}

}  // namespace

bool check_witness(const std::vector<LinearConstraint>& constraints,
                   const std::vector<Rational>& assignment) {
  return std::all_of(constraints.begin(), constraints.end(),
                     [&](const LinearConstraint& c) { return satisfied(c, assignment); });
}

FeasibilityResult feasible(std::vector<LinearConstraint> constraints,
                           std::size_t variable_count, const FmOptions& options) {
  for (const LinearConstraint& c : constraints) {
    if (c.coeffs.size() != variable_count) {
      throw Error("constraint arity does not match the variable count");
    }
  }
  const std::vector<LinearConstraint> original = constraints;

  FeasibilityResult result;
  // stages[k] holds the constraint set in force before eliminating order[k].
  std::vector<std::vector<LinearConstraint>> stages;
  std::vector<std::size_t> order(variable_count);
  for (std::size_t k = 0; k < variable_count; ++k) {
    order[k] = options.reverse_order ? k : variable_count - 1 - k;
  }

  auto find_contradiction = [&](const std::vector<LinearConstraint>& set,
                                std::size_t var) -> bool {
    for (const LinearConstraint& c : set) {
      if (c.rel == Rel::GT && all_zero(c)) {
        result.verdict = Verdict::INFEASIBLE;
        result.trace.contradiction = FmContradiction{var, c, c};
        return true;
      }
    }
    return false;
  };

  if (find_contradiction(constraints, npos)) return result;

  bool infeasible = false;
  for (std::size_t k = 0; k < variable_count && !infeasible; ++k) {
    const std::size_t var = order[k];
    stages.push_back(constraints);
    std::vector<const LinearConstraint*> lowers, uppers;
    std::vector<LinearConstraint> next;
    for (const LinearConstraint& c : constraints) {
      if (c.coeffs[var] > 0) {
        lowers.push_back(&c);
      } else if (c.coeffs[var] < 0) {
        uppers.push_back(&c);
      } else {
        next.push_back(c);
      }
    }
    FmStep step{var, lowers.size(), uppers.size(), next.size(), 0};
    for (const LinearConstraint* low : lowers) {
      for (const LinearConstraint* up : uppers) {
        LinearConstraint combined;
        combined.coeffs.resize(variable_count);
        const Rational low_scale = -up->coeffs[var];  // positive
        const Rational up_scale = low->coeffs[var];   // positive
        for (std::size_t i = 0; i < variable_count; ++i) {
          combined.coeffs[i] = low_scale * low->coeffs[i] + up_scale * up->coeffs[i];
        }
        combined.rel = (low->rel == Rel::GT || up->rel == Rel::GT) ? Rel::GT : Rel::GEQ;
        if (all_zero(combined)) {
          if (combined.rel == Rel::GT) {
            result.trace.contradiction = FmContradiction{var, *low, *up};
            infeasible = true;
          }
          // 0 >= 0 is vacuous either way.
        } else {
          next.push_back(std::move(combined));
        }
        if (infeasible) break;
      }
      if (infeasible) break;
    }
    if (!infeasible) {
      // Drop vacuous all-zero weak constraints produced earlier.
      std::erase_if(next, [](const LinearConstraint& c) { return all_zero(c); });
      if (options.dedup) dedup_constraints(next);
      step.produced = next.size();
      constraints = std::move(next);
    }
    result.trace.steps.push_back(step);
  }

  if (infeasible) {
    result.verdict = Verdict::INFEASIBLE;
    return result;
  }

  // Back-substitute in reverse elimination order.
  std::vector<Rational> witness(variable_count, 0);
  for (std::size_t k = variable_count; k-- > 0;) {
    const std::size_t var = order[k];
    bool has_low = false, has_high = false;
    Rational low = 0, high = 0;
    for (const LinearConstraint& c : stages[k]) {
      const Rational& coeff = c.coeffs[var];
      if (coeff == 0) continue;
      // Residual uses only variables assigned at later stages; variables of
      // earlier stages were already eliminated, so their coefficients here
      // are zero and the placeholder values do not contribute.
      Rational residual = evaluate(c, witness) - coeff * witness[var];
      Rational bound = -residual / coeff;
      if (coeff > 0) {
        if (!has_low || bound > low) low = bound;
        has_low = true;
      } else {
        if (!has_high || bound < high) high = bound;
        has_high = true;
      }
    }
    // Midpoint between two-sided bounds (they can coincide only when both
    // are weak); a fixed offset inside one-sided regions, so the offset
    // option selects distinct solutions; zero for unconstrained variables.
    if (has_low && has_high) {
      witness[var] = (low + high) / 2;
    } else if (has_low) {
      witness[var] = low + options.offset;
    } else if (has_high) {
      witness[var] = high - options.offset;
    } else {
      witness[var] = 0;
    }
  }
  if (!check_witness(original, witness)) {
    throw std::logic_error("internal error: computed witness fails the input system");
  }
  result.verdict = Verdict::FEASIBLE;
  result.witness = std::move(witness);
  return result;
}

bool implies(const std::vector<LinearConstraint>& constraints,
             const LinearConstraint& candidate) {
  std::vector<LinearConstraint> augmented = constraints;
  LinearConstraint negation;
  negation.coeffs.reserve(candidate.coeffs.size());
  for (const Rational& q : candidate.coeffs) negation.coeffs.push_back(-q);
  negation.rel = candidate.rel == Rel::GEQ ? Rel::GT : Rel::GEQ;
  augmented.push_back(std::move(negation));
  return feasible(std::move(augmented), candidate.coeffs.size()).verdict ==
         Verdict::INFEASIBLE;
}

}  // namespace snr
