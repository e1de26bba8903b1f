#include <doctest.h>

#include <cstddef>
#include <limits>
#include <random>
#include <vector>

#include "snr/errors.hpp"
#include "snr/feasibility.hpp"
#include "snr/rational.hpp"

using namespace snr;

namespace {

LinearConstraint row(std::vector<int> coeffs, Rel rel = Rel::GEQ) {
  LinearConstraint c;
  c.coeffs.assign(coeffs.begin(), coeffs.end());
  c.rel = rel;
  return c;
}

constexpr std::size_t kNoVar = std::numeric_limits<std::size_t>::max();

}  // namespace

TEST_CASE("one-sided and two-sided witness selection") {
  // A single lower bound places the witness one offset above it.
  auto result = feasible({row({1})}, 1);
  CHECK(result.verdict == Verdict::FEASIBLE);
  CHECK(result.witness == std::vector<Rational>{1});

  result = feasible({row({1}, Rel::GT)}, 1);
  CHECK(result.witness == std::vector<Rational>{1});

  // A single upper bound places it one offset below.
  result = feasible({row({-1})}, 1);
  CHECK(result.witness == std::vector<Rational>{-1});

  // The offset option selects a different solution.
  result = feasible({row({1})}, 1, FmOptions{false, 2, true});
  CHECK(result.witness == std::vector<Rational>{2});
  result = feasible({row({-1})}, 1, FmOptions{false, 2, true});
  CHECK(result.witness == std::vector<Rational>{-2});

  // Bounded on both sides: the midpoint.  x0 <= x1 <= 3 x0 with x0 driven
  // to 1 gives x1 = 2.
  result = feasible({row({-1, 1}), row({3, -1})}, 2);
  CHECK(result.verdict == Verdict::FEASIBLE);
  CHECK(result.witness == std::vector<Rational>{1, 2});

  // Coincident weak bounds collapse to a point.
  result = feasible({row({-1, 1}), row({1, -1})}, 2);
  CHECK(result.witness == std::vector<Rational>{0, 0});

  // Unconstrained variables sit at zero.
  result = feasible({row({0, 1})}, 2);
  CHECK(result.witness == std::vector<Rational>{0, 1});

  // The empty system is feasible, even over zero variables.
  CHECK(feasible({}, 3).witness == std::vector<Rational>{0, 0, 0});
  result = feasible({}, 0);
  CHECK(result.verdict == Verdict::FEASIBLE);
  CHECK(result.witness.empty());
  CHECK(result.trace.steps.empty());
}

TEST_CASE("contradictions carry their derivation") {
  // A strict all-zero input row is contradictory before any elimination.
  auto result = feasible({row({0, 0}, Rel::GT)}, 2);
  CHECK(result.verdict == Verdict::INFEASIBLE);
  CHECK(result.witness.empty());
  CHECK(result.trace.steps.empty());
  REQUIRE(result.trace.contradiction.has_value());
  CHECK(result.trace.contradiction->var == kNoVar);
  CHECK(result.trace.contradiction->lower == row({0, 0}, Rel::GT));

  // A weak all-zero row is vacuous.
  CHECK(feasible({row({0, 0})}, 2).verdict == Verdict::FEASIBLE);

  // x0 >= 0 and x0 < 0 collide when x0 is eliminated; the parents of the
  // derived 0 > 0 are recorded.  The first step still reports its counts.
  result = feasible({row({-1, 1}), row({0, -1}, Rel::GT), row({1, 0})}, 2);
  CHECK(result.verdict == Verdict::INFEASIBLE);
  REQUIRE(result.trace.contradiction.has_value());
  CHECK(result.trace.contradiction->var == 0);
  CHECK(result.trace.contradiction->lower == row({1, 0}));
  CHECK(result.trace.contradiction->upper == row({-1, 0}, Rel::GT));
  REQUIRE(result.trace.steps.size() == 2);
  CHECK(result.trace.steps[0].var == 1);
  CHECK(result.trace.steps[0].lowers == 1);
  CHECK(result.trace.steps[0].uppers == 1);
  CHECK(result.trace.steps[0].frees == 1);
  CHECK(result.trace.steps[0].produced == 2);
  CHECK(result.trace.steps[1].var == 0);
  CHECK(result.trace.steps[1].lowers == 1);
  CHECK(result.trace.steps[1].uppers == 1);
  CHECK(result.trace.steps[1].produced == 0);
}

TEST_CASE("arity is validated") {
  CHECK_THROWS_AS(feasible({row({1, 0})}, 3), Error);
  CHECK_THROWS_AS(feasible({row({1})}, 0), Error);
}

TEST_CASE("proportional constraints merge between steps, strict wins") {
  // The first elimination leaves two positively proportional rows; with
  // deduplication they merge into one strict row.
  const std::vector<LinearConstraint> input{row({1, 1, 0}), row({2, 2, 0}, Rel::GT),
                                            row({-1, 0, 1})};
  auto merged = feasible(input, 3);
  REQUIRE(merged.trace.steps.size() == 3);
  CHECK(merged.trace.steps[0].var == 2);
  CHECK(merged.trace.steps[0].lowers == 1);
  CHECK(merged.trace.steps[0].frees == 2);
  CHECK(merged.trace.steps[0].produced == 1);
  // The second step sees the single merged row.
  CHECK(merged.trace.steps[1].lowers == 1);
  CHECK(merged.trace.steps[1].frees == 0);

  auto kept = feasible(input, 3, FmOptions{false, 1, false});
  CHECK(kept.trace.steps[0].produced == 2);
  CHECK(kept.trace.steps[1].lowers == 2);

  // Verdicts and witness validity are unaffected.
  CHECK(merged.verdict == Verdict::FEASIBLE);
  CHECK(kept.verdict == Verdict::FEASIBLE);
  CHECK(check_witness(input, merged.witness));
  CHECK(check_witness(input, kept.witness));

  // Opposite-signed proportional rows do not merge (they bound from two
  // sides rather than repeating one bound).
  auto opposite = feasible({row({1, 1}), row({-1, -1})}, 2);
  CHECK(opposite.trace.steps[0].lowers == 1);
  CHECK(opposite.trace.steps[0].uppers == 1);
  CHECK(opposite.verdict == Verdict::FEASIBLE);
}

TEST_CASE("witness checking is exact") {
  CHECK(check_witness({row({1})}, {0}));
  CHECK_FALSE(check_witness({row({1}, Rel::GT)}, {0}));
  // 3 * (1/3) - 1 is exactly zero.
  CHECK(check_witness({row({3, -1})}, {Rational(1) / 3, 1}));
  CHECK_FALSE(check_witness({row({3, -1}, Rel::GT)}, {Rational(1) / 3, 1}));

  // Solutions of a homogeneous system scale.
  const std::vector<LinearConstraint> system{row({-1, 1}, Rel::GT), row({1, 0})};
  const auto result = feasible(system, 2);
  REQUIRE(result.verdict == Verdict::FEASIBLE);
  std::vector<Rational> doubled = result.witness;
  for (Rational& q : doubled) q *= 2;
  CHECK(check_witness(system, doubled));
}

TEST_CASE("implication by infeasibility of the negation") {
  const std::vector<LinearConstraint> system{row({-1, 1}), row({1, 0})};  // 0 <= x0 <= x1
  CHECK(implies(system, row({0, 1})));                                    // x1 >= 0
  CHECK(implies(system, row({1, 1})));                                    // x0 + x1 >= 0
  CHECK_FALSE(implies(system, row({0, 1}, Rel::GT)));  // x1 can be zero
  CHECK_FALSE(implies(system, row({1, -1})));          // x0 >= x1 fails at (0, 1)
  CHECK(implies({row({1}, Rel::GT)}, row({1})));       // strict implies weak
  CHECK(implies({row({1})}, row({2})));                // proportional
  // Any candidate follows from an infeasible system.
  CHECK(implies({row({0, 0}, Rel::GT)}, row({1, -1}, Rel::GT)));
}

TEST_CASE("verdicts are invariant under elimination order and merging") {
  // Dense random systems are kept small: elimination can square the
  // constraint count per step, so unmerged runs on wide random systems
  // grow without bound.
  std::mt19937 rng(20260818);
  std::uniform_int_distribution<int> var_count(1, 4);
  std::uniform_int_distribution<int> row_count(0, 6);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> strict(0, 3);

  int feasible_seen = 0, infeasible_seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t vars = static_cast<std::size_t>(var_count(rng));
    const int rows = row_count(rng);
    std::vector<LinearConstraint> system;
    for (int k = 0; k < rows; ++k) {
      LinearConstraint c;
      for (std::size_t v = 0; v < vars; ++v) c.coeffs.push_back(coeff(rng));
      c.rel = strict(rng) == 0 ? Rel::GT : Rel::GEQ;
      system.push_back(std::move(c));
    }
    const auto forward = feasible(system, vars);
    const auto backward = feasible(system, vars, FmOptions{true, 1, true});
    const auto unmerged = feasible(system, vars, FmOptions{false, 1, false});
    CHECK(forward.verdict == backward.verdict);
    CHECK(forward.verdict == unmerged.verdict);
    if (forward.verdict == Verdict::FEASIBLE) {
      ++feasible_seen;
      CHECK(check_witness(system, forward.witness));
      CHECK(check_witness(system, backward.witness));
      CHECK(check_witness(system, unmerged.witness));
    } else {
      ++infeasible_seen;
      CHECK(forward.trace.contradiction.has_value());
    }
  }
  // The sample exercises both verdicts.
  CHECK(feasible_seen > 20);
  CHECK(infeasible_seen > 20);
}
