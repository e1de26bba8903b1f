#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "snr/core.hpp"
#include "snr/errors.hpp"
#include "snr/feasibility.hpp"
#include "snr/lattice.hpp"
#include "snr/system.hpp"
#include "snr/weights.hpp"
#include "test_util.hpp"

using namespace snr;
using testutil::set_of;
using testutil::str;

namespace {

LinearConstraint lin(std::vector<int> coeffs, Rel rel) {
  LinearConstraint c;
  c.coeffs.assign(coeffs.begin(), coeffs.end());
  c.rel = rel;
  return c;
}

SystemRow geq(const SnrParams& params, const char* text) {
  return {parse_string(text, params), RowRel::GEQ0};
}

SystemRow lt(const SnrParams& params, const char* text) {
  return {parse_string(text, params), RowRel::LT0};
}

}  // namespace

TEST_CASE("system rows are canonically sorted and validated") {
  const SnrParams params{5, 3};
  const NrSystem system(params,
                        {lt(params, "321|02"), geq(params, "200|01"), lt(params, "100|01")});
  REQUIRE(system.rows().size() == 3);
  CHECK(format_string(system.rows()[0].first) == "100|01");
  CHECK(format_string(system.rows()[1].first) == "200|01");
  CHECK(format_string(system.rows()[2].first) == "321|02");

  CHECK(system.relation_of(str(build_lattice(params), "200|01")) == RowRel::GEQ0);
  CHECK(system.relation_of(str(build_lattice(params), "321|02")) == RowRel::LT0);
  CHECK_FALSE(system.relation_of(full_string(params)).has_value());

  // Under two symbols a string cannot be a row.
  CHECK(is_admissible_row_string(parse_string("100|01", params)));
  CHECK_FALSE(is_admissible_row_string(empty_string(params)));
  CHECK_FALSE(is_admissible_row_string(xi(params, 1)));
  CHECK_FALSE(is_admissible_row_string(eta(params, 2)));
  CHECK(is_admissible_row_string(full_string({2, 1})));

  CHECK_THROWS_AS(NrSystem(params, {geq(params, "100|00")}), InvalidSystem);  // singleton
  CHECK_THROWS_AS(NrSystem(params, {geq(params, "000|00")}), InvalidSystem);  // empty
  CHECK_THROWS_AS(NrSystem(params, {geq(params, "200|01"), lt(params, "200|01")}),
                  InvalidSystem);  // duplicate string, even with opposite relations
  CHECK_THROWS_AS(NrSystem({4, 2}, {geq(params, "200|01")}), InvalidSystem);  // params
}

TEST_CASE("system classification counts admissible rows") {
  // On two symbols the only admissible string is the all-symbols string.
  const SnrParams two{2, 1};
  const NrSystem tiny(two, {geq(two, "1|1")});
  CHECK(classify_system(tiny).total);
  CHECK(classify_system(tiny).weighted_positive);
  CHECK_FALSE(classify_system(tiny).weighted_negative);

  const SnrParams params{5, 3};
  const NrSystem core(params,
                      {lt(params, "100|01"), geq(params, "200|01"), lt(params, "321|02")});
  CHECK_FALSE(classify_system(core).total);  // 3 of 26 admissible strings
  CHECK_FALSE(classify_system(core).weighted_positive);
  CHECK_FALSE(classify_system(core).weighted_negative);

  const NrSystem weighted(params, {lt(params, "321|12")});
  CHECK(classify_system(weighted).weighted_negative);
}

TEST_CASE("system and map views are mutually inverse") {
  const SnrLattice lattice = build_lattice({5, 3});
  const SnrParams params = lattice.params();
  const NrSystem core(params,
                      {lt(params, "100|01"), geq(params, "200|01"), lt(params, "321|02")});

  // The map of a system signs its rows and all reserved strings.
  const PartialMap map = chi(core, lattice);
  CHECK(map.domain_size() == 6 + 3);  // empty + three tildes + two bars + rows
  CHECK(map.at(lattice.index(empty_string(params))) == Sign::P);
  CHECK(map.at(lattice.index(xi(params, 3))) == Sign::P);
  CHECK(map.at(lattice.index(eta(params, 2))) == Sign::N);
  CHECK(map.at(lattice.index(str(lattice, "200|01"))) == Sign::P);
  CHECK(map.at(lattice.index(str(lattice, "321|02"))) == Sign::N);

  // Going back drops the reserved strings and keeps the rows.
  CHECK(tau(lattice, map) == core);

  // The same round trip holds for the six-two fixtures.
  const SnrLattice six = build_lattice({6, 2});
  for (const char* text : {fixtures::kSystemEight62, fixtures::kSystemNine62}) {
    const NrSystem system = parse_system(text);
    CHECK(tau(six, chi(system, six)) == system);
  }

  // On total maps with conventional reserved signs the other composition
  // is the identity.
  const testutil::Bound fixture = testutil::bind(fixtures::kMinusBasis53);
  const PartialMap span = span_minus(lattice.sip(),
                                     {set_of(lattice, {"000|00", "200|01"}),
                                      set_of(lattice, {"321|02", "100|01"})});
  REQUIRE(classify(lattice, span, MapFamily::BT_NR));
  const NrSystem total = tau(lattice, span);
  CHECK(total.rows().size() == 26);  // 2^5 - 1 - 5 admissible strings
  CHECK(classify_system(total).total);
  CHECK(chi(total, lattice) == span);
  // The core system is a subsystem of the total one.
  CHECK(subsystem_leq(core, total));
  CHECK_FALSE(subsystem_leq(total, core));
  CHECK_THROWS_AS(subsystem_leq(core, parse_system(fixtures::kSystemNine62)), InvalidSystem);

  CHECK_THROWS_AS(chi(core, six), InvalidSystem);
  CHECK_THROWS_AS(tau(six, map), Error);  // universe mismatch
}

TEST_CASE("reserved strings in the domain must carry their conventional signs") {
  const SnrLattice lattice = build_lattice({2, 1});
  const PartialMap all_p = PartialMap::total_from_positives(~ElementSet(lattice.size()));
  try {
    tau(lattice, all_p);
    CHECK(false);
  } catch (const NotInBnr& e) {
    CHECK(std::string(e.what()).find("0|1") != std::string::npos);
  }

  // Strings absent from the domain are not demanded.
  const SnrLattice three = build_lattice({3, 2});
  const PartialMap partial = testutil::map_of(three, {{"21|0", Sign::P}, {"10|1", Sign::N}});
  const NrSystem system = tau(three, partial);
  REQUIRE(system.rows().size() == 2);
  CHECK(system.relation_of(str(three, "21|0")) == RowRel::GEQ0);
  CHECK(system.relation_of(str(three, "10|1")) == RowRel::LT0);
}

TEST_CASE("linear encoding lists chain rows then system rows") {
  const SnrParams params{5, 3};
  CHECK(var_name(params, 0) == "x3");
  CHECK(var_name(params, 1) == "x2");
  CHECK(var_name(params, 2) == "x1");
  CHECK(var_name(params, 3) == "y1");
  CHECK(var_name(params, 4) == "y2");
  CHECK_THROWS_AS(var_name(params, 5), Error);

  const NrSystem core(params,
                      {lt(params, "100|01"), geq(params, "200|01"), lt(params, "321|02")});
  const std::vector<LinearConstraint> expected{
      lin({1, -1, 0, 0, 0}, Rel::GEQ),    // x3 >= x2
      lin({0, 1, -1, 0, 0}, Rel::GEQ),    // x2 >= x1
      lin({0, 0, 1, 0, 0}, Rel::GEQ),     // x1 >= 0
      lin({0, 0, 0, -1, 0}, Rel::GT),     // y1 < 0
      lin({0, 0, 0, 1, -1}, Rel::GEQ),    // y1 >= y2
      lin({0, 0, -1, -1, 0}, Rel::GT),    // row 100|01 < 0
      lin({0, 1, 0, 1, 0}, Rel::GEQ),     // row 200|01 >= 0
      lin({-1, -1, -1, 0, -1}, Rel::GT),  // row 321|02 < 0
  };
  CHECK(to_linear(core) == expected);

  // Without bar symbols only the tilde chain appears.
  const SnrParams flat{2, 2};
  CHECK(to_linear(NrSystem(flat, {geq(flat, "21|")})) ==
        std::vector<LinearConstraint>{lin({1, -1}, Rel::GEQ), lin({0, 1}, Rel::GEQ),
                                      lin({1, 1}, Rel::GEQ)});
}

TEST_CASE("compatibility of the worked systems") {
  const SnrParams params{5, 3};
  const NrSystem core(params,
                      {lt(params, "100|01"), geq(params, "200|01"), lt(params, "321|02")});
  const CompatibilityResult result = compatible(core);
  CHECK(result.fm.verdict == Verdict::FEASIBLE);
  REQUIRE(result.solution.has_value());
  CHECK(is_solution(*result.solution, core));

  // The published weights solve both the core system and the full system
  // of the spanned map.
  const std::vector<Rational> published{Rational(1, 2), Rational(1, 3), Rational(1, 6),
                                        Rational(-1, 5), Rational(-6, 5)};
  CHECK(check_witness(to_linear(core), published));
  const SnrLattice lattice = build_lattice(params);
  const PartialMap span = span_minus(lattice.sip(),
                                     {set_of(lattice, {"000|00", "200|01"}),
                                      set_of(lattice, {"321|02", "100|01"})});
  const NrSystem total = tau(lattice, span);
  CHECK(check_witness(to_linear(total), published));
  CHECK(is_solution(parse_weight_function(fixtures::kMinusWeights53), total));

  // The two-row core of the six-three example admits no weights at all.
  const SnrParams six{6, 3};
  const NrSystem blocked(six, {lt(six, "321|012"), geq(six, "100|003")});
  const CompatibilityResult infeasible = compatible(blocked);
  CHECK(infeasible.fm.verdict == Verdict::INFEASIBLE);
  CHECK_FALSE(infeasible.solution.has_value());
  CHECK(infeasible.fm.trace.contradiction.has_value());
}

TEST_CASE("equivalence is mutual row implication over a common solution set") {
  const NrSystem eight = parse_system(fixtures::kSystemEight62);
  const NrSystem nine = parse_system(fixtures::kSystemNine62);

  CHECK(equivalent(nine, nine));
  CHECK_FALSE(equivalent(eight, nine));

  // The generated total system has the same solutions as its seed.  (A
  // four-symbol seed keeps the total system's elimination cheap.)
  const NrSystem seed = parse_system("snr 4 2\n>= 21|12\n>= 10|12\n");
  const GenerativeResult generated = is_generative(seed);
  REQUIRE(generated.total_system.has_value());
  CHECK(generated.total_system->rows().size() == 11);  // 2^4 - 1 - 4
  CHECK(equivalent(seed, *generated.total_system));
  CHECK_FALSE(equivalent(parse_system("snr 4 2\n>= 21|12\n< 10|02\n"),
                         *generated.total_system));

  const SnrParams six{6, 3};
  const NrSystem blocked(six, {lt(six, "321|012"), geq(six, "100|003")});
  CHECK_THROWS_AS(equivalent(blocked, blocked), Incompatible);
  CHECK_THROWS_AS(equivalent(eight, NrSystem({5, 3}, {})), InvalidSystem);
}

TEST_CASE("generativity scan on the six-two systems") {
  const NrSystem eight = parse_system(fixtures::kSystemEight62);
  const GenerativeResult undecided = is_generative(eight);
  CHECK(undecided.verdict == GenerativeVerdict::NOT_GENERATIVE);
  REQUIRE(undecided.witness.has_value());
  CHECK(format_string(*undecided.witness) == "10|0001");
  CHECK_FALSE(undecided.total_system.has_value());

  const NrSystem nine = parse_system(fixtures::kSystemNine62);
  const GenerativeResult decided = is_generative(nine);
  CHECK(decided.verdict == GenerativeVerdict::GENERATIVE);
  CHECK_FALSE(decided.witness.has_value());
  REQUIRE(decided.total_system.has_value());
  CHECK(decided.total_system->rows().size() == 57);  // 2^6 - 1 - 6
  CHECK(classify_system(*decided.total_system).total);
  CHECK(subsystem_leq(nine, *decided.total_system));

  // The map of the generated system is a weighted total map whose
  // positive part matches the solution weights.
  const SnrLattice lattice = build_lattice({6, 2});
  const PartialMap map = chi(*decided.total_system, lattice);
  CHECK(map.is_total());
  CHECK(classify(lattice, map, MapFamily::W_PLUS_NR));
  CHECK(classify(lattice, map, MapFamily::BT_NR));
  CHECK(map.positives().count() == 49);
  const CompatibilityResult solved = compatible(nine);
  REQUIRE(solved.solution.has_value());
  CHECK(pos_set(*solved.solution, lattice) == map.positives());

  const SnrParams six{6, 3};
  const NrSystem blocked(six, {lt(six, "321|012"), geq(six, "100|003")});
  CHECK_THROWS_AS(is_generative(blocked), Incompatible);
  CHECK_THROWS_AS(is_generative(NrSystem({13, 7}, {})), CapExceeded);
}

TEST_CASE("local criteria on the worked examples") {
  // Minus side, five-three example.
  const SnrLattice five = build_lattice({5, 3});
  const PartialMap minus_span = span_minus(five.sip(),
                                           {set_of(five, {"000|00", "200|01"}),
                                            set_of(five, {"321|02", "100|01"})});
  const LocalCriterionReport minus_report = nlc_check(five, minus_span);
  CHECK(minus_report.map_verdict == Verdict::FEASIBLE);
  CHECK(minus_report.core_verdict == Verdict::FEASIBLE);
  CHECK(minus_report.verdicts_equal);
  CHECK(minus_report.core.core == testutil::bind(fixtures::kMinusBasis53).map);
  REQUIRE(minus_report.witness.has_value());
  CHECK(weight_class(*minus_report.witness) == WeightClass::NEGATIVE);
  CHECK(minus_report.witness_lifts);
  CHECK(is_solution(*minus_report.witness, tau(five, minus_span)));

  // Plus side, five-three example.
  const PartialMap plus_span = span_plus(five.sip(),
                                         {set_of(five, {"321|12", "000|00"}),
                                          set_of(five, {"320|02", "000|01"})});
  const LocalCriterionReport plus_report = plc_check(five, plus_span);
  CHECK(plus_report.map_verdict == Verdict::FEASIBLE);
  CHECK(plus_report.verdicts_equal);
  REQUIRE(plus_report.witness.has_value());
  CHECK(weight_class(*plus_report.witness) == WeightClass::POSITIVE);
  CHECK(plus_report.witness_lifts);

  // A wrong-family or partial input is rejected before any system work.
  CHECK_THROWS_AS(plc_check(five, minus_span), NotWeighted);
  CHECK_THROWS_AS(nlc_check(five, plus_span), NotWeighted);
  CHECK_THROWS_AS(nlc_check(five, testutil::map_of(five, {{"000|00", Sign::P}})), NotWeighted);

  // A member of the plus family whose reserved strings are wrongly signed
  // fails the reserved-sign demand instead.
  const SnrLattice two = build_lattice({2, 1});
  const PartialMap all_p = PartialMap::total_from_positives(~ElementSet(two.size()));
  REQUIRE(classify(two, all_p, MapFamily::W_PLUS_NR));
  CHECK_THROWS_AS(plc_check(two, all_p), NotInBnr);
}

TEST_CASE("class constraint on the core witness makes it lift") {
  // On the four-element lattice the map P, N, P, N (by canonical index)
  // is in the minus family with fundamental core {empty -> P}, whose
  // system has no rows at all.  The unconstrained chain witness fails the
  // map's strict full-string row; the class-constrained witness lifts.
  const testutil::Bound fixture = testutil::bind(fixtures::kMinusMapTwoOne);
  const SnrLattice& lattice = fixture.lattice;
  REQUIRE(classify(lattice, fixture.map, MapFamily::W_MINUS_NR));

  const LocalCriterionReport report = nlc_check(lattice, fixture.map);
  CHECK(report.core.core == testutil::map_of(lattice, {{"0|0", Sign::P}}));
  const NrSystem core_system = tau(lattice, report.core.core);
  CHECK(core_system.rows().empty());
  CHECK(report.map_verdict == Verdict::FEASIBLE);
  CHECK(report.core_verdict == Verdict::FEASIBLE);
  CHECK(report.verdicts_equal);

  // The raw core solution does not satisfy the map's system...
  const NrSystem map_system = tau(lattice, fixture.map);
  const CompatibilityResult raw = compatible(core_system);
  REQUIRE(raw.solution.has_value());
  CHECK_FALSE(is_solution(*raw.solution, map_system));

  // ...but the class-constrained witness does.
  REQUIRE(report.witness.has_value());
  CHECK(report.witness->tilde(1) == 1);
  CHECK(report.witness->bar(1) == -2);
  CHECK(report.witness_lifts);
  CHECK(is_solution(*report.witness, map_system));
}

TEST_CASE("system text round trips and rejection") {
  const NrSystem eight = parse_system(fixtures::kSystemEight62);
  const std::string canonical = testutil::system_text(eight);
  CHECK(canonical ==
        "snr 6 2\n"
        "< 10|0023\n"
        ">= 21|1234\n");
  CHECK(parse_system(canonical) == eight);

  std::istringstream stream(fixtures::kSystemNine62);
  CHECK(read_system(stream) == parse_system(fixtures::kSystemNine62));

  // The empty system round-trips to just the parameter line.
  CHECK(testutil::system_text(NrSystem({3, 2}, {})) == "snr 3 2\n");
  CHECK(parse_system("snr 3 2\n").rows().empty());

  auto position_of = [](const char* text) {
    try {
      parse_system(text);
      return std::size_t(-1);
    } catch (const ParseError& e) {
      return e.position;
    }
  };
  CHECK(position_of("") == 0);
  CHECK(position_of("snr 2 3\n") == 1);                          // invalid parameters
  CHECK(position_of("snr 6 2\n<= 21|1234\n") == 2);              // unknown relation
  CHECK(position_of("snr 6 2\n>= 21|1234 extra\n") == 2);        // trailing token
  CHECK(position_of("snr 6 2\n>= 99|9999\n") == 2);              // bad string
  CHECK(position_of("snr 6 2\n>= 10|0000\n") == 2);              // singleton row
  CHECK(position_of("snr 6 2\n>= 21|1234\n< 21|1234\n") == 3);   // duplicate
}
