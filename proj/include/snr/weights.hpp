#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "snr/boolean_map.hpp"
#include "snr/lattice.hpp"
#include "snr/rational.hpp"

namespace snr {

class NrSystem;

// Exact symbol weights obeying the chain conditions
//   value(r tilde) >= ... >= value(1 tilde) >= 0 > value(1 bar) >= ... >= value((n-r) bar).
class WeightFunction {
 public:
  // tilde_values[i-1] = value of tilde symbol i (ascending symbol order);
  // bar_values[j-1] = value of bar symbol j.  Throws Error when the chain
  // conditions fail or the counts do not match the parameters.
  WeightFunction(SnrParams params, std::vector<Rational> tilde_values,
                 std::vector<Rational> bar_values);

  SnrParams params() const { return params_; }
  const Rational& tilde(int i) const { return tilde_values_.at(static_cast<std::size_t>(i - 1)); }
  const Rational& bar(int j) const { return bar_values_.at(static_cast<std::size_t>(j - 1)); }
  const std::vector<Rational>& tilde_values() const { return tilde_values_; }
  const std::vector<Rational>& bar_values() const { return bar_values_; }

  // Sum over every symbol (= sum over the all-symbols string).
  Rational total() const;

  bool operator==(const WeightFunction&) const = default;

 private:
  SnrParams params_;
  std::vector<Rational> tilde_values_, bar_values_;
};

// Weight class: POSITIVE iff the total symbol sum is >= 0.
enum class WeightClass : std::uint8_t { POSITIVE, NEGATIVE };
WeightClass weight_class(const WeightFunction& f);

// Sum of the weights of the symbols of `w` (0 for the empty string).
Rational sigma(const WeightFunction& f, const SnrString& w);

// Total map sending w to P iff sigma(f, w) >= 0.
PartialMap induced_map(const WeightFunction& f, const SnrLattice& lattice);

// Indices of the strings with nonnegative sigma.
ElementSet pos_set(const WeightFunction& f, const SnrLattice& lattice);

// |pos_set| / its complement count, by incremental full scan of all 2^n
// symbol subsets without materialising a lattice.  Throws CapExceeded when
// n exceeds `cap_n`.
std::size_t alpha_plus(const WeightFunction& f, int cap_n = 24);
std::size_t alpha_minus(const WeightFunction& f, int cap_n = 24);

// True iff f satisfies every row of the system (P-rows need sigma >= 0,
// N-rows sigma < 0); the chain conditions hold by construction.
bool is_solution(const WeightFunction& f, const NrSystem& system);

// Text form: "snr <n> <r>", then "tilde <r rationals>" listed from the
// highest symbol down (value of r tilde first), then "bar <n-r rationals>"
// listed from bar symbol 1 down (the bar line is absent when r = n).
WeightFunction read_weight_function(std::istream& in);
WeightFunction parse_weight_function(std::string_view text);
void write_weight_function(std::ostream& out, const WeightFunction& f);

}  // namespace snr
