#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace snr {

// Exact arbitrary-precision rational; all arithmetic in the library is exact.
using Rational = boost::multiprecision::cpp_rational;

// Accepts an optional sign followed by one of: an integer "42", a fraction
// "p/q" with integer p, q (q != 0), or a decimal "3.25" (converted exactly).
// Throws ParseError (position = 0-based offset of the offending character).
Rational parse_rational(std::string_view text);

// Canonical form: lowest terms, "p/q" when the denominator is not 1,
// plain integer otherwise ("-3/7", "5", "0").
std::string format_rational(const Rational& value);

}  // namespace snr
