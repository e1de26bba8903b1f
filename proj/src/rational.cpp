#include "snr/rational.hpp"

#include <cctype>

#include "snr/errors.hpp"

namespace snr {

namespace {

using Integer = boost::multiprecision::cpp_int;

Integer parse_digits(std::string_view text, std::size_t& pos, std::size_t base_offset) {
  if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
    throw ParseError("expected digits in rational", base_offset + pos);
  }
  Integer value = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    value = value * 10 + (text[pos] - '0');
    ++pos;
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = (text[pos] == '-');
    ++pos;
  }
  Integer numerator = parse_digits(text, pos, 0);
  Integer denominator = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    denominator = parse_digits(text, pos, 0);
    if (denominator == 0) throw ParseError("zero denominator", pos - 1);
  } else if (pos < text.size() && text[pos] == '.') {
    ++pos;
    std::size_t start = pos;
    Integer frac = parse_digits(text, pos, 0);
    for (std::size_t i = start; i < pos; ++i) denominator *= 10;
    numerator = numerator * denominator + frac;
  }
  if (pos != text.size()) throw ParseError("trailing characters in rational", pos);
  Rational result(numerator, denominator);
  return negative ? -result : result;
}

std::string format_rational(const Rational& value) {
  std::string text = numerator(value).str();
  if (denominator(value) != 1) {
    text += '/';
    text += denominator(value).str();
  }
  return text;
}

}  // namespace snr
