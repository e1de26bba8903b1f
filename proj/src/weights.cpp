#include "snr/weights.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>

#include "snr/errors.hpp"

namespace snr {

WeightFunction::WeightFunction(SnrParams params, std::vector<Rational> tilde_values,
                               std::vector<Rational> bar_values)
    : params_(params),
      tilde_values_(std::move(tilde_values)),
      bar_values_(std::move(bar_values)) {
  validate_params(params_);
  if (tilde_values_.size() != static_cast<std::size_t>(params_.r) ||
      bar_values_.size() != static_cast<std::size_t>(params_.bars())) {
    throw Error("weight value counts do not match the parameters");
  }
  if (tilde_values_.front() < 0) throw Error("tilde weights must be nonnegative");
  for (std::size_t i = 1; i < tilde_values_.size(); ++i) {
    if (tilde_values_[i] < tilde_values_[i - 1]) {
      throw Error("tilde weights must not decrease with the symbol");
    }
  }
  if (!bar_values_.empty() && bar_values_.front() >= 0) {
    throw Error("bar weights must be negative");
  }
  for (std::size_t j = 1; j < bar_values_.size(); ++j) {
    if (bar_values_[j] > bar_values_[j - 1]) {
      throw Error("bar weights must not increase with the symbol");
    }
  }
}

Rational WeightFunction::total() const {
  Rational sum = 0;
  for (const Rational& v : tilde_values_) sum += v;
  for (const Rational& v : bar_values_) sum += v;
  return sum;
}

WeightClass weight_class(const WeightFunction& f) {
  return f.total() >= 0 ? WeightClass::POSITIVE : WeightClass::NEGATIVE;
}

Rational sigma(const WeightFunction& f, const SnrString& w) {
  if (w.params() != f.params()) throw Error("string parameters do not match weight function");
  Rational sum = 0;
  for (int i = 1; i <= w.r; ++i) {
    if (w.tilde_mask >> (i - 1) & 1u) sum += f.tilde(i);
  }
  for (int j = 1; j <= w.n - w.r; ++j) {
    if (w.bar_mask >> (j - 1) & 1u) sum += f.bar(j);
  }
  return sum;
}

PartialMap induced_map(const WeightFunction& f, const SnrLattice& lattice) {
  return PartialMap::total_from_positives(pos_set(f, lattice));
}

ElementSet pos_set(const WeightFunction& f, const SnrLattice& lattice) {
  if (f.params() != lattice.params()) throw Error("weight parameters do not match lattice");
  ElementSet result(lattice.size());
  for (std::size_t idx = 0; idx < lattice.size(); ++idx) {
    if (sigma(f, lattice.at(idx)) >= 0) result.set(idx);
  }
  return result;
}

std::size_t alpha_plus(const WeightFunction& f, int cap_n) {
  const SnrParams params = f.params();
  if (params.n > cap_n) throw CapExceeded("alpha scan above the configured cap");
  // Symbol weight by bit position: tildes first, then bars.
  std::vector<Rational> weight_of_bit;
  for (int i = 1; i <= params.r; ++i) weight_of_bit.push_back(f.tilde(i));
  for (int j = 1; j <= params.bars(); ++j) weight_of_bit.push_back(f.bar(j));
  // Gray-code walk: one exact addition per visited subset.
  std::size_t count = 0;
  Rational sum = 0;
  if (sum >= 0) ++count;  // empty subset
  const std::uint64_t total = std::uint64_t{1} << params.n;
  std::uint64_t gray = 0;
  for (std::uint64_t i = 1; i < total; ++i) {
    const std::uint64_t next = i ^ (i >> 1);
    const int flipped = std::countr_zero(i);
    if (next >> flipped & 1u) {
      sum += weight_of_bit[static_cast<std::size_t>(flipped)];
    } else {
      sum -= weight_of_bit[static_cast<std::size_t>(flipped)];
    }
    gray = next;
    if (sum >= 0) ++count;
  }
  (void)gray;
  return count;
}

std::size_t alpha_minus(const WeightFunction& f, int cap_n) {
  return (std::size_t{1} << f.params().n) - alpha_plus(f, cap_n);
}

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream stream(line);
  std::vector<std::string> tokens;
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

std::vector<Rational> parse_value_line(const std::vector<std::string>& tokens,
                                       const std::string& keyword, std::size_t expected,
                                       std::size_t line_number) {
  if (tokens.empty() || tokens[0] != keyword || tokens.size() != expected + 1) {
    throw ParseError("expected line '" + keyword + " <" + std::to_string(expected) +
                         " rationals>'",
                     line_number);
  }
  // Listed from the highest symbol down; store ascending by symbol.
  std::vector<Rational> values;
  for (std::size_t k = tokens.size(); k-- > 1;) {
    try {
      values.push_back(parse_rational(tokens[k]));
    } catch (const ParseError&) {
      throw ParseError("bad rational '" + tokens[k] + "'", line_number);
    }
  }
  return values;
}

}  // namespace

WeightFunction read_weight_function(std::istream& in) {
  std::size_t line_number = 0;
  SnrParams params{};
  std::vector<std::vector<std::string>> lines;
  std::string line;
  bool have_params = false;
  while (std::getline(in, line)) {
    ++line_number;
    const std::vector<std::string> tokens = tokens_of(line);
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
    } else {
      lines.push_back(tokens);
    }
  }
  if (!have_params) throw ParseError("missing parameter line 'snr <n> <r>'", line_number);
  const std::size_t expected_lines = params.bars() == 0 ? 1u : 2u;
  if (lines.size() != expected_lines) {
    throw ParseError("expected tilde line" + std::string(params.bars() ? " and bar line" : ""),
                     line_number);
  }
  std::vector<Rational> tilde =
      parse_value_line(lines[0], "tilde", static_cast<std::size_t>(params.r), line_number);
  std::vector<Rational> bar;
  if (params.bars() > 0) {
    // Bar values are listed from symbol 1 down to symbol n-r, which is
    // already descending in value; parse_value_line reverses, so reverse
    // back to ascending-symbol storage.
    bar = parse_value_line(lines[1], "bar", static_cast<std::size_t>(params.bars()), line_number);
    std::reverse(bar.begin(), bar.end());
  }
  try {
    return WeightFunction(params, std::move(tilde), std::move(bar));
  } catch (const Error& error) {
    throw ParseError(error.what(), line_number);
  }
}

WeightFunction parse_weight_function(std::string_view text) {
  std::istringstream stream{std::string(text)};
  return read_weight_function(stream);
}

void write_weight_function(std::ostream& out, const WeightFunction& f) {
  const SnrParams params = f.params();
  out << "snr " << params.n << ' ' << params.r << '\n';
  out << "tilde";
  for (int i = params.r; i >= 1; --i) out << ' ' << format_rational(f.tilde(i));
  out << '\n';
  if (params.bars() > 0) {
    out << "bar";
    for (int j = 1; j <= params.bars(); ++j) out << ' ' << format_rational(f.bar(j));
    out << '\n';
  }
}

}  // namespace snr
