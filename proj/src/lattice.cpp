#include "snr/lattice.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "snr/errors.hpp"

namespace snr {

namespace {

std::uint32_t low_mask(int bits) {
  return bits >= 32 ? 0xffffffffu : ((std::uint32_t{1} << bits) - 1);
}

void check_masks(SnrParams params, std::uint32_t tilde_mask, std::uint32_t bar_mask) {
  if ((tilde_mask & ~low_mask(params.r)) != 0 || (bar_mask & ~low_mask(params.bars())) != 0) {
    throw Error("symbol mask out of range for parameters");
  }
}

}  // namespace

void validate_params(SnrParams params) {
  if (params.r < 1 || params.r > params.n || params.n > 30) {
    throw Error("parameters require 1 <= r <= n <= 30");
  }
}

std::vector<int> padded_values(const SnrString& w) {
  std::vector<int> values;
  values.reserve(w.n);
  for (int i = w.r; i >= 1; --i) {
    if (w.tilde_mask >> (i - 1) & 1u) values.push_back(i);
  }
  values.resize(w.r, 0);
  const int bars = w.n - w.r;
  const int present = std::popcount(w.bar_mask);
  values.insert(values.end(), static_cast<std::size_t>(bars - present), 0);
  for (int j = 1; j <= bars; ++j) {
    if (w.bar_mask >> (j - 1) & 1u) values.push_back(-j);
  }
  return values;
}

bool leq(const SnrString& a, const SnrString& b) {
  if (a.params() != b.params()) throw Error("comparing strings of different parameters");
  const std::vector<int> va = padded_values(a);
  const std::vector<int> vb = padded_values(b);
  for (std::size_t k = 0; k < va.size(); ++k) {
    if (va[k] > vb[k]) return false;
  }
  return true;
}

SnrString complement(const SnrString& w) {
  SnrString result = w;
  result.tilde_mask = ~w.tilde_mask & low_mask(w.r);
  result.bar_mask = ~w.bar_mask & low_mask(w.n - w.r);
  return result;
}

int star_size(const SnrString& w) {
  return std::popcount(w.tilde_mask) + std::popcount(w.bar_mask);
}

std::vector<int> symbols(const SnrString& w) {
  std::vector<int> result;
  result.reserve(static_cast<std::size_t>(star_size(w)));
  for (int j = w.n - w.r; j >= 1; --j) {
    if (w.bar_mask >> (j - 1) & 1u) result.push_back(-j);
  }
  for (int i = 1; i <= w.r; ++i) {
    if (w.tilde_mask >> (i - 1) & 1u) result.push_back(i);
  }
  return result;
}

SnrString make_string(SnrParams params, std::uint32_t tilde_mask, std::uint32_t bar_mask) {
  validate_params(params);
  check_masks(params, tilde_mask, bar_mask);
  return {static_cast<std::uint8_t>(params.n), static_cast<std::uint8_t>(params.r),
          tilde_mask, bar_mask};
}

SnrString empty_string(SnrParams params) { return make_string(params, 0, 0); }

SnrString full_string(SnrParams params) {
  return make_string(params, low_mask(params.r), low_mask(params.bars()));
}

SnrString xi(SnrParams params, int i) {
  if (i < 0 || i > params.r) throw Error("tilde index out of range");
  return make_string(params, i == 0 ? 0 : (std::uint32_t{1} << (i - 1)), 0);
}

SnrString eta(SnrParams params, int j) {
  if (j < 1 || j > params.bars()) throw Error("bar index out of range");
  return make_string(params, 0, std::uint32_t{1} << (j - 1));
}

std::size_t string_index(const SnrString& w) {
  return (static_cast<std::size_t>(w.tilde_mask) << (w.n - w.r)) | w.bar_mask;
}

SnrString string_at(SnrParams params, std::size_t index) {
  validate_params(params);
  if (index >= (std::size_t{1} << params.n)) throw Error("string index out of range");
  const std::uint32_t bar_mask = static_cast<std::uint32_t>(index) & low_mask(params.bars());
  const std::uint32_t tilde_mask = static_cast<std::uint32_t>(index >> params.bars());
  return make_string(params, tilde_mask, bar_mask);
}

std::string format_string(const SnrString& w) {
  const bool digits = w.r <= 9 && (w.n - w.r) <= 9;
  const std::vector<int> values = padded_values(w);
  std::string text;
  for (int k = 0; k < w.n; ++k) {
    const int value = k < w.r ? values[k] : -values[k];
    if (digits) {
      text += static_cast<char>('0' + value);
    } else {
      if (k != 0 && k != w.r) text += '.';
      text += std::to_string(value);
    }
    if (k + 1 == w.r) text += '|';
  }
  return text;
}

namespace {

struct HalfParse {
  std::uint32_t mask = 0;
};

// Parses one half as symbol values; enforces the exact padded layout.
std::uint32_t parse_half(const std::vector<int>& values, bool left, int slots, int max_symbol,
                         std::size_t offset) {
  if (static_cast<int>(values.size()) != slots) {
    throw ParseError("wrong number of symbols in string half", offset);
  }
  std::uint32_t mask = 0;
  bool seen_zero = false;
  bool seen_symbol = false;
  int previous = 0;
  for (int k = 0; k < slots; ++k) {
    const int value = values[static_cast<std::size_t>(k)];
    if (value < 0 || value > max_symbol) {
      throw ParseError("symbol value out of range", offset + static_cast<std::size_t>(k));
    }
    if (value == 0) {
      if (left) {
        seen_zero = true;  // zeros terminate the left half
      } else if (seen_symbol) {
        throw ParseError("zero after a bar symbol", offset + static_cast<std::size_t>(k));
      }
      continue;
    }
    if (left && seen_zero) {
      throw ParseError("tilde symbol after padding zero", offset + static_cast<std::size_t>(k));
    }
    if (seen_symbol && (left ? value >= previous : value <= previous)) {
      throw ParseError("symbols out of order", offset + static_cast<std::size_t>(k));
    }
    seen_symbol = true;
    previous = value;
    mask |= std::uint32_t{1} << (value - 1);
  }
  return mask;
}

}  // namespace

SnrString parse_string(std::string_view text, SnrParams params) {
  validate_params(params);
  const std::size_t split = text.find('|');
  if (split == std::string_view::npos) throw ParseError("missing '|' separator", text.size());
  const bool digits = params.r <= 9 && params.bars() <= 9;
  auto scan_half = [&](std::string_view half, std::size_t offset) {
    std::vector<int> values;
    if (digits) {
      for (std::size_t k = 0; k < half.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(half[k]))) {
          throw ParseError("expected a digit", offset + k);
        }
        values.push_back(half[k] - '0');
      }
    } else {
      if (half.empty()) return values;
      std::size_t start = 0;
      while (true) {
        std::size_t dot = half.find('.', start);
        std::string_view token = half.substr(start, dot == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : dot - start);
        if (token.empty() || token.size() > 2 ||
            !std::all_of(token.begin(), token.end(), [](char c) {
              return std::isdigit(static_cast<unsigned char>(c));
            })) {
          throw ParseError("expected a numeric token", offset + start);
        }
        values.push_back(std::stoi(std::string(token)));
        if (dot == std::string_view::npos) break;
        start = dot + 1;
      }
    }
    return values;
  };
  const std::uint32_t tilde_mask =
      parse_half(scan_half(text.substr(0, split), 0), true, params.r, params.r, 0);
  const std::uint32_t bar_mask = parse_half(scan_half(text.substr(split + 1), split + 1), false,
                                            params.bars(), params.bars(), split + 1);
  return make_string(params, tilde_mask, bar_mask);
}

std::size_t SnrLattice::index(const SnrString& w) const {
  if (w.params() != params_) throw Error("string parameters do not match lattice");
  return string_index(w);
}

SnrString SnrLattice::min_string() const {
  return make_string(params_, 0, low_mask(params_.bars()));
}

SnrString SnrLattice::max_string() const {
  return make_string(params_, low_mask(params_.r), 0);
}

const Sip& SnrLattice::sip() const {
  if (!sip_) {
    throw CapExceeded("dense lattice structure was not materialised at this size");
  }
  return *sip_;
}

SnrLattice build_lattice(SnrParams params, const LatticeOptions& options) {
  validate_params(params);
  if (params.n > options.max_n) {
    throw CapExceeded("lattice parameter n exceeds configured cap");
  }
  SnrLattice lattice;
  lattice.params_ = params;
  const std::size_t count = std::size_t{1} << params.n;
  if (count <= options.dense_max_elements) {
    // Cache padded vectors once; pairwise comparison is then linear in n.
    std::vector<std::vector<int>> padded(count);
    for (std::size_t idx = 0; idx < count; ++idx) {
      padded[idx] = padded_values(string_at(params, idx));
    }
    Poset poset = Poset::from_relation_unchecked(count, [&](std::size_t a, std::size_t b) {
      for (std::size_t k = 0; k < padded[a].size(); ++k) {
        if (padded[a][k] > padded[b][k]) return false;
      }
      return true;
    });
    std::vector<std::size_t> table(count);
    for (std::size_t idx = 0; idx < count; ++idx) {
      table[idx] = string_index(complement(string_at(params, idx)));
    }
    Involution involution = validate_involution(poset, std::move(table));
    lattice.sip_ = std::make_shared<const Sip>(Sip{std::move(poset), std::move(involution)});
  }
  return lattice;
}

bool for_each_partition(const SnrString& w,
                        const std::function<bool(const std::vector<SnrString>&)>& visit,
                        int star_cap) {
  const std::vector<int> syms = symbols(w);
  const int count = static_cast<int>(syms.size());
  if (count > star_cap) throw CapExceeded("string has more symbols than the partition cap");
  if (count == 0) return true;  // no symbols, no partitions
  std::vector<int> block_of(static_cast<std::size_t>(count), 0);
  const SnrParams params = w.params();
  auto emit = [&](int blocks) {
    std::vector<SnrString> rendered(static_cast<std::size_t>(blocks), empty_string(params));
    for (int k = 0; k < count; ++k) {
      SnrString& block = rendered[static_cast<std::size_t>(block_of[static_cast<std::size_t>(k)])];
      const int symbol = syms[static_cast<std::size_t>(k)];
      if (symbol > 0) {
        block.tilde_mask |= std::uint32_t{1} << (symbol - 1);
      } else {
        block.bar_mask |= std::uint32_t{1} << (-symbol - 1);
      }
    }
    return visit(rendered);
  };
  // Restricted growth strings: position k may use blocks 0..max_used+1.
  std::function<bool(int, int)> recurse = [&](int k, int used) {
    if (k == count) return emit(used);
    for (int b = 0; b <= used && b < count; ++b) {
      block_of[static_cast<std::size_t>(k)] = b;
      if (!recurse(k + 1, used + (b == used ? 1 : 0))) return false;
    }
    return true;
  };
  return recurse(0, 0);
}

std::vector<std::vector<SnrString>> partitions(const SnrString& w, int star_cap) {
  std::vector<std::vector<SnrString>> result;
  for_each_partition(
      w,
      [&](const std::vector<SnrString>& blocks) {
        result.push_back(blocks);
        return true;
      },
      star_cap);
  return result;
}

}  // namespace snr
