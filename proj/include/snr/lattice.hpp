#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "snr/poset.hpp"

namespace snr {

// Parameters of the signed-string lattice: strings carry up to r "tilde"
// symbols (values +1..+r) and up to n-r "bar" symbols (values -1..-(n-r)).
struct SnrParams {
  int n = 0;
  int r = 0;
  int bars() const { return n - r; }
  bool operator==(const SnrParams&) const = default;
};

// Throws Error unless 1 <= r <= n <= 30 (30 is the hard representation
// limit; size caps on materialised structures are configured separately).
void validate_params(SnrParams params);

// One signed string: a set of tilde symbols and a set of bar symbols.
// Bit i-1 of tilde_mask means tilde symbol i is present (1 <= i <= r);
// bit j-1 of bar_mask means bar symbol j is present (1 <= j <= n-r).
struct SnrString {
  std::uint8_t n = 0;
  std::uint8_t r = 0;
  std::uint32_t tilde_mask = 0;
  std::uint32_t bar_mask = 0;

  SnrParams params() const { return {n, r}; }
  bool operator==(const SnrString&) const = default;
  // Arbitrary total order for use in ordered containers.
  std::strong_ordering operator<=>(const SnrString&) const = default;
};

// Padded value vector of length n.  Left r slots: tilde values descending,
// then zeros.  Right n-r slots: zeros, then bar values -j with j ascending
// (so the values keep descending).  The lattice order compares these
// vectors componentwise.
std::vector<int> padded_values(const SnrString& w);

// Lattice order: componentwise <= on padded value vectors.
bool leq(const SnrString& a, const SnrString& b);

// Set complement on both symbol groups; an order-reversing involution.
SnrString complement(const SnrString& w);

// Number of symbols present (tildes plus bars).
int star_size(const SnrString& w);

// The symbols of `w` in increasing chain order: bar symbols as negative
// values -(n-r) < ... < -1, then tilde symbols +1 < ... < +r.
std::vector<int> symbols(const SnrString& w);

// Builds the string with exactly the given symbol sets ("unstar").
SnrString make_string(SnrParams params, std::uint32_t tilde_mask, std::uint32_t bar_mask);

SnrString empty_string(SnrParams params);
// All tildes and all bars present.
SnrString full_string(SnrParams params);
// Single-tilde strings; xi(params, 0) is the empty string (1 <= i <= r).
SnrString xi(SnrParams params, int i);
// Single-bar strings (1 <= j <= n-r).
SnrString eta(SnrParams params, int j);

// Canonical index: (tilde_mask << (n-r)) | bar_mask; a bijection onto
// 0..2^n-1 used as the element index of every materialised structure and
// as the deterministic iteration order of every scan.
std::size_t string_index(const SnrString& w);
SnrString string_at(SnrParams params, std::size_t index);

// Text form.  When r <= 9 and n-r <= 9 both halves are digit runs
// ("210|013"); otherwise symbols are dot-separated decimal tokens
// ("10.4.3.1.0|0.0.11").  Left half lists tilde values descending with
// zero padding; right half lists zeros then bar values ascending.
std::string format_string(const SnrString& w);

// Inverse of format_string for the given parameters; rejects anything the
// formatter would not emit.  Throws ParseError with a character offset.
SnrString parse_string(std::string_view text, SnrParams params);

struct LatticeOptions {
  // Strings and streaming scans are refused above this n.
  int max_n = 20;
  // The dense poset/involution structure is materialised only when
  // 2^n <= dense_max_elements; larger lattices still support all
  // string-level operations.
  std::size_t dense_max_elements = 4096;
};

// The full lattice of all 2^n signed strings for fixed parameters,
// optionally materialised as a dense poset with its complement involution.
class SnrLattice {
 public:
  SnrParams params() const { return params_; }
  std::size_t size() const { return std::size_t{1} << params_.n; }

  SnrString at(std::size_t index) const { return string_at(params_, index); }
  std::size_t index(const SnrString& w) const;

  // Bottom element: no tildes, all bars.  Top element: all tildes, no bars.
  SnrString min_string() const;
  SnrString max_string() const;

  bool has_dense() const { return sip_ != nullptr; }
  // Dense poset + involution over canonical indices; throws CapExceeded
  // when the lattice was built above the dense materialisation cap.
  const Sip& sip() const;

 private:
  friend SnrLattice build_lattice(SnrParams, const LatticeOptions&);
  SnrParams params_;
  std::shared_ptr<const Sip> sip_;
};

// Validates parameters and caps, then builds the lattice (and its dense
// structure when within LatticeOptions::dense_max_elements).
SnrLattice build_lattice(SnrParams params, const LatticeOptions& options = {});

// Enumerates the set partitions of the symbols of `w`, each block rendered
// as a string over the same parameters.  Partitions are produced in
// restricted-growth order over the chain-ordered symbol list (symbols()),
// blocks within a partition in first-appearance order.  The visitor
// returns false to stop early; the function returns false iff stopped.
// Throws CapExceeded when star_size(w) > star_cap.
bool for_each_partition(const SnrString& w,
                        const std::function<bool(const std::vector<SnrString>&)>& visit,
                        int star_cap = 12);

std::vector<std::vector<SnrString>> partitions(const SnrString& w, int star_cap = 12);

}  // namespace snr
