#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace snr {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A candidate relation failed reflexivity, antisymmetry or transitivity.
struct PartialOrderViolation : Error {
  PartialOrderViolation(const std::string& axiom, std::size_t x, std::size_t y)
      : Error(axiom + " violated at (" + std::to_string(x) + ", " + std::to_string(y) + ")"),
        axiom(axiom), x(x), y(y) {}
  std::string axiom;
  std::size_t x, y;
};

// A candidate complement map is not an order-reversing involution.
struct InvolutionViolation : Error {
  using Error::Error;
};

// Input exceeds a configured size cap.
struct CapExceeded : Error {
  using Error::Error;
};

// Malformed textual input; `position` is a 0-based character offset for
// single-string parses and a 1-based line number for file-level parses.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at " + std::to_string(position) + ")"), position(position) {}
  std::size_t position;
};

// Map is not in the weighted family an operation requires.
struct NotWeighted : Error {
  using Error::Error;
};

// Pair of element sets fails the basis axioms.
struct NotABasis : Error {
  using Error::Error;
};

// Map assigns a reserved single-symbol string the wrong sign.
struct NotInBnr : Error {
  using Error::Error;
};

// Structurally invalid system (bad row strings, duplicates, parameter mismatch).
struct InvalidSystem : Error {
  using Error::Error;
};

// System has no solution where one is required.
struct Incompatible : Error {
  using Error::Error;
};

}  // namespace snr
