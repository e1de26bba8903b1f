#pragma once

// Shared worked-example data used across the unit tests and the acceptance
// suite: textual maps, bases, systems and weight functions together with
// their independently verified outcomes.

namespace fixtures {

// --- S(5,3), minus side -------------------------------------------------
// A w_minus basis; its span is a total down-negative complemented-negative
// map whose fundamental core recovers exactly these four assignments.
inline constexpr const char* kMinusBasis53 =
    "snr 5 3\n"
    "321|02 N\n"
    "100|01 N\n"
    "000|00 P\n"
    "200|01 P\n";

// Exact solution of both the core system and the spanned total system.
inline constexpr const char* kMinusWeights53 =
    "snr 5 3\n"
    "tilde 1/2 1/3 1/6\n"
    "bar -1/5 -6/5\n";

// --- S(5,3), plus side ---------------------------------------------------
inline constexpr const char* kPlusBasis53 =
    "snr 5 3\n"
    "321|12 P\n"
    "000|00 P\n"
    "320|02 N\n"
    "000|01 N\n";

inline constexpr const char* kPlusWeights53 =
    "snr 5 3\n"
    "tilde 1 1 9/10\n"
    "bar -4/5 -21/10\n";

// --- S(6,3), plus side ---------------------------------------------------
// Six assignments that are NOT a w_plus basis: the coverage axiom B3 fails,
// leaving {200|001, 310|023, 310|123, 320|123} in neither region.
inline constexpr const char* kUncoveredPlusPair63 =
    "snr 6 3\n"
    "321|123 P\n"
    "000|000 P\n"
    "300|003 N\n"
    "210|003 N\n"
    "200|002 N\n"
    "100|001 N\n";

// Minimal completion into a w_plus basis: the same assignments plus two
// more negatives.  Unique closest completion; its span's fundamental core
// consists of all eight entries, and every associated system (core or
// total) is infeasible.
inline constexpr const char* kPatchedPlusBasis63 =
    "snr 6 3\n"
    "321|123 P\n"
    "000|000 P\n"
    "300|003 N\n"
    "210|003 N\n"
    "200|002 N\n"
    "100|001 N\n"
    "310|023 N\n"
    "320|123 N\n";

// --- S(6,3), minus side --------------------------------------------------
// Basis whose fundamental core is complemented pointwise although the
// spanned total map is not; the core system is infeasible.
inline constexpr const char* kMinusBasis63 =
    "snr 6 3\n"
    "100|003 P\n"
    "000|000 P\n"
    "321|012 N\n"
    "000|001 N\n";

// --- S(6,2) weight functions and systems ---------------------------------
inline constexpr const char* kWeightsF62 =
    "snr 6 2\n"
    "tilde 3 1\n"
    "bar -1 -1 -1 -1\n";

inline constexpr const char* kWeightsG62 =
    "snr 6 2\n"
    "tilde 4 0\n"
    "bar -1 -1 -1 -1\n";

// Compatible but not generative: 10|0001 stays undetermined.
inline constexpr const char* kSystemEight62 =
    "snr 6 2\n"
    ">= 21|1234\n"
    "< 10|0023\n";

// Compatible and generative: forces a unique total system of 57 rows.
inline constexpr const char* kSystemNine62 =
    "snr 6 2\n"
    ">= 21|1234\n"
    ">= 10|1234\n";

// --- S(2,1) --------------------------------------------------------------
// Total map in the minus family whose bare core system (chain only) has
// solutions that fail the total system; the class-constrained witness of
// the local criterion must be used instead.
inline constexpr const char* kMinusMapTwoOne =
    "snr 2 1\n"
    "0|0 P\n"
    "0|1 N\n"
    "1|0 P\n"
    "1|1 N\n";

}  // namespace fixtures
