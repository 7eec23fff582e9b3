#pragma once

// Digit-level machinery of the step-up constructions: the delta map (most
// significant differing digit), the two triple-coloring rules built from it,
// the recursive composition of step-up levels, and the lower-bound
// calculators that go with them.

#include <cstdint>
#include <string>
#include <vector>

#include "lifted.hpp"
#include "real.hpp"
#include "vertex_code.hpp"

namespace rlc {

// Position of the most significant digit where u and v differ.
// Symmetric; u == v is an error, as are mismatched radix/width.
std::size_t delta(const VertexCode& u, const VertexCode& v);

// Binary step-up rule: color of {v1 < v2 < v3} is the base color of the pair
// {delta(v1,v2), delta(v2,v3)}. Distinctness of the two deltas is a theorem
// for radix 2 and is asserted.
ColorId chi_binary(const PairColoring& base, const VertexCode& v1,
                   const VertexCode& v2, const VertexCode& v3);

// Mixed step-up rule over radix N3 codes of width N2, with d1 = delta(v1,v2),
// d2 = delta(v2,v3):
//   d1 > d2  -> pair_base{d1,d2}           (colors 0..2)
//   d1 < d2  -> 3 + pair_base{d1,d2}       (colors 3..5)
//   d1 == d2 -> 6 + triple_base color of the three digits at that position
// The pair base is always queried with the unordered pair; the branch offset
// alone carries the order information.
ColorId chi_mixed(const PairColoring& pair_base, const Lifted& triple_base,
                  const VertexCode& v1, const VertexCode& v2,
                  const VertexCode& v3);

// ---------------------------------------------------------------------------
// Recursive composition

struct ComposeOptions {
  std::uint64_t seed = 0;
  // Desk-scale size overrides, 0 = use the formula value. The formula values
  // are degenerate for small n; desk builds are expected to override.
  std::uint64_t pair_vertices = 0;   // N2 at every mixed level
  std::uint64_t pair_subset = 0;     // subset size the pair base must color
  std::uint64_t leaf_vertices = 0;   // N3 at the explicit leaf
  std::uint64_t leaf_subset = 0;     // subset size the leaf must color
  std::uint64_t max_attempts = 1000;
  std::uint64_t budget = 100'000'000;
};

// Builds the full construction tree for (n, q): mixed step-up levels with
// q, q-6, q-12, ... colors down to an explicit 3-color leaf. Every generated
// base is exhaustively verified before use.
LiftedPtr compose(std::uint64_t n, std::uint32_t q, const ComposeOptions& opt);

// Formula-scale plan: sizes and exponents only, nothing materialized.
struct NominalLevel {
  std::uint64_t n = 0;
  std::uint32_t q = 0;
  std::uint64_t s = 0;            // floor(log2 n)
  std::uint64_t r = 0;            // floor(n / log2 n)
  BigInt pair_vertices;           // N2 = floor(2^(s/4))
  bool exponent_ok = false;       // N2 >= n^(1/4)/2, checked exactly
};

struct NominalPlan {
  std::uint64_t n = 0;
  std::uint32_t q = 0;
  std::vector<NominalLevel> levels;
  std::uint64_t leaf_n = 0;
  std::uint32_t leaf_q = 0;
  BigRat leaf_log2_size;          // leaf_n^2 / 24
  Log2Value log2_universe;        // exact product N2 * ... * leaf exponent
  Log2Value log2_bound;           // the guaranteed-bound recurrence
  std::string to_json() const;
};

NominalPlan compose_nominal(std::uint64_t n, std::uint32_t q);

// ---------------------------------------------------------------------------
// Bound calculators

// log2 of the guaranteed universe size:
//   q in [3,9): n^2 / 24                      (exact rational)
//   q >= 9:    (n^(1/4)/2) * bound(r, q-6)    with r = floor(n / log2 n)
// No asymptotic smoothing is applied.
Log2Value bound_log2(const BigInt& n, std::uint32_t q);

// log2 of the direct single-level bound, n^(log2(q/(t-1))) / 4. Exact
// rational for n a power of two; other n require allow_general.
Log2Value bound_log2_simple(const BigInt& n, std::uint32_t q, std::uint32_t t,
                            bool allow_general = false);

// floor(n / log2(n)), exact for all n >= 2 (interval refinement; the
// quotient is never an integer unless n is a power of two).
BigInt floor_div_log2(const BigInt& n);

}  // namespace rlc
