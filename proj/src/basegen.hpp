#pragma once

// Seeded random search for base colorings, with exhaustive verification of
// the subset property before anything is returned, plus the first-moment
// calculations that predict when the search succeeds.

#include <cstdint>
#include <optional>
#include <variant>

#include "bigint.hpp"
#include "coloring.hpp"
#include "real.hpp"

namespace rlc {

struct GenSpec {
  enum class Kind { pair, triple };
  Kind kind = Kind::pair;
  std::uint64_t universe_size = 0;   // N
  std::uint32_t num_colors = 0;      // q
  std::uint32_t subset_size = 0;     // m (or r, s)
  std::uint32_t required_colors = 0; // t
  std::uint64_t seed = 0;
  std::uint64_t max_attempts = 1000;
  std::uint64_t budget = 100'000'000;  // subset checks per attempt
  bool allow_vacuous = false;          // accept universe_size < subset_size
};

using GeneratedColoring = std::variant<PairColoring, TripleColoring>;

// Rejection sampling: draw a fresh uniform coloring per attempt (attempt k
// uses seed_stream(seed, k)), check every subset, return the first coloring
// in which every subset of subset_size vertices shows >= required_colors
// distinct colors. Deterministic given the seed.
GeneratedColoring generate(const GenSpec& spec);

// floor((q/(t-1))^(m/4)) by exact integer comparison of fourth powers.
BigInt pair_universe_size(std::uint32_t q, std::uint32_t t, std::uint32_t m);

// floor(2^(r^2/24)) and floor(2^(s/4)), exact.
BigInt lemma31_universe_size(std::uint32_t r);
BigInt lemma33_universe_size(std::uint32_t s);

// First moment of the number of bad m-subsets of a random q-coloring of the
// pairs of a universe, together with the closed-form ceiling
// q^(t-1) * (q/(t-1))^(-m^2/4).
struct FirstMoment {
  BigRat exact;                  // C(U,m) * C(q,t-1) * ((t-1)/q)^C(m,2)
  std::optional<BigRat> bound;   // closed form when m^2 is divisible by 4
  BigRat bound_pow4;             // closed form raised to the 4th power
  Real bound_real;               // closed form at working precision
  // exact <= closed form, decided by exact comparison of fourth powers.
  bool exact_le_bound() const;
};

FirstMoment expected_bad_subsets(std::uint32_t q, std::uint32_t t,
                                 std::uint32_t m, const BigInt& universe_size);

// Smallest m whose exact first moment (at the formula universe size) drops
// below one.
std::uint32_t min_m_for_bound(std::uint32_t q, std::uint32_t t);

}  // namespace rlc
