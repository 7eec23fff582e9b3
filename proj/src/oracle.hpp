#pragma once

// Ground truth at micro scale: explicit tabulation of lifted colorings and
// exhaustive existence search over all colorings of a tiny universe.

#include <cstdint>
#include <optional>

#include "coloring.hpp"
#include "lifted.hpp"

namespace rlc {

// Evaluates the tree on every triple of its universe. The evaluation goes
// through the reference chi path, so comparing the result against the bulk
// verifier exercises both evaluation routes.
TripleColoring materialize(const Lifted& coloring, std::uint64_t limit = 512);

struct SearchResult {
  bool sat = false;
  std::optional<PairColoring> pair;      // arity 2 witness
  std::optional<TripleColoring> triple;  // arity 3 witness
  std::uint64_t nodes = 0;               // color assignments explored
};

// Decides by backtracking whether some q-coloring of the arity-tuples of
// {0..N-1} gives every n-subset at least t distinct colors. Colors are
// canonicalized by first use, so Sat/Unsat is exact and the witness is the
// lexicographically least canonical solution for the given assignment order.
// order_seed != 0 shuffles the assignment order (the answer must not change;
// used to cross-check pruning).
SearchResult brute_force_search(std::uint64_t universe, std::uint32_t q,
                                std::uint32_t t, std::uint32_t n, int arity,
                                std::uint64_t budget,
                                std::uint64_t order_seed = 0);

struct ExactFResult {
  std::optional<std::uint64_t> best;     // largest Sat size found
  std::optional<TripleColoring> witness; // coloring at `best`
  std::uint64_t last_checked = 0;
  bool capped = false;                   // stopped at N_max while still Sat
};

// Scans N = n, n+1, ... for the triple-coloring property, stopping at the
// first Unsat or at N_max.
ExactFResult exact_f_micro(std::uint32_t q, std::uint32_t t, std::uint32_t n,
                           std::uint64_t n_max, std::uint64_t budget);

}  // namespace rlc
