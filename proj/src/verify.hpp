#pragma once

// The verification engine: exhaustive and sampled subset color-count checks,
// the structural property suites for the delta map, and the constructive
// extractors (stepdown recursion, escape positions, decreasing delta chains).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bigint.hpp"
#include "coloring.hpp"
#include "lifted.hpp"
#include "vertex_code.hpp"

namespace rlc {

struct VerificationReport {
  enum class Mode { exhaustive, sampled };
  Mode mode = Mode::exhaustive;
  std::uint64_t subsets_checked = 0;
  std::uint64_t evaluations = 0;
  std::uint32_t required_colors = 0;
  std::uint32_t min_colors_seen = 0;
  // Present exactly when min_colors_seen < required_colors; the first failing
  // subset in enumeration (or sample) order, strictly increasing vertices.
  std::optional<std::vector<BigInt>> counterexample;
  std::optional<std::uint64_t> seed;

  bool pass() const { return !counterexample.has_value(); }
  std::string to_json() const;
};

struct VerifyOptions {
  std::uint64_t budget = 2'000'000'000;  // tuple color evaluations
  std::uint32_t workers = 1;
};

// Distinct colors over all triples of a strictly increasing subset.
std::uint32_t min_colors(const Lifted& coloring,
                         const std::vector<BigInt>& subset);
std::uint32_t min_colors(const TripleColoring& coloring,
                         const std::vector<BigInt>& subset);

// Checks every n-subset of the full universe (resp. of an explicit vertex
// list). min_colors_seen is the exact minimum over all subsets checked; the
// counterexample, if any, is the lexicographically first failing subset.
VerificationReport verify_exhaustive(const Lifted& coloring, std::uint32_t n,
                                     std::uint32_t t,
                                     const VerifyOptions& opt = {});
VerificationReport verify_exhaustive(const Lifted& coloring,
                                     const std::vector<BigInt>& universe_subset,
                                     std::uint32_t n, std::uint32_t t,
                                     const VerifyOptions& opt = {});
VerificationReport verify_pair_exhaustive(const PairColoring& coloring,
                                          std::uint32_t m, std::uint32_t t,
                                          const VerifyOptions& opt = {});

// Draws `samples` uniform n-subsets of the universe; deterministic per seed
// and independent of the worker count.
VerificationReport verify_sampled(const Lifted& coloring, std::uint32_t n,
                                  std::uint32_t t, std::uint64_t samples,
                                  std::uint64_t seed,
                                  const VerifyOptions& opt = {});
VerificationReport verify_pair_sampled(const PairColoring& coloring,
                                       std::uint32_t m, std::uint32_t t,
                                       std::uint64_t samples,
                                       std::uint64_t seed,
                                       const VerifyOptions& opt = {});

// ---------------------------------------------------------------------------
// Chains

// Strictly increasing vertices in one digit universe, with the consecutive
// deltas cached.
class Chain {
 public:
  explicit Chain(std::vector<VertexCode> vertices);

  std::size_t size() const { return vertices_.size(); }
  const VertexCode& vertex(std::size_t i) const { return vertices_[i]; }
  const std::vector<VertexCode>& vertices() const { return vertices_; }
  // delta(v_i, v_{i+1}); i in [0, size-1).
  std::size_t delta_at(std::size_t i) const;

 private:
  std::vector<VertexCode> vertices_;
  std::vector<std::size_t> deltas_;
};

// ---------------------------------------------------------------------------
// Stepdown extraction (binary universes)

struct StepdownWitness {
  std::size_t a, b, c;  // chain positions, a < b < c
};

struct StepdownResult {
  // Distinct delta values realized, sorted ascending; at least log2(length).
  std::vector<std::size_t> delta_set;
  // For every unordered pair {d, e} of delta_set (keyed (min,max)), a chain
  // triple whose lifted color equals the base color of that pair. All
  // witnesses have been validated by evaluation before this is returned.
  std::map<std::pair<std::size_t, std::size_t>, StepdownWitness> witnesses;
};

// Chain length must be a power of two >= 2.
StepdownResult stepdown_extract(const Chain& chain, const PairColoring& base);

// ---------------------------------------------------------------------------
// Escape positions and decreasing delta chains

// Smallest position w in {1..r-1} (0-based; the classical statement indexes
// vertices from 1) with delta(v_0, v_w) > delta(v_w, v_{w+1}); nullopt when
// no such position exists up to r.
std::optional<std::size_t> equal_delta_escape(const Chain& chain,
                                              std::size_t r);

struct ChainExtractSuccess {
  // Escape positions w_1 < ... < w_{s-1} (0-based chain positions, in the
  // scan direction).
  std::vector<std::size_t> escape_positions;
  // Original-chain positions of the s+1 selected vertices, sorted.
  std::vector<std::size_t> selected_vertices;
};

struct ChainExtractFailure {
  enum class Reason { no_escape, not_strict };
  Reason reason = Reason::no_escape;
  // Offending block, inclusive original-chain positions.
  std::size_t block_begin = 0;
  std::size_t block_end = 0;
  bool deltas_all_equal = false;
};

using ChainExtractResult =
    std::variant<ChainExtractSuccess, ChainExtractFailure>;

// Iterates the escape search over s-1 consecutive blocks of r vertices to
// build a strictly decreasing delta sequence; `mirrored` runs the symmetric
// variant from the top of the chain (producing the increasing-delta band).
ChainExtractResult decreasing_chain_extract(const Chain& chain, std::size_t r,
                                            std::size_t s,
                                            bool mirrored = false);

// ---------------------------------------------------------------------------
// Property suites

enum class PropertyKind { I, II, III };

struct PropertyParams {
  BigInt radix = 2;
  std::size_t num_digits = 8;
  bool exhaustive = true;
  std::uint64_t samples = 100'000;   // sampled mode
  std::size_t chain_length = 32;     // property II
  std::uint64_t seed = 0;
  std::uint64_t budget = 2'000'000'000;
};

// Zero tolerance: any single violation produces a counterexample.
//   I:   consecutive deltas of a sorted triple are distinct
//   II:  endpoint delta equals the max of consecutive deltas
//   III: at a repeated delta position the digits strictly increase
VerificationReport property_suite(PropertyKind kind,
                                  const PropertyParams& params);

}  // namespace rlc
