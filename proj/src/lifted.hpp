#pragma once

// The construction tree for lazily evaluable triple colorings of huge vertex
// sets. A node is one of:
//   explicit leaf    - a stored triple coloring of {0..N-1}
//   binary step-up   - pair base on M vertices, universe {0..2^M-1}
//   mixed step-up    - 3-color pair base on N2 vertices plus a recursive
//                      triple coloring on N3 vertices, universe {0..N3^N2-1}
// Universe sizes are computed exactly; colors are evaluated per triple and
// never stored.

#include <cstdint>
#include <memory>
#include <variant>

#include "bigint.hpp"
#include "coloring.hpp"

namespace rlc {

class Lifted;
using LiftedPtr = std::shared_ptr<const Lifted>;

class Lifted {
 public:
  enum class Kind { explicit_leaf, binary_stepup, mixed_stepup };

  static LiftedPtr make_explicit(TripleColoring leaf);
  static LiftedPtr make_binary(PairColoring base);
  static LiftedPtr make_mixed(PairColoring pair_base, LiftedPtr triple_base);

  Kind kind() const { return kind_; }
  std::uint32_t num_colors() const { return num_colors_; }
  const BigInt& universe_size() const { return universe_size_; }
  // Levels of step-up nodes above the explicit leaf.
  std::size_t depth() const;

  const TripleColoring& leaf() const;
  const PairColoring& binary_base() const;
  const PairColoring& mixed_pair_base() const;
  const LiftedPtr& mixed_triple_base() const;

  // Digit geometry of vertex codes at this node (step-up nodes only).
  BigInt code_radix() const;
  std::size_t code_digits() const;

  // Color of an unordered triple of distinct universe vertices.
  ColorId color(const BigInt& a, const BigInt& b, const BigInt& c) const;
  // Requires v1 < v2 < v3.
  ColorId color_sorted(const BigInt& v1, const BigInt& v2,
                       const BigInt& v3) const;

 private:
  struct ExplicitNode {
    TripleColoring coloring;
  };
  struct BinaryNode {
    PairColoring base;
  };
  struct MixedNode {
    PairColoring pair_base;
    LiftedPtr triple_base;
  };

  explicit Lifted(std::variant<ExplicitNode, BinaryNode, MixedNode> node);

  Kind kind_;
  std::uint32_t num_colors_;
  BigInt universe_size_;
  std::variant<ExplicitNode, BinaryNode, MixedNode> node_;
};

}  // namespace rlc
