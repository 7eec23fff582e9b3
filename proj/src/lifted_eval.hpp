#pragma once

// Bulk evaluator for construction trees over machine-word universes. The
// reference path is Lifted::color_sorted, which builds VertexCodes and walks
// the chi rules in big-integer arithmetic; this mirror exists so verification
// loops do not pay that cost. The two paths are compared tuple-by-tuple in
// the oracle tests.

#include <bit>
#include <memory>
#include <vector>

#include "lifted.hpp"

namespace rlc {

namespace detail {

struct NodeU64 {
  Lifted::Kind kind;
  const TripleColoring* leaf = nullptr;
  const PairColoring* pair = nullptr;
  std::uint32_t width = 0;
  std::uint64_t radix = 0;
  std::vector<std::uint64_t> pow;
  std::unique_ptr<NodeU64> child;

  ColorId color(std::uint64_t u, std::uint64_t v, std::uint64_t w) const {
    switch (kind) {
      case Lifted::Kind::explicit_leaf:
        return leaf->colors()[TripleColoring::rank(u, v, w)];
      case Lifted::Kind::binary_stepup: {
        const int d1 = 63 - std::countl_zero(u ^ v);
        const int d2 = 63 - std::countl_zero(v ^ w);
        require(d1 != d2, ErrorCode::internal,
                "consecutive deltas collided in a binary universe");
        return pair->colors()[PairColoring::rank(
            static_cast<std::uint64_t>(std::min(d1, d2)),
            static_cast<std::uint64_t>(std::max(d1, d2)))];
      }
      case Lifted::Kind::mixed_stepup: {
        std::uint32_t d1 = 0, d2 = 0;
        std::uint64_t u_at = 0, v_at = 0, w_at = 0;
        for (std::uint32_t i = width; i-- > 0;) {
          const std::uint64_t qu = u / pow[i], qv = v / pow[i];
          if (qu != qv) {
            d1 = i;
            u_at = qu % radix;
            v_at = qv % radix;
            break;
          }
        }
        for (std::uint32_t i = width; i-- > 0;) {
          const std::uint64_t qv = v / pow[i], qw = w / pow[i];
          if (qv != qw) {
            d2 = i;
            w_at = qw % radix;
            break;
          }
        }
        if (d1 > d2) return pair->colors()[PairColoring::rank(d2, d1)];
        if (d1 < d2) return 3 + pair->colors()[PairColoring::rank(d1, d2)];
        require(u_at < v_at && v_at < w_at, ErrorCode::internal,
                "digits at a repeated delta position must increase");
        return 6 + child->color(u_at, v_at, w_at);
      }
    }
    fail(ErrorCode::internal, "unreachable");
  }
};

inline std::unique_ptr<NodeU64> build_u64_node(const Lifted& tree) {
  auto node = std::make_unique<NodeU64>();
  node->kind = tree.kind();
  switch (tree.kind()) {
    case Lifted::Kind::explicit_leaf:
      node->leaf = &tree.leaf();
      break;
    case Lifted::Kind::binary_stepup:
      node->pair = &tree.binary_base();
      node->width = static_cast<std::uint32_t>(tree.code_digits());
      break;
    case Lifted::Kind::mixed_stepup: {
      node->pair = &tree.mixed_pair_base();
      node->width = static_cast<std::uint32_t>(tree.code_digits());
      node->radix = to_u64(tree.mixed_triple_base()->universe_size());
      node->pow.resize(node->width);
      std::uint64_t p = 1;
      for (std::uint32_t i = 0; i < node->width; ++i) {
        node->pow[i] = p;
        if (i + 1 < node->width) p *= node->radix;
      }
      node->child = build_u64_node(*tree.mixed_triple_base());
      break;
    }
  }
  return node;
}

}  // namespace detail

// Requires fits_u64(tree.universe_size()). Thread-safe for concurrent reads;
// the referenced tree must outlive the evaluator.
class TreeEvalU64 {
 public:
  explicit TreeEvalU64(const Lifted& tree) : root_(detail::build_u64_node(tree)) {
    require(fits_u64(tree.universe_size()), ErrorCode::universe_too_large,
            "fast evaluator needs a machine-word universe");
  }
  // Vertices must be sorted and distinct.
  ColorId color(std::uint64_t u, std::uint64_t v, std::uint64_t w) const {
    return root_->color(u, v, w);
  }

 private:
  std::unique_ptr<detail::NodeU64> root_;
};

}  // namespace rlc
