#include "lifted.hpp"

#include "stepup.hpp"
#include "vertex_code.hpp"

namespace rlc {

Lifted::Lifted(std::variant<ExplicitNode, BinaryNode, MixedNode> node)
    : node_(std::move(node)) {
  if (const auto* e = std::get_if<ExplicitNode>(&node_)) {
    kind_ = Kind::explicit_leaf;
    num_colors_ = e->coloring.num_colors();
    universe_size_ = BigInt(static_cast<unsigned long>(e->coloring.num_vertices()));
  } else if (const auto* b = std::get_if<BinaryNode>(&node_)) {
    kind_ = Kind::binary_stepup;
    num_colors_ = b->base.num_colors();
    universe_size_ = pow2(static_cast<unsigned long>(b->base.num_vertices()));
  } else {
    const auto& m = std::get<MixedNode>(node_);
    kind_ = Kind::mixed_stepup;
    num_colors_ = m.triple_base->num_colors() + 6;
    BigInt n3 = m.triple_base->universe_size();
    mpz_pow_ui(universe_size_.get_mpz_t(), n3.get_mpz_t(),
               static_cast<unsigned long>(m.pair_base.num_vertices()));
  }
}

LiftedPtr Lifted::make_explicit(TripleColoring leaf) {
  return LiftedPtr(new Lifted(ExplicitNode{std::move(leaf)}));
}

LiftedPtr Lifted::make_binary(PairColoring base) {
  return LiftedPtr(new Lifted(BinaryNode{std::move(base)}));
}

LiftedPtr Lifted::make_mixed(PairColoring pair_base, LiftedPtr triple_base) {
  require(triple_base != nullptr, ErrorCode::invalid_argument,
          "mixed step-up needs a triple base");
  require(pair_base.num_colors() == 3, ErrorCode::invalid_argument,
          "mixed step-up pair base must use exactly 3 colors");
  require(triple_base->num_colors() >= 3, ErrorCode::invalid_argument,
          "mixed step-up triple base needs at least 3 colors");
  require(triple_base->universe_size() >= 3, ErrorCode::invalid_argument,
          "mixed step-up triple base universe too small");
  return LiftedPtr(
      new Lifted(MixedNode{std::move(pair_base), std::move(triple_base)}));
}

std::size_t Lifted::depth() const {
  switch (kind_) {
    case Kind::explicit_leaf: return 0;
    case Kind::binary_stepup: return 1;
    case Kind::mixed_stepup: return 1 + mixed_triple_base()->depth();
  }
  return 0;
}

const TripleColoring& Lifted::leaf() const {
  require(kind_ == Kind::explicit_leaf, ErrorCode::invalid_argument,
          "not an explicit leaf");
  return std::get<ExplicitNode>(node_).coloring;
}

const PairColoring& Lifted::binary_base() const {
  require(kind_ == Kind::binary_stepup, ErrorCode::invalid_argument,
          "not a binary step-up");
  return std::get<BinaryNode>(node_).base;
}

const PairColoring& Lifted::mixed_pair_base() const {
  require(kind_ == Kind::mixed_stepup, ErrorCode::invalid_argument,
          "not a mixed step-up");
  return std::get<MixedNode>(node_).pair_base;
}

const LiftedPtr& Lifted::mixed_triple_base() const {
  require(kind_ == Kind::mixed_stepup, ErrorCode::invalid_argument,
          "not a mixed step-up");
  return std::get<MixedNode>(node_).triple_base;
}

BigInt Lifted::code_radix() const {
  switch (kind_) {
    case Kind::binary_stepup: return BigInt(2);
    case Kind::mixed_stepup: return mixed_triple_base()->universe_size();
    default:
      fail(ErrorCode::invalid_argument, "explicit leaves have no digit view");
  }
}

std::size_t Lifted::code_digits() const {
  switch (kind_) {
    case Kind::binary_stepup: return binary_base().num_vertices();
    case Kind::mixed_stepup: return mixed_pair_base().num_vertices();
    default:
      fail(ErrorCode::invalid_argument, "explicit leaves have no digit view");
  }
}

ColorId Lifted::color(const BigInt& a, const BigInt& b, const BigInt& c) const {
  const BigInt* v1 = &a;
  const BigInt* v2 = &b;
  const BigInt* v3 = &c;
  if (*v1 > *v2) std::swap(v1, v2);
  if (*v2 > *v3) std::swap(v2, v3);
  if (*v1 > *v2) std::swap(v1, v2);
  require(*v1 != *v2 && *v2 != *v3, ErrorCode::equal_vertices,
          "triple has repeated vertices");
  return color_sorted(*v1, *v2, *v3);
}

ColorId Lifted::color_sorted(const BigInt& v1, const BigInt& v2,
                             const BigInt& v3) const {
  require(v1 < v2 && v2 < v3, ErrorCode::invalid_argument,
          "vertices must be strictly increasing");
  require(sgn(v1) >= 0 && v3 < universe_size_, ErrorCode::out_of_universe,
          "vertex outside the universe");
  switch (kind_) {
    case Kind::explicit_leaf:
      return leaf().color(to_u64(v1), to_u64(v2), to_u64(v3));
    case Kind::binary_stepup: {
      const std::size_t width = code_digits();
      return chi_binary(binary_base(), VertexCode(v1, BigInt(2), width),
                        VertexCode(v2, BigInt(2), width),
                        VertexCode(v3, BigInt(2), width));
    }
    case Kind::mixed_stepup: {
      const BigInt radix = code_radix();
      const std::size_t width = code_digits();
      return chi_mixed(mixed_pair_base(), *mixed_triple_base(),
                       VertexCode(v1, radix, width),
                       VertexCode(v2, radix, width),
                       VertexCode(v3, radix, width));
    }
  }
  fail(ErrorCode::internal, "unreachable");
}

}  // namespace rlc
