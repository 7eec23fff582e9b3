#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "basegen.hpp"
#include "lifted_eval.hpp"
#include "rng.hpp"
#include "stepup.hpp"
#include "verify.hpp"

using namespace rlc;

namespace {

VertexCode bin(unsigned long v, std::size_t digits) {
  return VertexCode(BigInt(v), BigInt(2), digits);
}

PairColoring rainbow_k3() { return PairColoring(3, 3, {0, 1, 2}); }

}  // namespace

TEST_CASE("delta finds the top differing digit") {
  CHECK(delta(bin(5, 3), bin(1, 3)) == 2);
  CHECK(delta(bin(6, 3), bin(7, 3)) == 0);
  VertexCode u(BigInt(2), BigInt(3), 2);  // digits (2,0)
  VertexCode v(BigInt(5), BigInt(3), 2);  // digits (2,1)
  CHECK(delta(u, v) == 1);
  CHECK(delta(v, u) == 1);
  CHECK_THROWS_AS(delta(bin(5, 3), bin(5, 3)), Error);
  CHECK_THROWS_AS(delta(bin(1, 3), bin(1, 4)), Error);
}

TEST_CASE("chi_binary follows the base color of the delta pair") {
  PairColoring base = rainbow_k3();  // phi(0,1)=0, phi(0,2)=1, phi(1,2)=2
  CHECK(chi_binary(base, bin(1, 3), bin(2, 3), bin(4, 3)) == 2);
  CHECK(chi_binary(base, bin(0, 3), bin(1, 3), bin(2, 3)) == 0);
  CHECK(chi_binary(base, bin(0, 3), bin(1, 3), bin(3, 3)) == 0);
  CHECK_THROWS_AS(chi_binary(base, bin(2, 3), bin(1, 3), bin(4, 3)), Error);
}

TEST_CASE("chi_binary never sees a repeated delta") {
  PairColoring base = std::get<PairColoring>([&] {
    GenSpec spec;
    spec.kind = GenSpec::Kind::pair;
    spec.universe_size = 10;
    spec.num_colors = 4;
    spec.subset_size = 4;
    spec.required_colors = 2;
    spec.seed = 3;
    return generate(spec);
  }());
  SplitMix64 rng(99);
  for (int i = 0; i < 10000; ++i) {
    std::uint64_t a = rng.next_below(1024), b, c;
    do { b = rng.next_below(1024); } while (b == a);
    do { c = rng.next_below(1024); } while (c == a || c == b);
    std::uint64_t t[3] = {a, b, c};
    std::sort(t, t + 3);
    // throws internal if the distinct-delta invariant ever failed
    (void)chi_binary(base, bin(t[0], 10), bin(t[1], 10), bin(t[2], 10));
  }
}

TEST_CASE("chi_mixed branch selection") {
  // N3 = 3 (leaf on 3 vertices, single triple colored 2), N2 = 2
  TripleColoring leaf3(3, 3, {2});
  LiftedPtr triple_base = Lifted::make_explicit(leaf3);
  PairColoring pair_base(2, 3, {1});  // phi2(0,1) = 1
  const BigInt r3(3);
  auto code = [&](unsigned long v) { return VertexCode(BigInt(v), r3, 2); };

  // digits: 0=(0,0) 1=(1,0) 2=(2,0) 3=(0,1) 4=(1,1)
  CHECK(chi_mixed(pair_base, *triple_base, code(0), code(1), code(2)) ==
        6 + 2);  // equal deltas at position 0
  CHECK(chi_mixed(pair_base, *triple_base, code(0), code(3), code(4)) ==
        1);  // d1=1 > d2=0, band 0..2
  CHECK(chi_mixed(pair_base, *triple_base, code(0), code(1), code(3)) ==
        3 + 1);  // d1=0 < d2=1, band 3..5
}

TEST_CASE("lifted color sorts arguments and rejects duplicates") {
  LiftedPtr tree = Lifted::make_mixed(rainbow_k3(),
                                      Lifted::make_explicit(TripleColoring(
                                          4, 3, {0, 1, 2, 0})));
  const BigInt a(3), b(17), c(40);
  const ColorId expect = tree->color_sorted(a, b, c);
  CHECK(tree->color(c, a, b) == expect);
  CHECK(tree->color(b, c, a) == expect);
  CHECK_THROWS_AS(tree->color(a, a, b), Error);
  CHECK_THROWS_AS(tree->color_sorted(b, a, c), Error);
  CHECK_THROWS_AS(tree->color(a, b, BigInt(64)), Error);
}

TEST_CASE("fast evaluator agrees with the reference chi path") {
  LiftedPtr tree = Lifted::make_mixed(rainbow_k3(),
                                      Lifted::make_explicit(TripleColoring(
                                          4, 3, {0, 1, 2, 0})));
  TreeEvalU64 eval(*tree);
  for (std::uint64_t a = 0; a < 20; ++a)
    for (std::uint64_t b = a + 1; b < 21; ++b)
      for (std::uint64_t c = b + 1; c < 22; ++c)
        CHECK(eval.color(a, b, c) ==
              tree->color_sorted(BigInt(static_cast<unsigned long>(a)),
                                 BigInt(static_cast<unsigned long>(b)),
                                 BigInt(static_cast<unsigned long>(c))));
}

TEST_CASE("compose at micro overrides") {
  ComposeOptions opt;
  opt.seed = 20;
  opt.pair_vertices = 3;
  opt.pair_subset = 3;
  opt.leaf_vertices = 4;
  opt.leaf_subset = 4;
  LiftedPtr tree = compose(16, 9, opt);
  REQUIRE(tree->kind() == Lifted::Kind::mixed_stepup);
  CHECK(tree->universe_size() == 64);
  CHECK(tree->num_colors() == 9);
  CHECK(tree->depth() == 1);
  CHECK(tree->mixed_triple_base()->kind() == Lifted::Kind::explicit_leaf);
  CHECK(tree->mixed_triple_base()->num_colors() == 3);

  // evaluating through the tree equals calling the mixed rule directly
  const PairColoring& pair_base = tree->mixed_pair_base();
  const Lifted& triple_base = *tree->mixed_triple_base();
  const BigInt radix = tree->code_radix();
  for (std::uint64_t a = 0; a < 64; ++a)
    for (std::uint64_t b = a + 1; b < 64; ++b)
      for (std::uint64_t c = b + 1; c < 64; ++c) {
        const BigInt ba(static_cast<unsigned long>(a)),
            bb(static_cast<unsigned long>(b)), bc(static_cast<unsigned long>(c));
        CHECK(tree->color_sorted(ba, bb, bc) ==
              chi_mixed(pair_base, triple_base, VertexCode(ba, radix, 3),
                        VertexCode(bb, radix, 3), VertexCode(bc, radix, 3)));
      }
}

TEST_CASE("compose recursion base and depth") {
  ComposeOptions opt;
  opt.seed = 4;
  opt.leaf_vertices = 5;
  opt.leaf_subset = 4;
  LiftedPtr leaf = compose(5, 3, opt);
  CHECK(leaf->kind() == Lifted::Kind::explicit_leaf);
  CHECK(leaf->num_colors() == 3);

  // q = 15 walks down 15 -> 9 -> 3: two mixed levels above the leaf
  opt.pair_vertices = 3;
  opt.pair_subset = 3;
  opt.leaf_vertices = 4;
  opt.leaf_subset = 4;
  LiftedPtr deep = compose(1024, 15, opt);
  CHECK(deep->depth() == 2);
  CHECK(deep->num_colors() == 15);
  // level universes with the overrides: leaf 4, middle 4^3, top (4^3)^3
  CHECK(deep->mixed_pair_base().num_vertices() == 3);
  CHECK(deep->mixed_triple_base()->universe_size() == 64);
  CHECK(deep->universe_size() == pow_big(BigInt(64), 3));

  // a base coloring in a q in (3,9) leaf keeps the wider palette
  LiftedPtr mid = compose(64, 5, opt);
  CHECK(mid->kind() == Lifted::Kind::explicit_leaf);
  CHECK(mid->num_colors() == 5);
}

TEST_CASE("floor of n over log2 n") {
  CHECK(floor_div_log2(BigInt(1024)) == 102);
  CHECK(floor_div_log2(BigInt(2)) == 2);
  CHECK(floor_div_log2(BigInt(3)) == 1);
  CHECK(floor_div_log2(BigInt(10)) == 3);
  CHECK(floor_div_log2(pow2(20)) == (1 << 20) / 20);
  // spot check against careful floating point at moderate sizes
  for (unsigned long n : {17ul, 100ul, 12345ul, 999983ul}) {
    const double expect = std::floor(double(n) / std::log2(double(n)));
    CHECK(floor_div_log2(BigInt(n)) == BigInt(static_cast<unsigned long>(expect)));
  }
}

TEST_CASE("bound_log2 base case and recurrence") {
  auto base = bound_log2(BigInt(24), 3);
  REQUIRE(base.is_exact());
  CHECK(*base.exact == BigRat(24));

  auto odd = bound_log2(BigInt(10), 5);
  REQUIRE(odd.is_exact());
  CHECK(*odd.exact == BigRat(100, 24));

  // (1024, 9): factor 1024^(1/4)/2 times 102^2/24, evaluated independently
  auto rec = bound_log2(BigInt(1024), 9);
  CHECK_FALSE(rec.is_exact());
  const long double expect =
      (std::pow(1024.0L, 0.25L) / 2.0L) * (102.0L * 102.0L / 24.0L);
  const long double got = static_cast<long double>(rec.approx.to_double());
  CHECK(std::abs(got - expect) / expect < 1e-12L);

  // exact when n is a fourth power and the child is rational
  auto exact_rec = bound_log2(BigInt(4096), 9);  // 4096^(1/4) = 8
  REQUIRE(exact_rec.is_exact());
  const BigInt r = floor_div_log2(BigInt(4096));  // 4096/12 = 341
  CHECK(*exact_rec.exact == BigRat(8, 2) * BigRat(r * r, 24));
}

TEST_CASE("bound_log2_simple") {
  auto a = bound_log2_simple(BigInt(16), 2, 2);
  REQUIRE(a.is_exact());
  CHECK(*a.exact == BigRat(4));  // 2^4 / 4

  auto b = bound_log2_simple(BigInt(16), 4, 3);
  REQUIRE(b.is_exact());
  CHECK(*b.exact == BigRat(4));  // (4/2)^4 / 4

  // 4^m / 4 against the fourth power of the pair universe size at m = 8
  auto c = bound_log2_simple(pow2(8), 4, 2);
  REQUIRE(c.is_exact());
  const BigInt m_universe = pair_universe_size(4, 2, 8);  // exactly 4^2
  CHECK(*c.exact == BigRat(pow_big(m_universe, 4), 4));

  CHECK_THROWS_AS(bound_log2_simple(BigInt(15), 4, 2), Error);
  auto general = bound_log2_simple(BigInt(15), 4, 2, true);
  CHECK_FALSE(general.is_exact());
  const double expect = std::pow(15.0, std::log2(2.0)) / 4.0;
  CHECK(std::abs(general.approx.to_double() - expect) < 1e-9);
}

TEST_CASE("effective exponent of the recurrence grows toward 9/4") {
  double prev = 0;
  for (unsigned k = 10; k <= 16; ++k) {
    auto b = bound_log2(pow2(k), 9);
    const double eff = std::log2(b.approx.to_double()) / k;
    CHECK(eff > prev);
    CHECK(eff < 2.25);
    prev = eff;
  }
}

TEST_CASE("nominal plan") {
  NominalPlan plan = compose_nominal(1024, 9);
  REQUIRE(plan.levels.size() == 1);
  CHECK(plan.levels[0].s == 10);
  CHECK(plan.levels[0].r == 102);
  CHECK(plan.levels[0].pair_vertices == 5);  // floor(2^2.5)
  CHECK(plan.levels[0].exponent_ok);         // (2*5)^4 = 10000 >= 1024
  CHECK(plan.leaf_n == 102);
  CHECK(plan.leaf_q == 3);
  CHECK(plan.leaf_log2_size == BigRat(102 * 102, 24));
  REQUIRE(plan.log2_universe.is_exact());
  CHECK(*plan.log2_universe.exact == BigRat(5) * BigRat(102 * 102, 24));
  const std::string json = plan.to_json();
  CHECK(json.find("\"type\": \"nominal\"") != std::string::npos);

  NominalPlan deep = compose_nominal(1 << 20, 15);
  CHECK(deep.levels.size() == 2);
  CHECK(deep.levels[1].n == deep.levels[0].r);
  CHECK(deep.levels[1].q == 9);
}
