#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "basegen.hpp"
#include "rng.hpp"
#include "stepup.hpp"
#include "verify.hpp"

using namespace rlc;

namespace {

// 2-coloring of K4 with no monochromatic triangle, fixed by hand.
PairColoring k4_no_mono() {
  std::vector<ColorId> colors(6);
  colors[PairColoring::rank(0, 1)] = 0;
  colors[PairColoring::rank(0, 2)] = 1;
  colors[PairColoring::rank(1, 2)] = 1;
  colors[PairColoring::rank(0, 3)] = 1;
  colors[PairColoring::rank(1, 3)] = 1;
  colors[PairColoring::rank(2, 3)] = 0;
  return PairColoring(4, 2, colors);
}

std::vector<BigInt> verts(std::initializer_list<unsigned long> xs) {
  std::vector<BigInt> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

Chain make_chain(const std::vector<unsigned long>& values, unsigned long radix,
                 std::size_t digits) {
  std::vector<VertexCode> codes;
  for (auto v : values)
    codes.emplace_back(BigInt(v), BigInt(radix), digits);
  return Chain(std::move(codes));
}

// Strictly increasing values whose consecutive deltas follow `deltas`:
// each step bumps the digit at the requested position and clears below.
std::vector<unsigned long> chain_with_deltas(const std::vector<unsigned>& deltas,
                                             unsigned long radix,
                                             std::size_t digits) {
  std::vector<unsigned long> values = {0};
  std::vector<unsigned long> digit(digits, 0);
  for (unsigned d : deltas) {
    digit[d] += 1;
    REQUIRE(digit[d] < radix);
    for (std::size_t i = 0; i < d; ++i) digit[i] = 0;
    unsigned long v = 0;
    for (std::size_t i = digits; i-- > 0;) v = v * radix + digit[i];
    values.push_back(v);
  }
  return values;
}

}  // namespace

TEST_CASE("min_colors basics") {
  LiftedPtr tree = Lifted::make_binary(k4_no_mono());
  CHECK(min_colors(*tree, verts({0, 1, 2})) == 1);  // single triple
  CHECK(min_colors(*tree, verts({0, 1, 2, 3, 4, 5, 6, 7})) >= 1);
  CHECK_THROWS_AS(min_colors(*tree, verts({0, 1})), Error);
  CHECK_THROWS_AS(min_colors(*tree, verts({0, 2, 1})), Error);
  CHECK_THROWS_AS(min_colors(*tree, verts({0, 1, 16})), Error);

  // constant coloring shows one color on any subset
  PairColoring constant(4, 2, std::vector<ColorId>(6, 0));
  LiftedPtr flat = Lifted::make_binary(constant);
  CHECK(min_colors(*flat, verts({0, 1, 2, 3, 4, 5})) == 1);

  // explicit-coloring overload agrees with the wrapped tree
  TripleColoring leaf(5, 3, std::vector<ColorId>{0, 1, 2, 0, 1, 2, 0, 1, 2, 0});
  LiftedPtr wrapped = Lifted::make_explicit(leaf);
  auto subset = verts({0, 2, 3, 4});
  CHECK(min_colors(leaf, subset) == min_colors(*wrapped, subset));
}

TEST_CASE("min_colors is monotone under supersets") {
  LiftedPtr tree = Lifted::make_binary(k4_no_mono());
  SplitMix64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    std::set<unsigned long> s;
    while (s.size() < 5) s.insert(rng.next_below(16));
    std::vector<BigInt> small(s.begin(), s.end());
    std::set<unsigned long> bigger = s;
    while (bigger.size() < 8) bigger.insert(rng.next_below(16));
    std::vector<BigInt> big(bigger.begin(), bigger.end());
    std::sort(small.begin(), small.end());
    std::sort(big.begin(), big.end());
    CHECK(min_colors(*tree, small) <= min_colors(*tree, big));
  }
}

TEST_CASE("verify_exhaustive on the lifted K4 base") {
  LiftedPtr tree = Lifted::make_binary(k4_no_mono());
  CHECK(tree->universe_size() == 16);
  auto report = verify_exhaustive(*tree, 8, 2);
  CHECK(report.pass());
  CHECK(report.subsets_checked == 12870);
  CHECK(report.min_colors_seen >= 2);
  CHECK(report.mode == VerificationReport::Mode::exhaustive);
  CHECK_FALSE(report.seed.has_value());
}

TEST_CASE("verify_exhaustive finds the first counterexample") {
  PairColoring constant(4, 2, std::vector<ColorId>(6, 0));
  LiftedPtr tree = Lifted::make_binary(constant);
  auto report = verify_exhaustive(*tree, 4, 2);
  CHECK_FALSE(report.pass());
  CHECK(report.min_colors_seen == 1);
  REQUIRE(report.counterexample.has_value());
  CHECK(*report.counterexample == verts({0, 1, 2, 3}));
}

TEST_CASE("single-subset verification equals min_colors") {
  LiftedPtr tree = Lifted::make_binary(k4_no_mono());
  auto all = verts({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15});
  auto report = verify_exhaustive(*tree, all, 16, 2);
  CHECK(report.subsets_checked == 1);
  CHECK(report.min_colors_seen == min_colors(*tree, all));
}

TEST_CASE("vertex-list verification handles sparse subsets") {
  LiftedPtr tree = Lifted::make_binary(k4_no_mono());
  auto list = verts({0, 3, 5, 6, 9, 10, 12, 15});
  auto report = verify_exhaustive(*tree, list, 4, 2, {});
  CHECK(report.subsets_checked == 70);
  CHECK_THROWS_AS(verify_exhaustive(*tree, verts({3, 1, 2}), 3, 2), Error);
}

TEST_CASE("worker count never changes the result") {
  LiftedPtr tree = Lifted::make_binary(k4_no_mono());
  VerifyOptions one;
  one.workers = 1;
  VerifyOptions three;
  three.workers = 3;
  auto a = verify_exhaustive(*tree, 8, 2, one);
  auto b = verify_exhaustive(*tree, 8, 2, three);
  CHECK(a.subsets_checked == b.subsets_checked);
  CHECK(a.min_colors_seen == b.min_colors_seen);
  CHECK(a.counterexample == b.counterexample);

  PairColoring constant(4, 2, std::vector<ColorId>(6, 0));
  LiftedPtr flat = Lifted::make_binary(constant);
  auto fa = verify_exhaustive(*flat, 4, 2, one);
  auto fb = verify_exhaustive(*flat, 4, 2, three);
  CHECK(fa.counterexample == fb.counterexample);

  auto sa = verify_sampled(*flat, 4, 2, 500, 42, one);
  auto sb = verify_sampled(*flat, 4, 2, 500, 42, three);
  CHECK(sa.counterexample == sb.counterexample);
  CHECK(sa.min_colors_seen == sb.min_colors_seen);
}

TEST_CASE("verify_sampled determinism and agreement") {
  LiftedPtr tree = Lifted::make_binary(k4_no_mono());
  auto a = verify_sampled(*tree, 8, 2, 1000, 7);
  auto b = verify_sampled(*tree, 8, 2, 1000, 7);
  CHECK(a.pass());
  CHECK(a.min_colors_seen == b.min_colors_seen);
  CHECK(a.subsets_checked == 1000);
  CHECK(a.seed == 7);

  // sampled failures are a subset of exhaustive failures: a failing coloring
  // must also fail the exhaustive check
  PairColoring constant(4, 2, std::vector<ColorId>(6, 0));
  LiftedPtr flat = Lifted::make_binary(constant);
  auto sampled = verify_sampled(*flat, 4, 2, 200, 3);
  CHECK_FALSE(sampled.pass());
  CHECK_FALSE(verify_exhaustive(*flat, 4, 2).pass());
}

TEST_CASE("verification rejects infeasible requests") {
  LiftedPtr tree = Lifted::make_binary(k4_no_mono());
  CHECK_THROWS_AS(verify_exhaustive(*tree, 4, 3), Error);   // q = 2 < t
  CHECK_THROWS_AS(verify_exhaustive(*tree, 17, 2), Error);  // n > universe
  CHECK_THROWS_AS(verify_sampled(*tree, 17, 2, 10, 0), Error);
  CHECK_THROWS_AS(verify_exhaustive(*tree, 3, 1), Error);   // t < 2
  VerifyOptions tiny;
  tiny.budget = 10;
  CHECK_THROWS_AS(verify_exhaustive(*tree, 8, 2, tiny), Error);
  try {
    verify_exhaustive(*tree, 8, 2, tiny);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::budget_exceeded);
  }
}

TEST_CASE("pair verification") {
  PairColoring k4 = k4_no_mono();
  CHECK(verify_pair_exhaustive(k4, 3, 2).pass());
  auto report = verify_pair_exhaustive(k4, 3, 2);
  CHECK(report.subsets_checked == 4);
  PairColoring constant(4, 2, std::vector<ColorId>(6, 0));
  CHECK_FALSE(verify_pair_exhaustive(constant, 3, 2).pass());
  CHECK(verify_pair_sampled(k4, 3, 2, 100, 9).pass());
}

TEST_CASE("stepdown extraction on the worked example") {
  PairColoring base(3, 3, {0, 1, 2});
  Chain chain = make_chain({0, 1, 2, 3}, 2, 3);
  StepdownResult result = stepdown_extract(chain, base);
  CHECK(result.delta_set == std::vector<std::size_t>{0, 1});
  REQUIRE(result.witnesses.count({0, 1}) == 1);
  StepdownWitness wit = result.witnesses.at({0, 1});
  CHECK(wit.a == 0);
  CHECK(wit.b == 1);
  CHECK(wit.c == 2);
}

TEST_CASE("stepdown base cases and validation") {
  PairColoring base(3, 3, {0, 1, 2});
  Chain two = make_chain({1, 5}, 2, 3);
  StepdownResult r = stepdown_extract(two, base);
  CHECK(r.delta_set == std::vector<std::size_t>{2});
  CHECK(r.witnesses.empty());

  Chain three = make_chain({0, 1, 2}, 2, 3);
  CHECK_THROWS_AS(stepdown_extract(three, base), Error);  // length 3

  Chain wrong_radix(std::vector<VertexCode>{VertexCode(BigInt(0), BigInt(3), 3),
                                            VertexCode(BigInt(1), BigInt(3), 3)});
  CHECK_THROWS_AS(stepdown_extract(wrong_radix, base), Error);
}

TEST_CASE("stepdown on random chains realizes enough deltas") {
  GenSpec spec;
  spec.kind = GenSpec::Kind::pair;
  spec.universe_size = 12;
  spec.num_colors = 5;
  spec.subset_size = 4;
  spec.required_colors = 2;
  spec.seed = 77;
  PairColoring base = std::get<PairColoring>(generate(spec));

  SplitMix64 rng(123);
  for (int trial = 0; trial < 200; ++trial) {
    std::set<unsigned long> s;
    while (s.size() < 16) s.insert(rng.next_below(4096));
    std::vector<unsigned long> values(s.begin(), s.end());
    Chain chain = make_chain(values, 2, 12);
    StepdownResult result = stepdown_extract(chain, base);
    CHECK(result.delta_set.size() >= 4);
    CHECK(result.witnesses.size() ==
          result.delta_set.size() * (result.delta_set.size() - 1) / 2);
    // independent re-validation of every witness
    for (const auto& [key, wit] : result.witnesses) {
      CHECK(chi_binary(base, chain.vertex(wit.a), chain.vertex(wit.b),
                       chain.vertex(wit.c)) == base.color(key.first, key.second));
    }
  }
}

TEST_CASE("equal delta escape") {
  // deltas (5,5,5,2): position 4 in classical 1-based terms, 3 here
  auto values = chain_with_deltas({5, 5, 5, 2}, 4, 7);
  Chain chain = make_chain(values, 4, 7);
  auto w = equal_delta_escape(chain, 4);
  REQUIRE(w.has_value());
  CHECK(*w == 3);

  // all deltas equal: no escape
  auto flat_values = chain_with_deltas({3, 3, 3, 3}, 5, 5);
  Chain flat = make_chain(flat_values, 5, 5);
  CHECK_FALSE(equal_delta_escape(flat, 4).has_value());

  CHECK_THROWS_AS(equal_delta_escape(flat, 5), Error);  // needs length > r

  // random chains: any returned position satisfies the strict inequality
  SplitMix64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::set<unsigned long> s;
    while (s.size() < 9) s.insert(rng.next_below(6561));
    std::vector<unsigned long> vs(s.begin(), s.end());
    Chain c = make_chain(vs, 3, 8);
    auto esc = equal_delta_escape(c, 8);
    if (esc) {
      CHECK(delta(c.vertex(0), c.vertex(*esc)) > c.delta_at(*esc));
    } else {
      for (std::size_t i = 1; i + 1 <= 8; ++i)
        CHECK(delta(c.vertex(0), c.vertex(i)) <= c.delta_at(i));
    }
  }
}

TEST_CASE("decreasing chain extraction on a block-structured chain") {
  // deltas (5,4,1,3,0,2,1,0): escapes at positions 1 and 2, then strictness
  auto values = chain_with_deltas({5, 4, 1, 3, 0, 2, 1, 0}, 10, 6);
  Chain chain = make_chain(values, 10, 6);
  auto result = decreasing_chain_extract(chain, 3, 3);
  auto* ok = std::get_if<ChainExtractSuccess>(&result);
  REQUIRE(ok != nullptr);
  CHECK(ok->escape_positions == std::vector<std::size_t>{1, 2});
  CHECK(ok->selected_vertices == std::vector<std::size_t>{0, 1, 2, 3});
  // the extracted display is strictly decreasing by direct recomputation
  CHECK(delta(chain.vertex(0), chain.vertex(1)) >
        delta(chain.vertex(1), chain.vertex(2)));
  CHECK(delta(chain.vertex(1), chain.vertex(2)) > chain.delta_at(2));
}

TEST_CASE("decreasing chain extraction reports equal-delta blocks") {
  auto values = chain_with_deltas({2, 2, 2, 2, 2, 2, 2, 2}, 12, 4);
  Chain chain = make_chain(values, 12, 4);
  auto result = decreasing_chain_extract(chain, 3, 3);
  auto* failure = std::get_if<ChainExtractFailure>(&result);
  REQUIRE(failure != nullptr);
  CHECK(failure->reason == ChainExtractFailure::Reason::no_escape);
  CHECK(failure->block_begin == 0);
  CHECK(failure->deltas_all_equal);

  CHECK_THROWS_AS(decreasing_chain_extract(chain, 3, 4), Error);  // too short
}

TEST_CASE("extracted vertices live in the expected color bands") {
  // mixed step-up over radix-10 codes of width 6
  GenSpec leaf_spec;
  leaf_spec.kind = GenSpec::Kind::triple;
  leaf_spec.universe_size = 10;
  leaf_spec.num_colors = 3;
  leaf_spec.subset_size = 5;
  leaf_spec.required_colors = 3;
  leaf_spec.seed = 13;
  LiftedPtr leaf =
      Lifted::make_explicit(std::get<TripleColoring>(generate(leaf_spec)));
  GenSpec pair_spec;
  pair_spec.kind = GenSpec::Kind::pair;
  pair_spec.universe_size = 6;
  pair_spec.num_colors = 3;
  pair_spec.subset_size = 4;
  pair_spec.required_colors = 2;
  pair_spec.seed = 29;
  PairColoring pair_base = std::get<PairColoring>(generate(pair_spec));
  LiftedPtr tree = Lifted::make_mixed(pair_base, leaf);

  auto values = chain_with_deltas({5, 4, 1, 3, 0, 2, 1, 0}, 10, 6);
  Chain chain = make_chain(values, 10, 6);
  auto result = decreasing_chain_extract(chain, 3, 3);
  auto* ok = std::get_if<ChainExtractSuccess>(&result);
  REQUIRE(ok != nullptr);
  // every triple among the selected vertices falls in the band 0..2
  const auto& sel = ok->selected_vertices;
  for (std::size_t a = 0; a < sel.size(); ++a)
    for (std::size_t b = a + 1; b < sel.size(); ++b)
      for (std::size_t c = b + 1; c < sel.size(); ++c) {
        ColorId color = tree->color_sorted(chain.vertex(sel[a]).value(),
                                           chain.vertex(sel[b]).value(),
                                           chain.vertex(sel[c]).value());
        CHECK(color <= 2);
      }

  // mirrored variant: reverse the delta pattern; triples land in band 3..5
  auto mirrored_values = chain_with_deltas({0, 1, 2, 0, 3, 1, 4, 5}, 10, 6);
  Chain mchain = make_chain(mirrored_values, 10, 6);
  auto mresult = decreasing_chain_extract(mchain, 3, 3, true);
  auto* mok = std::get_if<ChainExtractSuccess>(&mresult);
  REQUIRE(mok != nullptr);
  const auto& msel = mok->selected_vertices;
  CHECK(std::is_sorted(msel.begin(), msel.end()));
  for (std::size_t a = 0; a < msel.size(); ++a)
    for (std::size_t b = a + 1; b < msel.size(); ++b)
      for (std::size_t c = b + 1; c < msel.size(); ++c) {
        ColorId color = tree->color_sorted(mchain.vertex(msel[a]).value(),
                                           mchain.vertex(msel[b]).value(),
                                           mchain.vertex(msel[c]).value());
        CHECK(color >= 3);
        CHECK(color <= 5);
      }
}

TEST_CASE("property suites") {
  PropertyParams p;
  p.radix = 2;
  p.num_digits = 6;
  p.exhaustive = true;
  auto r1 = property_suite(PropertyKind::I, p);
  CHECK(r1.pass());
  CHECK(r1.subsets_checked == 41664);  // C(64,3)

  // radix 3 admits repeated consecutive deltas: the smallest violation is
  // the triple (0,1,2)
  PropertyParams p3;
  p3.radix = 3;
  p3.num_digits = 1;
  p3.exhaustive = true;
  auto r2 = property_suite(PropertyKind::I, p3);
  CHECK_FALSE(r2.pass());
  REQUIRE(r2.counterexample.has_value());
  CHECK(*r2.counterexample == verts({0, 1, 2}));

  // property III is vacuous in binary universes
  auto r3 = property_suite(PropertyKind::III, p);
  CHECK(r3.pass());

  // property III holds exhaustively at radix 4, width 3
  PropertyParams p43;
  p43.radix = 4;
  p43.num_digits = 3;
  p43.exhaustive = true;
  auto r4 = property_suite(PropertyKind::III, p43);
  CHECK(r4.pass());
  CHECK(r4.subsets_checked == 41664);

  // property II on sampled chains, binary and radix 5
  PropertyParams pII;
  pII.num_digits = 16;
  pII.exhaustive = false;
  pII.samples = 2000;
  pII.chain_length = 32;
  pII.seed = 3;
  auto r5 = property_suite(PropertyKind::II, pII);
  CHECK(r5.pass());
  CHECK(r5.subsets_checked == 2000);
  pII.radix = 5;
  pII.num_digits = 8;
  auto r6 = property_suite(PropertyKind::II, pII);
  CHECK(r6.pass());

  // exhaustive mode refuses budgets it cannot honor
  PropertyParams pbig;
  pbig.radix = 2;
  pbig.num_digits = 20;
  pbig.exhaustive = true;
  pbig.budget = 1000;
  CHECK_THROWS_AS(property_suite(PropertyKind::I, pbig), Error);
}

TEST_CASE("report json shape") {
  LiftedPtr tree = Lifted::make_binary(k4_no_mono());
  auto report = verify_exhaustive(*tree, 8, 2);
  const std::string json = report.to_json();
  CHECK(json.find("\"pass\": true") != std::string::npos);
  CHECK(json.find("\"subsets_checked\": 12870") != std::string::npos);
}
