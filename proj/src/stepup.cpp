#include "stepup.hpp"

#include <json.hpp>

#include "basegen.hpp"
#include "rng.hpp"

namespace rlc {

std::size_t delta(const VertexCode& u, const VertexCode& v) {
  require(u.radix() == v.radix() && u.num_digits() == v.num_digits(),
          ErrorCode::invalid_argument,
          "delta needs operands with equal radix and width");
  require(!(u == v), ErrorCode::equal_vertices,
          "delta is undefined for equal vertices");
  for (std::size_t i = u.num_digits(); i-- > 0;)
    if (u.digit(i) != v.digit(i)) return i;
  fail(ErrorCode::internal, "distinct values with identical digits");
}

ColorId chi_binary(const PairColoring& base, const VertexCode& v1,
                   const VertexCode& v2, const VertexCode& v3) {
  require(v1 < v2 && v2 < v3, ErrorCode::invalid_argument,
          "vertices must be strictly increasing");
  require(v1.radix() == 2, ErrorCode::invalid_argument,
          "binary step-up needs radix-2 codes");
  require(v1.num_digits() == base.num_vertices(), ErrorCode::invalid_argument,
          "code width must match the base universe");
  const std::size_t d1 = delta(v1, v2);
  const std::size_t d2 = delta(v2, v3);
  require(d1 != d2, ErrorCode::internal,
          "consecutive deltas collided in a binary universe");
  return base.color(d1, d2);
}

ColorId chi_mixed(const PairColoring& pair_base, const Lifted& triple_base,
                  const VertexCode& v1, const VertexCode& v2,
                  const VertexCode& v3) {
  require(v1 < v2 && v2 < v3, ErrorCode::invalid_argument,
          "vertices must be strictly increasing");
  require(v1.radix() == triple_base.universe_size(),
          ErrorCode::invalid_argument,
          "code radix must equal the triple-base universe size");
  require(v1.num_digits() == pair_base.num_vertices(),
          ErrorCode::invalid_argument,
          "code width must match the pair-base universe");
  const std::size_t d1 = delta(v1, v2);
  const std::size_t d2 = delta(v2, v3);
  if (d1 > d2) return pair_base.color(d1, d2);
  if (d1 < d2) return 3 + pair_base.color(d1, d2);
  const BigInt& a = v1.digit(d1);
  const BigInt& b = v2.digit(d1);
  const BigInt& c = v3.digit(d1);
  require(a < b && b < c, ErrorCode::internal,
          "digits at a repeated delta position must increase");
  return 6 + triple_base.color_sorted(a, b, c);
}

// ---------------------------------------------------------------------------
// Composition

namespace {

constexpr std::uint32_t kMaxDepth = 64;

TripleColoring generate_leaf(std::uint64_t n_level, std::uint32_t q_level,
                             const ComposeOptions& opt, std::uint64_t seed) {
  std::uint64_t leaf_n = opt.leaf_vertices;
  if (leaf_n == 0) {
    require(n_level > 3, ErrorCode::invalid_argument,
            "leaf size formula needs n > 3");
    leaf_n = to_u64(lemma31_universe_size(static_cast<std::uint32_t>(n_level)));
  }
  std::uint64_t leaf_subset = opt.leaf_subset ? opt.leaf_subset : n_level;
  GenSpec spec;
  spec.kind = GenSpec::Kind::triple;
  spec.universe_size = leaf_n;
  spec.num_colors = 3;
  spec.subset_size = static_cast<std::uint32_t>(leaf_subset);
  spec.required_colors = 3;
  spec.seed = seed;
  spec.max_attempts = opt.max_attempts;
  spec.budget = opt.budget;
  TripleColoring leaf = std::get<TripleColoring>(generate(spec));
  return q_level > 3 ? leaf.with_palette(q_level) : leaf;
}

PairColoring generate_pair_base(std::uint64_t s, const ComposeOptions& opt,
                                std::uint64_t seed) {
  std::uint64_t n2 = opt.pair_vertices;
  if (n2 == 0) {
    require(s > 3, ErrorCode::invalid_argument,
            "pair size formula needs s > 3");
    n2 = to_u64(lemma33_universe_size(static_cast<std::uint32_t>(s)));
  }
  std::uint64_t subset = opt.pair_subset ? opt.pair_subset : s;
  GenSpec spec;
  spec.kind = GenSpec::Kind::pair;
  spec.universe_size = n2;
  spec.num_colors = 3;
  spec.subset_size = static_cast<std::uint32_t>(subset);
  spec.required_colors = 3;
  spec.seed = seed;
  spec.max_attempts = opt.max_attempts;
  spec.budget = opt.budget;
  return std::get<PairColoring>(generate(spec));
}

LiftedPtr compose_rec(std::uint64_t n, std::uint32_t q,
                      const ComposeOptions& opt, std::uint32_t level) {
  require(level < kMaxDepth, ErrorCode::depth_exceeded,
          "composition depth limit reached");
  if (q < 9)
    return Lifted::make_explicit(
        generate_leaf(n, q, opt, seed_stream(opt.seed, 2 * level + 1)));
  require(n > q, ErrorCode::invalid_argument,
          "composition needs n > q at every level");
  const std::uint64_t s = floor_log2(BigInt(static_cast<unsigned long>(n)));
  const std::uint64_t r = to_u64(floor_div_log2(BigInt(static_cast<unsigned long>(n))));
  PairColoring pair_base =
      generate_pair_base(s, opt, seed_stream(opt.seed, 2 * level));
  LiftedPtr triple_base = compose_rec(r, q - 6, opt, level + 1);
  return Lifted::make_mixed(std::move(pair_base), std::move(triple_base));
}

}  // namespace

LiftedPtr compose(std::uint64_t n, std::uint32_t q, const ComposeOptions& opt) {
  require(q >= 3, ErrorCode::invalid_argument, "need q >= 3");
  require(n >= 3, ErrorCode::invalid_argument, "need n >= 3");
  return compose_rec(n, q, opt, 0);
}

NominalPlan compose_nominal(std::uint64_t n, std::uint32_t q) {
  require(q >= 3, ErrorCode::invalid_argument, "need q >= 3");
  require(n > 3, ErrorCode::invalid_argument, "need n > 3");
  NominalPlan plan;
  plan.n = n;
  plan.q = q;

  std::uint64_t n_level = n;
  std::uint32_t q_level = q;
  BigInt pair_product = 1;  // product of the N2 exponents above the leaf
  while (q_level >= 9) {
    require(n_level > q_level, ErrorCode::invalid_argument,
            "nominal plan needs n > q at every level");
    NominalLevel level;
    level.n = n_level;
    level.q = q_level;
    level.s = floor_log2(BigInt(static_cast<unsigned long>(n_level)));
    level.r = to_u64(floor_div_log2(BigInt(static_cast<unsigned long>(n_level))));
    level.pair_vertices =
        lemma33_universe_size(static_cast<std::uint32_t>(level.s));
    // N2 >= n^(1/4)/2  <=>  (2*N2)^4 >= n, checked exactly.
    level.exponent_ok =
        pow_big(2 * level.pair_vertices, 4) >= BigInt(static_cast<unsigned long>(n_level));
    pair_product *= level.pair_vertices;
    plan.levels.push_back(level);
    n_level = level.r;
    q_level -= 6;
  }
  plan.leaf_n = n_level;
  plan.leaf_q = q_level;
  plan.leaf_log2_size =
      BigRat(BigInt(static_cast<unsigned long>(n_level)) *
                 BigInt(static_cast<unsigned long>(n_level)),
             24);
  plan.leaf_log2_size.canonicalize();
  plan.log2_universe = exact_log2_value(BigRat(pair_product) * plan.leaf_log2_size);
  plan.log2_bound = bound_log2(BigInt(static_cast<unsigned long>(n)), q);
  return plan;
}

std::string NominalPlan::to_json() const {
  nlohmann::json doc;
  doc["type"] = "nominal";
  doc["n"] = n;
  doc["q"] = q;
  auto levels_json = nlohmann::json::array();
  for (const auto& level : levels) {
    nlohmann::json item;
    item["n"] = level.n;
    item["q"] = level.q;
    item["s"] = level.s;
    item["r"] = level.r;
    item["pair_vertices"] = level.pair_vertices.get_str();
    item["exponent_ok"] = level.exponent_ok;
    levels_json.push_back(item);
  }
  doc["levels"] = levels_json;
  doc["leaf"] = {{"n", leaf_n},
                 {"q", leaf_q},
                 {"log2_size", to_decimal(leaf_log2_size)}};
  doc["log2_universe"] = log2_universe.to_string();
  doc["log2_universe_exact"] = log2_universe.is_exact();
  doc["log2_bound"] = log2_bound.to_string();
  doc["log2_bound_exact"] = log2_bound.is_exact();
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Bounds

BigInt floor_div_log2(const BigInt& n) {
  require(n >= 2, ErrorCode::invalid_argument, "floor_div_log2 needs n >= 2");
  if (is_power_of_two(n)) {
    const std::uint64_t k = floor_log2(n);
    if (k == 0) fail(ErrorCode::invalid_argument, "log2(1) == 0");
    return n / BigInt(static_cast<unsigned long>(k));
  }
  // log2(n) is irrational here, so n/log2(n) is never an integer and interval
  // refinement pins the floor.
  const mpfr_prec_t exact_prec = static_cast<mpfr_prec_t>(
      mpz_sizeinbase(n.get_mpz_t(), 2) + 64);
  mpfr_t x;
  mpfr_init2(x, exact_prec);
  mpfr_set_z(x, n.get_mpz_t(), MPFR_RNDN);  // exact at this precision
  for (mpfr_prec_t prec = 128; prec <= (1 << 20); prec *= 2) {
    mpfr_t lo, hi, qlo, qhi;
    mpfr_inits2(prec, lo, hi, qlo, qhi, static_cast<mpfr_ptr>(nullptr));
    mpfr_log2(lo, x, MPFR_RNDD);
    mpfr_log2(hi, x, MPFR_RNDU);
    mpfr_div(qlo, x, hi, MPFR_RNDD);
    mpfr_div(qhi, x, lo, MPFR_RNDU);
    BigInt flo, fhi;
    mpfr_get_z(flo.get_mpz_t(), qlo, MPFR_RNDD);
    mpfr_get_z(fhi.get_mpz_t(), qhi, MPFR_RNDD);
    mpfr_clears(lo, hi, qlo, qhi, static_cast<mpfr_ptr>(nullptr));
    if (flo == fhi) {
      mpfr_clear(x);
      return flo;
    }
  }
  mpfr_clear(x);
  fail(ErrorCode::internal, "floor(n/log2 n) did not stabilize");
}

Log2Value bound_log2(const BigInt& n, std::uint32_t q) {
  require(q >= 3, ErrorCode::invalid_argument, "need q >= 3");
  require(n > 3, ErrorCode::invalid_argument, "need n > 3");
  if (q < 9) {
    BigRat v(n * n, 24);
    v.canonicalize();
    return exact_log2_value(v);
  }
  const BigInt r = floor_div_log2(n);
  require(r > 3, ErrorCode::invalid_argument,
          "recurrence degenerates: floor(n/log2 n) <= 3");
  Log2Value child = bound_log2(r, q - 6);
  const BigInt root4 = iroot_floor(n, 4);
  const bool exact_root = pow_big(root4, 4) == n;
  if (exact_root && child.is_exact()) {
    BigRat factor(root4, 2);
    BigRat v = factor * *child.exact;
    v.canonicalize();
    return exact_log2_value(v);
  }
  Real factor = Real(n).root(4) / Real(std::uint64_t(2));
  return Log2Value{std::nullopt, factor * child.approx};
}

Log2Value bound_log2_simple(const BigInt& n, std::uint32_t q, std::uint32_t t,
                            bool allow_general) {
  require(q >= t && t >= 2, ErrorCode::invalid_argument,
          "need q >= t >= 2");
  require(n >= 2, ErrorCode::invalid_argument, "need n >= 2");
  if (is_power_of_two(n)) {
    const std::uint64_t m = floor_log2(n);
    BigRat v(pow_big(BigInt(q), m), pow_big(BigInt(t - 1), m) * 4);
    v.canonicalize();
    return exact_log2_value(v);
  }
  require(allow_general, ErrorCode::invalid_argument,
          "n must be a power of two unless general n is allowed");
  // n^(log2(q/(t-1))) / 4 at working precision.
  Real ratio = Real(std::uint64_t(q)) / Real(std::uint64_t(t - 1));
  Real exponent = Real(n).log2() * ratio.log2();
  return Log2Value{std::nullopt, exponent.exp2() / Real(std::uint64_t(4))};
}

}  // namespace rlc
