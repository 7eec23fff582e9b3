#include "basegen.hpp"

#include <algorithm>
#include <vector>

#include "rng.hpp"
#include "subsets.hpp"

namespace rlc {

namespace {

// Largest K with K^root * den <= num.
BigInt floor_root_of_ratio(const BigInt& num, const BigInt& den,
                           unsigned long root) {
  BigInt k = iroot_floor(num / den, root);
  while (pow_big(k + 1, root) * den <= num) ++k;
  while (k > 0 && pow_big(k, root) * den > num) --k;
  return k;
}

// Distinct colors among the tuples of one subset, stopping at `enough`.
template <int Arity, class ColorAt>
std::uint32_t distinct_colors(const std::vector<std::uint64_t>& subset,
                              std::uint32_t enough, std::uint64_t* seen_stamp,
                              std::uint32_t* stamp, ColorAt&& color_at) {
  ++*stamp;
  std::uint32_t found = 0;
  const std::size_t m = subset.size();
  if constexpr (Arity == 2) {
    for (std::size_t a = 0; a + 1 < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b) {
        ColorId c = color_at(subset[a], subset[b], 0);
        if (seen_stamp[c] != *stamp) {
          seen_stamp[c] = *stamp;
          if (++found >= enough) return found;
        }
      }
  } else {
    for (std::size_t a = 0; a + 2 < m; ++a)
      for (std::size_t b = a + 1; b + 1 < m; ++b)
        for (std::size_t c = b + 1; c < m; ++c) {
          ColorId col = color_at(subset[a], subset[b], subset[c]);
          if (seen_stamp[col] != *stamp) {
            seen_stamp[col] = *stamp;
            if (++found >= enough) return found;
          }
        }
  }
  return found;
}

template <int Arity, class ColorAt>
bool every_subset_shows(std::uint64_t n, std::uint32_t subset_size,
                        std::uint32_t t, ColorAt&& color_at,
                        std::uint32_t num_colors) {
  std::vector<std::uint64_t> stamps(num_colors, 0);
  std::uint32_t stamp = 0;
  KSubsetIterator it(n, subset_size);
  if (it.done()) return true;
  do {
    if (distinct_colors<Arity>(it.current(), t, stamps.data(), &stamp,
                               color_at) < t)
      return false;
  } while (it.next());
  return true;
}

void validate(const GenSpec& spec) {
  const std::uint32_t arity = spec.kind == GenSpec::Kind::pair ? 2 : 3;
  require(spec.num_colors >= 1, ErrorCode::infeasible_spec, "need q >= 1");
  require(spec.required_colors >= 1, ErrorCode::infeasible_spec,
          "need t >= 1");
  require(spec.required_colors <= spec.num_colors, ErrorCode::infeasible_spec,
          "required colors exceed the palette");
  require(spec.subset_size >= arity, ErrorCode::infeasible_spec,
          "subset size below tuple arity");
  require(BigInt(spec.required_colors) <=
              binomial(std::uint64_t(spec.subset_size), std::uint64_t(arity)),
          ErrorCode::infeasible_spec,
          "a subset of that size cannot show that many colors");
  if (!spec.allow_vacuous)
    require(spec.universe_size >= spec.subset_size, ErrorCode::infeasible_spec,
            "universe smaller than the subset size (vacuous spec)");
  require(binomial(spec.universe_size, spec.subset_size) <=
              BigInt(static_cast<unsigned long>(spec.budget)),
          ErrorCode::budget_exceeded,
          "subset count exceeds the per-attempt check budget");
}

}  // namespace

GeneratedColoring generate(const GenSpec& spec) {
  validate(spec);
  const std::uint64_t n = spec.universe_size;
  const std::uint32_t q = spec.num_colors;

  for (std::uint64_t attempt = 0; attempt < spec.max_attempts; ++attempt) {
    SplitMix64 rng(seed_stream(spec.seed, attempt));
    if (spec.kind == GenSpec::Kind::pair) {
      std::vector<ColorId> colors(n >= 2 ? n * (n - 1) / 2 : 0);
      for (std::uint64_t i = 0; i + 1 < n; ++i)
        for (std::uint64_t j = i + 1; j < n; ++j)
          colors[PairColoring::rank(i, j)] =
              static_cast<ColorId>(rng.next_below(q));
      PairColoring coloring(n, q, std::move(colors));
      auto color_at = [&](std::uint64_t a, std::uint64_t b, std::uint64_t) {
        return coloring.colors()[PairColoring::rank(a, b)];
      };
      if (every_subset_shows<2>(n, spec.subset_size, spec.required_colors,
                                color_at, q))
        return coloring;
    } else {
      std::vector<ColorId> colors(n >= 3 ? n * (n - 1) / 2 * (n - 2) / 3 : 0);
      for (std::uint64_t i = 0; i + 2 < n; ++i)
        for (std::uint64_t j = i + 1; j + 1 < n; ++j)
          for (std::uint64_t k = j + 1; k < n; ++k)
            colors[TripleColoring::rank(i, j, k)] =
                static_cast<ColorId>(rng.next_below(q));
      TripleColoring coloring(n, q, std::move(colors));
      auto color_at = [&](std::uint64_t a, std::uint64_t b, std::uint64_t c) {
        return coloring.colors()[TripleColoring::rank(a, b, c)];
      };
      if (every_subset_shows<3>(n, spec.subset_size, spec.required_colors,
                                color_at, q))
        return coloring;
    }
  }
  fail(ErrorCode::attempts_exhausted,
       "no valid coloring in " + std::to_string(spec.max_attempts) +
           " attempts; parameters are likely below the probabilistic "
           "threshold");
}

BigInt pair_universe_size(std::uint32_t q, std::uint32_t t, std::uint32_t m) {
  require(q >= t && t >= 2 && m >= 1, ErrorCode::invalid_argument,
          "need q >= t >= 2 and m >= 1");
  require(m <= 4096, ErrorCode::universe_too_large, "m too large");
  const BigInt num = pow_big(BigInt(q), m);
  const BigInt den = pow_big(BigInt(t - 1), m);
  return floor_root_of_ratio(num, den, 4);
}

BigInt lemma31_universe_size(std::uint32_t r) {
  require(r > 3, ErrorCode::invalid_argument, "need r > 3");
  require(r <= 4096, ErrorCode::universe_too_large, "r too large");
  return floor_root_of_ratio(pow2(std::uint64_t(r) * r), BigInt(1), 24);
}

BigInt lemma33_universe_size(std::uint32_t s) {
  require(s > 3, ErrorCode::invalid_argument, "need s > 3");
  require(s <= 1u << 20, ErrorCode::universe_too_large, "s too large");
  return floor_root_of_ratio(pow2(s), BigInt(1), 4);
}

bool FirstMoment::exact_le_bound() const {
  if (sgn(exact) == 0) return true;
  BigRat lhs = exact * exact;
  lhs *= lhs;
  return lhs <= bound_pow4;
}

FirstMoment expected_bad_subsets(std::uint32_t q, std::uint32_t t,
                                 std::uint32_t m, const BigInt& universe_size) {
  require(q >= t && t >= 2 && m >= 1, ErrorCode::invalid_argument,
          "need q >= t >= 2 and m >= 1");
  require(m <= 2048, ErrorCode::universe_too_large, "m too large");
  require(sgn(universe_size) >= 0, ErrorCode::invalid_argument,
          "universe size must be non-negative");

  const std::uint64_t pairs = std::uint64_t(m) * (m - 1) / 2;
  FirstMoment out;
  out.exact = BigRat(binomial(universe_size, m) *
                         binomial(std::uint64_t(q), std::uint64_t(t - 1)) *
                         pow_big(BigInt(t - 1), pairs),
                     pow_big(BigInt(q), pairs));
  out.exact.canonicalize();

  // q^(t-1) * ((t-1)/q)^(m^2/4); rational exactly when 4 | m^2.
  const std::uint64_t m2 = std::uint64_t(m) * m;
  out.bound_pow4 = BigRat(pow_big(BigInt(q), 4ul * (t - 1)) *
                              pow_big(BigInt(t - 1), m2),
                          pow_big(BigInt(q), m2));
  out.bound_pow4.canonicalize();
  if (m2 % 4 == 0) {
    out.bound = BigRat(pow_big(BigInt(q), t - 1) *
                           pow_big(BigInt(t - 1), m2 / 4),
                       pow_big(BigInt(q), m2 / 4));
    out.bound->canonicalize();
    out.bound_real = Real(*out.bound);
  } else {
    out.bound_real = Real(out.bound_pow4).root(4);
  }
  return out;
}

std::uint32_t min_m_for_bound(std::uint32_t q, std::uint32_t t) {
  require(q >= t && t >= 2, ErrorCode::invalid_argument,
          "need q >= t >= 2");
  for (std::uint32_t m = 1; m <= 2048; ++m) {
    FirstMoment fm = expected_bad_subsets(q, t, m, pair_universe_size(q, t, m));
    if (fm.exact < 1) return m;
  }
  fail(ErrorCode::internal, "first moment never dropped below one");
}

}  // namespace rlc
