#include "verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <memory>
#include <thread>

#include "lifted_eval.hpp"
#include "rng.hpp"
#include "stepup.hpp"
#include "subsets.hpp"

namespace rlc {

namespace {

// ---------------------------------------------------------------------------
// Exhaustive engine

struct WorkerOut {
  std::uint32_t min_colors = UINT32_MAX;
  std::uint64_t subsets = 0;
  std::optional<std::uint64_t> cex_rank;
  std::vector<std::uint64_t> cex_indices;
};

// Distinct colors over every tuple of the index subset; exact count.
template <int Arity, class ColorIdx>
std::uint32_t count_distinct(const std::vector<std::uint64_t>& subset,
                             std::vector<std::uint32_t>& stamps,
                             std::uint32_t& stamp, ColorIdx&& color_at) {
  ++stamp;
  std::uint32_t found = 0;
  const std::size_t m = subset.size();
  if constexpr (Arity == 2) {
    for (std::size_t a = 0; a + 1 < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b) {
        const ColorId c = color_at(subset[a], subset[b], subset[b]);
        if (stamps[c] != stamp) {
          stamps[c] = stamp;
          ++found;
        }
      }
  } else {
    for (std::size_t a = 0; a + 2 < m; ++a)
      for (std::size_t b = a + 1; b + 1 < m; ++b)
        for (std::size_t c = b + 1; c < m; ++c) {
          const ColorId col = color_at(subset[a], subset[b], subset[c]);
          if (stamps[col] != stamp) {
            stamps[col] = stamp;
            ++found;
          }
        }
  }
  return found;
}

template <int Arity, class ColorIdx>
WorkerOut exhaust_worker(std::uint64_t count, std::uint32_t n, std::uint32_t t,
                         std::uint32_t q, std::uint32_t worker_id,
                         std::uint32_t workers, ColorIdx&& color_at) {
  WorkerOut out;
  std::vector<std::uint32_t> stamps(q, 0);
  std::uint32_t stamp = 0;
  KSubsetIterator it(count, n);
  if (it.done()) return out;
  std::uint64_t rank = 0;
  for (std::uint32_t skip = 0; skip < worker_id; ++skip) {
    if (!it.next()) return out;
    ++rank;
  }
  for (;;) {
    const std::uint32_t colors =
        count_distinct<Arity>(it.current(), stamps, stamp, color_at);
    ++out.subsets;
    out.min_colors = std::min(out.min_colors, colors);
    if (colors < t && !out.cex_rank) {
      out.cex_rank = rank;
      out.cex_indices = it.current();
    }
    bool alive = true;
    for (std::uint32_t step = 0; step < workers && alive; ++step) {
      alive = it.next();
      ++rank;
    }
    if (!alive) break;
  }
  return out;
}

template <int Arity, class ColorIdx>
VerificationReport run_exhaustive(std::uint64_t count, std::uint32_t n,
                                  std::uint32_t t, std::uint32_t q,
                                  const VerifyOptions& opt, ColorIdx&& color_at,
                                  const std::vector<BigInt>* vertex_names) {
  const std::uint64_t per_subset =
      Arity == 2 ? std::uint64_t(n) * (n - 1) / 2
                 : std::uint64_t(n) * (n - 1) * (n - 2) / 6;
  require(binomial(count, n) * BigInt(static_cast<unsigned long>(per_subset)) <=
              BigInt(static_cast<unsigned long>(opt.budget)),
          ErrorCode::budget_exceeded,
          "exhaustive check exceeds the evaluation budget");

  const std::uint32_t workers =
      std::max<std::uint32_t>(1, std::min<std::uint32_t>(opt.workers, 64));
  std::vector<WorkerOut> outs(workers);
  if (workers == 1) {
    outs[0] = exhaust_worker<Arity>(count, n, t, q, 0, 1, color_at);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint32_t wid = 0; wid < workers; ++wid)
      pool.emplace_back([&, wid] {
        outs[wid] = exhaust_worker<Arity>(count, n, t, q, wid, workers,
                                          color_at);
      });
    for (auto& th : pool) th.join();
  }

  WorkerOut merged;
  merged.min_colors = 0;
  for (const auto& o : outs) {
    merged.subsets += o.subsets;
    if (o.min_colors != UINT32_MAX)
      merged.min_colors = merged.min_colors == 0
                              ? o.min_colors
                              : std::min(merged.min_colors, o.min_colors);
    if (o.cex_rank && (!merged.cex_rank || *o.cex_rank < *merged.cex_rank)) {
      merged.cex_rank = o.cex_rank;
      merged.cex_indices = o.cex_indices;
    }
  }

  VerificationReport report;
  report.mode = VerificationReport::Mode::exhaustive;
  report.subsets_checked = merged.subsets;
  report.evaluations = merged.subsets * per_subset;
  report.required_colors = t;
  report.min_colors_seen = merged.min_colors;
  if (merged.cex_rank) {
    std::vector<BigInt> cex;
    cex.reserve(merged.cex_indices.size());
    for (std::uint64_t idx : merged.cex_indices)
      cex.push_back(vertex_names
                        ? (*vertex_names)[idx]
                        : BigInt(static_cast<unsigned long>(idx)));
    report.counterexample = std::move(cex);
  }
  return report;
}

void validate_check(std::uint32_t n, std::uint32_t t, std::uint32_t q,
                    int arity) {
  require(t >= 2, ErrorCode::infeasible_spec, "need t >= 2");
  require(n >= static_cast<std::uint32_t>(arity), ErrorCode::subset_too_small,
          "subset size below tuple arity");
  require(q >= t, ErrorCode::infeasible_spec,
          "palette smaller than the required color count");
  require(BigInt(t) <= binomial(std::uint64_t(n), std::uint64_t(arity)),
          ErrorCode::infeasible_spec,
          "a subset of that size cannot show that many colors");
}

std::vector<std::uint64_t> to_u64_list(const std::vector<BigInt>& xs) {
  std::vector<std::uint64_t> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(to_u64(x));
  return out;
}

void validate_vertex_list(const std::vector<BigInt>& list,
                          const BigInt& universe) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    require(sgn(list[i]) >= 0 && list[i] < universe,
            ErrorCode::out_of_universe, "vertex outside the universe");
    if (i > 0)
      require(list[i - 1] < list[i], ErrorCode::invalid_argument,
              "vertices must be strictly increasing");
  }
}

// ---------------------------------------------------------------------------
// Sampling

std::vector<BigInt> sample_subset(const BigInt& universe, std::uint32_t n,
                                  std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<BigInt> out;
  out.reserve(n);
  while (out.size() < n) {
    BigInt v = rng.next_below_big(universe);
    if (std::find(out.begin(), out.end(), v) == out.end())
      out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <class CheckSubset>
VerificationReport run_sampled(const BigInt& universe, std::uint32_t n,
                               std::uint32_t t, std::uint32_t q,
                               std::uint64_t samples, std::uint64_t seed,
                               std::uint64_t per_subset,
                               const VerifyOptions& opt,
                               CheckSubset&& colors_of) {
  require(samples >= 1, ErrorCode::invalid_argument, "need samples >= 1");
  require(BigInt(static_cast<unsigned long>(samples)) *
                  BigInt(static_cast<unsigned long>(per_subset)) <=
              BigInt(static_cast<unsigned long>(opt.budget)),
          ErrorCode::budget_exceeded,
          "sampled check exceeds the evaluation budget");
  require(universe >= n, ErrorCode::infeasible_spec,
          "cannot sample a subset larger than the universe");

  const std::uint32_t workers =
      std::max<std::uint32_t>(1, std::min<std::uint32_t>(opt.workers, 64));

  struct SampleOut {
    std::uint32_t min_colors = UINT32_MAX;
    std::optional<std::uint64_t> cex_sample;
    std::vector<BigInt> cex;
  };
  std::vector<SampleOut> outs(workers);

  auto run = [&](std::uint32_t wid) {
    SampleOut& out = outs[wid];
    for (std::uint64_t s = wid; s < samples; s += workers) {
      std::vector<BigInt> subset = sample_subset(universe, n, seed_stream(seed, s));
      const std::uint32_t colors = colors_of(subset);
      out.min_colors = std::min(out.min_colors, colors);
      if (colors < t && !out.cex_sample) {
        out.cex_sample = s;
        out.cex = subset;
      }
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (std::uint32_t wid = 0; wid < workers; ++wid)
      pool.emplace_back(run, wid);
    for (auto& th : pool) th.join();
  }

  VerificationReport report;
  report.mode = VerificationReport::Mode::sampled;
  report.subsets_checked = samples;
  report.evaluations = samples * per_subset;
  report.required_colors = t;
  report.seed = seed;
  std::uint32_t min_colors = UINT32_MAX;
  std::optional<std::uint64_t> best_sample;
  std::vector<BigInt> best;
  for (auto& o : outs) {
    min_colors = std::min(min_colors, o.min_colors);
    if (o.cex_sample && (!best_sample || *o.cex_sample < *best_sample)) {
      best_sample = o.cex_sample;
      best = std::move(o.cex);
    }
  }
  report.min_colors_seen = min_colors == UINT32_MAX ? 0 : min_colors;
  if (best_sample) report.counterexample = std::move(best);
  return report;
}

}  // namespace

// ---------------------------------------------------------------------------
// min_colors

std::uint32_t min_colors(const Lifted& coloring,
                         const std::vector<BigInt>& subset) {
  require(subset.size() >= 3, ErrorCode::subset_too_small,
          "need at least 3 vertices");
  validate_vertex_list(subset, coloring.universe_size());
  std::vector<std::uint32_t> stamps(coloring.num_colors(), 0);
  std::uint32_t stamp = 0;
  if (fits_u64(coloring.universe_size())) {
    TreeEvalU64 eval(coloring);
    auto verts = to_u64_list(subset);
    auto color_at = [&](std::uint64_t a, std::uint64_t b, std::uint64_t c) {
      return eval.color(verts[a], verts[b], verts[c]);
    };
    std::vector<std::uint64_t> idx(subset.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return count_distinct<3>(idx, stamps, stamp, color_at);
  }
  auto color_at = [&](std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return coloring.color_sorted(subset[a], subset[b], subset[c]);
  };
  std::vector<std::uint64_t> idx(subset.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return count_distinct<3>(idx, stamps, stamp, color_at);
}

std::uint32_t min_colors(const TripleColoring& coloring,
                         const std::vector<BigInt>& subset) {
  require(subset.size() >= 3, ErrorCode::subset_too_small,
          "need at least 3 vertices");
  validate_vertex_list(subset,
                       BigInt(static_cast<unsigned long>(coloring.num_vertices())));
  std::vector<std::uint32_t> stamps(coloring.num_colors(), 0);
  std::uint32_t stamp = 0;
  auto verts = to_u64_list(subset);
  auto color_at = [&](std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return coloring.colors()[TripleColoring::rank(verts[a], verts[b], verts[c])];
  };
  std::vector<std::uint64_t> idx(subset.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return count_distinct<3>(idx, stamps, stamp, color_at);
}

// ---------------------------------------------------------------------------
// Exhaustive entry points

VerificationReport verify_exhaustive(const Lifted& coloring, std::uint32_t n,
                                     std::uint32_t t,
                                     const VerifyOptions& opt) {
  validate_check(n, t, coloring.num_colors(), 3);
  const BigInt& universe = coloring.universe_size();
  require(universe >= n, ErrorCode::infeasible_spec,
          "universe smaller than the subset size");
  const std::uint64_t per_subset = std::uint64_t(n) * (n - 1) * (n - 2) / 6;
  require(binomial(universe, n) * BigInt(static_cast<unsigned long>(per_subset)) <=
              BigInt(static_cast<unsigned long>(opt.budget)),
          ErrorCode::budget_exceeded,
          "exhaustive check exceeds the evaluation budget");
  const std::uint64_t count = to_u64(universe);
  TreeEvalU64 eval(coloring);
  auto color_at = [&](std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return eval.color(a, b, c);
  };
  return run_exhaustive<3>(count, n, t, coloring.num_colors(), opt, color_at,
                           nullptr);
}

VerificationReport verify_exhaustive(const Lifted& coloring,
                                     const std::vector<BigInt>& universe_subset,
                                     std::uint32_t n, std::uint32_t t,
                                     const VerifyOptions& opt) {
  validate_check(n, t, coloring.num_colors(), 3);
  validate_vertex_list(universe_subset, coloring.universe_size());
  require(universe_subset.size() >= n, ErrorCode::infeasible_spec,
          "vertex list smaller than the subset size");
  const std::uint64_t count = universe_subset.size();
  const bool small = fits_u64(coloring.universe_size());
  if (small) {
    TreeEvalU64 eval(coloring);
    auto verts = to_u64_list(universe_subset);
    auto color_at = [&](std::uint64_t a, std::uint64_t b, std::uint64_t c) {
      return eval.color(verts[a], verts[b], verts[c]);
    };
    return run_exhaustive<3>(count, n, t, coloring.num_colors(), opt, color_at,
                             &universe_subset);
  }
  auto color_at = [&](std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return coloring.color_sorted(universe_subset[a], universe_subset[b],
                                 universe_subset[c]);
  };
  return run_exhaustive<3>(count, n, t, coloring.num_colors(), opt, color_at,
                           &universe_subset);
}

VerificationReport verify_pair_exhaustive(const PairColoring& coloring,
                                          std::uint32_t m, std::uint32_t t,
                                          const VerifyOptions& opt) {
  validate_check(m, t, coloring.num_colors(), 2);
  require(coloring.num_vertices() >= m, ErrorCode::infeasible_spec,
          "universe smaller than the subset size");
  auto color_at = [&](std::uint64_t a, std::uint64_t b, std::uint64_t) {
    return coloring.colors()[PairColoring::rank(a, b)];
  };
  return run_exhaustive<2>(coloring.num_vertices(), m, t,
                           coloring.num_colors(), opt, color_at, nullptr);
}

// ---------------------------------------------------------------------------
// Sampled entry points

VerificationReport verify_sampled(const Lifted& coloring, std::uint32_t n,
                                  std::uint32_t t, std::uint64_t samples,
                                  std::uint64_t seed,
                                  const VerifyOptions& opt) {
  validate_check(n, t, coloring.num_colors(), 3);
  const std::uint64_t per_subset = std::uint64_t(n) * (n - 1) * (n - 2) / 6;
  const bool small = fits_u64(coloring.universe_size());
  std::optional<TreeEvalU64> eval;
  if (small) eval.emplace(coloring);
  std::vector<std::uint32_t> stamps;
  auto colors_of = [&](const std::vector<BigInt>& subset) {
    thread_local std::vector<std::uint32_t> tl_stamps;
    thread_local std::uint32_t tl_stamp = 0;
    if (tl_stamps.size() < coloring.num_colors()) {
      tl_stamps.assign(coloring.num_colors(), 0);
      tl_stamp = 0;
    }
    std::vector<std::uint64_t> idx(subset.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    if (small) {
      auto verts = to_u64_list(subset);
      auto color_at = [&](std::uint64_t a, std::uint64_t b, std::uint64_t c) {
        return eval->color(verts[a], verts[b], verts[c]);
      };
      return count_distinct<3>(idx, tl_stamps, tl_stamp, color_at);
    }
    auto color_at = [&](std::uint64_t a, std::uint64_t b, std::uint64_t c) {
      return coloring.color_sorted(subset[a], subset[b], subset[c]);
    };
    return count_distinct<3>(idx, tl_stamps, tl_stamp, color_at);
  };
  return run_sampled(coloring.universe_size(), n, t, coloring.num_colors(),
                     samples, seed, per_subset, opt, colors_of);
}

VerificationReport verify_pair_sampled(const PairColoring& coloring,
                                       std::uint32_t m, std::uint32_t t,
                                       std::uint64_t samples,
                                       std::uint64_t seed,
                                       const VerifyOptions& opt) {
  validate_check(m, t, coloring.num_colors(), 2);
  const std::uint64_t per_subset = std::uint64_t(m) * (m - 1) / 2;
  auto colors_of = [&](const std::vector<BigInt>& subset) {
    thread_local std::vector<std::uint32_t> tl_stamps;
    thread_local std::uint32_t tl_stamp = 0;
    if (tl_stamps.size() < coloring.num_colors()) {
      tl_stamps.assign(coloring.num_colors(), 0);
      tl_stamp = 0;
    }
    auto verts = to_u64_list(subset);
    auto color_at = [&](std::uint64_t a, std::uint64_t b, std::uint64_t) {
      return coloring.colors()[PairColoring::rank(verts[a], verts[b])];
    };
    std::vector<std::uint64_t> idx(subset.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return count_distinct<2>(idx, tl_stamps, tl_stamp, color_at);
  };
  return run_sampled(BigInt(static_cast<unsigned long>(coloring.num_vertices())),
                     m, t, coloring.num_colors(), samples, seed, per_subset,
                     opt, colors_of);
}

// ---------------------------------------------------------------------------
// Chain

Chain::Chain(std::vector<VertexCode> vertices) : vertices_(std::move(vertices)) {
  require(vertices_.size() >= 2, ErrorCode::chain_too_short,
          "a chain needs at least 2 vertices");
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    require(vertices_[i - 1].radix() == vertices_[i].radix() &&
                vertices_[i - 1].num_digits() == vertices_[i].num_digits(),
            ErrorCode::invalid_argument,
            "chain vertices must share one digit universe");
    require(vertices_[i - 1] < vertices_[i], ErrorCode::invalid_argument,
            "chain vertices must be strictly increasing");
  }
  deltas_.reserve(vertices_.size() - 1);
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i)
    deltas_.push_back(delta(vertices_[i], vertices_[i + 1]));
}

std::size_t Chain::delta_at(std::size_t i) const {
  require(i + 1 < vertices_.size(), ErrorCode::invalid_argument,
          "delta index out of range");
  return deltas_[i];
}

// ---------------------------------------------------------------------------
// Stepdown extraction

StepdownResult stepdown_extract(const Chain& chain, const PairColoring& base) {
  require(chain.vertex(0).radix() == 2, ErrorCode::invalid_argument,
          "stepdown extraction needs a binary universe");
  require(chain.vertex(0).num_digits() == base.num_vertices(),
          ErrorCode::invalid_argument,
          "code width must match the base universe");
  const std::size_t len = chain.size();
  require((len & (len - 1)) == 0, ErrorCode::not_power_of_two,
          "chain length must be a power of two");

  StepdownResult result;

  // Returns the realized (delta value, position) set for the window, keyed
  // positions into the whole chain; windows are inclusive.
  auto rec = [&](auto&& self, std::size_t lo,
                 std::size_t hi) -> std::vector<std::pair<std::size_t, std::size_t>> {
    if (hi - lo + 1 == 2) return {{chain.delta_at(lo), lo}};
    std::size_t w = lo;
    for (std::size_t i = lo + 1; i <= hi - 1; ++i)
      if (chain.delta_at(i) > chain.delta_at(w)) w = i;
    const std::size_t s_size = w - lo + 1;
    const std::size_t t_size = hi - w;
    const bool into_s = s_size >= t_size;
    std::vector<std::pair<std::size_t, std::size_t>> inner;
    if (into_s && s_size >= 2)
      inner = self(self, lo, w);
    else if (!into_s)
      inner = self(self, w + 1, hi);
    const std::size_t dw = chain.delta_at(w);
    for (const auto& [dv, pos] : inner) {
      const auto key = std::minmax(dw, dv);
      const StepdownWitness wit = into_s
                                      ? StepdownWitness{pos, pos + 1, w + 1}
                                      : StepdownWitness{w, pos, pos + 1};
      result.witnesses.emplace(std::make_pair(key.first, key.second), wit);
    }
    inner.emplace_back(dw, w);
    return inner;
  };

  auto entries = rec(rec, 0, len - 1);
  for (const auto& [dv, pos] : entries) result.delta_set.push_back(dv);
  std::sort(result.delta_set.begin(), result.delta_set.end());
  require(std::adjacent_find(result.delta_set.begin(), result.delta_set.end()) ==
              result.delta_set.end(),
          ErrorCode::internal, "extracted delta values must be distinct");

  const std::size_t m = std::bit_width(len) - 1;
  require(result.delta_set.size() >= m, ErrorCode::internal,
          "extracted fewer deltas than guaranteed");
  const std::size_t pairs =
      result.delta_set.size() * (result.delta_set.size() - 1) / 2;
  require(result.witnesses.size() == pairs, ErrorCode::internal,
          "missing witnesses for some delta pairs");
  for (const auto& [key, wit] : result.witnesses) {
    const ColorId got = chi_binary(base, chain.vertex(wit.a),
                                   chain.vertex(wit.b), chain.vertex(wit.c));
    require(got == base.color(key.first, key.second), ErrorCode::internal,
            "stepdown witness failed evaluation");
  }
  return result;
}

// ---------------------------------------------------------------------------
// Escapes and delta chains

std::optional<std::size_t> equal_delta_escape(const Chain& chain,
                                              std::size_t r) {
  require(r >= 1, ErrorCode::invalid_argument, "need r >= 1");
  require(chain.size() > r, ErrorCode::chain_too_short,
          "need chain length > r");
  for (std::size_t w = 1; w + 1 <= r; ++w) {
    const std::size_t prefix = delta(chain.vertex(0), chain.vertex(w));
    if (prefix > chain.delta_at(w)) return w;
  }
  return std::nullopt;
}

ChainExtractResult decreasing_chain_extract(const Chain& chain, std::size_t r,
                                            std::size_t s, bool mirrored) {
  require(r >= 2 && s >= 2, ErrorCode::invalid_argument,
          "need r >= 2 and s >= 2");
  require(chain.size() >= s * r, ErrorCode::chain_too_short,
          "need chain length >= s*r");
  const std::size_t len = chain.size();
  const auto orig = [&](std::size_t p) { return mirrored ? len - 1 - p : p; };
  const auto vert = [&](std::size_t p) -> const VertexCode& {
    return chain.vertex(orig(p));
  };
  const auto d_between = [&](std::size_t p, std::size_t q) {
    return delta(vert(p), vert(q));
  };
  const auto d_cons = [&](std::size_t p) {
    return mirrored ? chain.delta_at(len - 2 - p) : chain.delta_at(p);
  };

  std::vector<std::size_t> ws;
  std::size_t anchor = 0;
  for (std::size_t k = 1; k + 1 <= s; ++k) {
    const std::size_t lo = anchor + 1;
    const std::size_t hi = (k == 1) ? r - 1 : anchor + r;
    std::optional<std::size_t> found;
    for (std::size_t w = lo; w <= hi; ++w) {
      if (d_between(anchor, w) > d_cons(w)) {
        found = w;
        break;
      }
    }
    if (!found) {
      ChainExtractFailure failure;
      failure.reason = ChainExtractFailure::Reason::no_escape;
      failure.block_begin = std::min(orig(anchor), orig(hi + 1));
      failure.block_end = std::max(orig(anchor), orig(hi + 1));
      failure.deltas_all_equal = true;
      for (std::size_t p = anchor; p <= hi; ++p)
        if (d_cons(p) != d_cons(anchor)) {
          failure.deltas_all_equal = false;
          break;
        }
      return failure;
    }
    ws.push_back(*found);
    anchor = *found;
  }

  // Validate the strictly decreasing delta display by direct recomputation.
  std::vector<std::size_t> dseq;
  dseq.push_back(d_between(0, ws[0]));
  for (std::size_t k = 1; k < ws.size(); ++k)
    dseq.push_back(d_between(ws[k - 1], ws[k]));
  dseq.push_back(d_cons(ws.back()));
  for (std::size_t k = 1; k < dseq.size(); ++k) {
    if (!(dseq[k - 1] > dseq[k])) {
      ChainExtractFailure failure;
      failure.reason = ChainExtractFailure::Reason::not_strict;
      const std::size_t a = k == 1 ? 0 : ws[k - 2];
      const std::size_t b = k < ws.size() ? ws[k] : ws.back() + 1;
      failure.block_begin = std::min(orig(a), orig(b));
      failure.block_end = std::max(orig(a), orig(b));
      failure.deltas_all_equal = false;
      return failure;
    }
  }

  ChainExtractSuccess ok;
  for (std::size_t w : ws) ok.escape_positions.push_back(orig(w));
  ok.selected_vertices.push_back(orig(0));
  for (std::size_t w : ws) ok.selected_vertices.push_back(orig(w));
  ok.selected_vertices.push_back(orig(ws.back() + 1));
  std::sort(ok.selected_vertices.begin(), ok.selected_vertices.end());
  return ok;
}

// ---------------------------------------------------------------------------
// Property suites

namespace {

struct DigitUniverse {
  std::uint64_t radix = 0;
  std::uint32_t width = 0;
  std::vector<std::uint64_t> pow;
  std::uint64_t size = 0;

  std::uint32_t delta(std::uint64_t u, std::uint64_t v) const {
    for (std::uint32_t i = width; i-- > 0;) {
      if (u / pow[i] != v / pow[i]) return i;
    }
    fail(ErrorCode::internal, "delta of equal values");
  }
  std::uint64_t digit(std::uint64_t u, std::uint32_t i) const {
    return (u / pow[i]) % radix;
  }
};

DigitUniverse make_digit_universe(const BigInt& radix, std::size_t width) {
  require(radix >= 2, ErrorCode::invalid_argument, "radix must be >= 2");
  require(width >= 1, ErrorCode::invalid_argument, "need at least one digit");
  BigInt size = pow_big(radix, static_cast<unsigned long>(width));
  require(fits_u64(size), ErrorCode::universe_too_large,
          "digit universe exceeds 64 bits; use sampled mode on smaller views");
  DigitUniverse u;
  u.radix = to_u64(radix);
  u.width = static_cast<std::uint32_t>(width);
  u.size = to_u64(size);
  u.pow.resize(u.width);
  std::uint64_t p = 1;
  for (std::uint32_t i = 0; i < u.width; ++i) {
    u.pow[i] = p;
    if (i + 1 < u.width) p *= u.radix;
  }
  return u;
}

std::vector<BigInt> tuple_to_big(std::initializer_list<std::uint64_t> xs) {
  std::vector<BigInt> out;
  for (auto x : xs) out.push_back(BigInt(static_cast<unsigned long>(x)));
  return out;
}

}  // namespace

VerificationReport property_suite(PropertyKind kind,
                                  const PropertyParams& params) {
  require(params.budget >= 1, ErrorCode::invalid_argument, "budget must be positive");
  DigitUniverse u = make_digit_universe(params.radix, params.num_digits);

  VerificationReport report;
  report.mode = params.exhaustive ? VerificationReport::Mode::exhaustive
                                  : VerificationReport::Mode::sampled;
  if (!params.exhaustive) report.seed = params.seed;

  auto check_triple = [&](std::uint64_t a, std::uint64_t b,
                          std::uint64_t c) -> bool {
    const std::uint32_t d1 = u.delta(a, b);
    const std::uint32_t d2 = u.delta(b, c);
    if (kind == PropertyKind::I) return d1 != d2;
    // Property III: vacuous unless the deltas collide.
    if (d1 != d2) return true;
    return u.digit(a, d1) < u.digit(b, d1) && u.digit(b, d1) < u.digit(c, d1);
  };

  if (kind == PropertyKind::II) {
    require(!params.exhaustive, ErrorCode::invalid_argument,
            "the chain property is checked by sampling");
    require(params.chain_length >= 2, ErrorCode::invalid_argument,
            "chains need at least 2 vertices");
    require(u.size >= params.chain_length, ErrorCode::invalid_argument,
            "universe smaller than the chain length");
    require(params.samples <= params.budget, ErrorCode::budget_exceeded,
            "sample count exceeds the budget");
    std::vector<std::uint64_t> chain;
    for (std::uint64_t s = 0; s < params.samples; ++s) {
      SplitMix64 rng(seed_stream(params.seed, s));
      const std::size_t len =
          2 + rng.next_below(static_cast<std::uint64_t>(params.chain_length - 1));
      chain.clear();
      while (chain.size() < len) {
        std::uint64_t v = rng.next_below(u.size);
        if (std::find(chain.begin(), chain.end(), v) == chain.end())
          chain.push_back(v);
      }
      std::sort(chain.begin(), chain.end());
      std::uint32_t max_cons = 0;
      for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        max_cons = std::max(max_cons, u.delta(chain[i], chain[i + 1]));
      ++report.subsets_checked;
      report.evaluations += chain.size();
      if (u.delta(chain.front(), chain.back()) != max_cons) {
        std::vector<BigInt> cex;
        for (auto v : chain) cex.push_back(BigInt(static_cast<unsigned long>(v)));
        report.counterexample = std::move(cex);
        return report;
      }
    }
    return report;
  }

  if (params.exhaustive) {
    require(binomial(u.size, 3) <= BigInt(static_cast<unsigned long>(params.budget)),
            ErrorCode::budget_exceeded,
            "triple count exceeds the budget");
    for (std::uint64_t a = 0; a + 2 < u.size; ++a)
      for (std::uint64_t b = a + 1; b + 1 < u.size; ++b)
        for (std::uint64_t c = b + 1; c < u.size; ++c) {
          ++report.subsets_checked;
          ++report.evaluations;
          if (!check_triple(a, b, c)) {
            report.counterexample = tuple_to_big({a, b, c});
            return report;
          }
        }
    return report;
  }

  require(u.size >= 3, ErrorCode::invalid_argument,
          "universe too small for triples");
  require(params.samples <= params.budget, ErrorCode::budget_exceeded,
          "sample count exceeds the budget");
  for (std::uint64_t s = 0; s < params.samples; ++s) {
    SplitMix64 rng(seed_stream(params.seed, s));
    std::uint64_t t[3];
    t[0] = rng.next_below(u.size);
    do { t[1] = rng.next_below(u.size); } while (t[1] == t[0]);
    do { t[2] = rng.next_below(u.size); } while (t[2] == t[0] || t[2] == t[1]);
    std::sort(t, t + 3);
    ++report.subsets_checked;
    ++report.evaluations;
    if (!check_triple(t[0], t[1], t[2])) {
      report.counterexample = tuple_to_big({t[0], t[1], t[2]});
      return report;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

std::string VerificationReport::to_json() const {
  nlohmann::json doc;
  doc["mode"] = mode == Mode::exhaustive ? "exhaustive" : "sampled";
  doc["subsets_checked"] = subsets_checked;
  doc["evaluations"] = evaluations;
  doc["required_colors"] = required_colors;
  doc["min_colors_seen"] = min_colors_seen;
  doc["pass"] = pass();
  if (counterexample) {
    auto arr = nlohmann::json::array();
    for (const auto& v : *counterexample) arr.push_back(v.get_str());
    doc["counterexample"] = arr;
  } else {
    doc["counterexample"] = nullptr;
  }
  if (seed) doc["seed"] = *seed;
  return doc.dump(2) + "\n";
}

}  // namespace rlc
