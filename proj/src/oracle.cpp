#include "oracle.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "rng.hpp"
#include "subsets.hpp"
#include "verify.hpp"

namespace rlc {

TripleColoring materialize(const Lifted& coloring, std::uint64_t limit) {
  require(fits_u64(coloring.universe_size()) &&
              to_u64(coloring.universe_size()) <= limit,
          ErrorCode::universe_too_large,
          "universe exceeds the materialization limit");
  const std::uint64_t n = to_u64(coloring.universe_size());
  require(n >= 3, ErrorCode::invalid_argument,
          "cannot materialize a universe without triples");
  std::vector<ColorId> colors(n * (n - 1) / 2 * (n - 2) / 3);
  for (std::uint64_t i = 0; i + 2 < n; ++i)
    for (std::uint64_t j = i + 1; j + 1 < n; ++j)
      for (std::uint64_t k = j + 1; k < n; ++k)
        colors[TripleColoring::rank(i, j, k)] = coloring.color_sorted(
            BigInt(static_cast<unsigned long>(i)),
            BigInt(static_cast<unsigned long>(j)),
            BigInt(static_cast<unsigned long>(k)));
  return TripleColoring(n, coloring.num_colors(), std::move(colors));
}

namespace {

struct Searcher {
  std::uint32_t q, t, n;
  int arity;
  std::uint64_t budget;
  std::uint64_t nodes = 0;

  std::vector<std::vector<std::uint64_t>> tuple_members;  // tuple -> vertices
  std::vector<std::vector<std::uint64_t>> subset_tuples;  // subset -> tuple ids
  std::vector<std::vector<std::uint64_t>> completes_at;   // order pos -> subsets
  std::vector<std::uint64_t> order;                       // pos -> tuple id
  std::vector<std::int32_t> colors;                       // tuple id -> color
  std::vector<std::uint32_t> seen_stamp;
  std::uint32_t stamp = 0;

  bool subset_ok(std::uint64_t subset_id) {
    ++stamp;
    std::uint32_t found = 0;
    for (std::uint64_t tid : subset_tuples[subset_id]) {
      const std::int32_t c = colors[tid];
      if (c < 0) return true;  // not fully colored yet; nothing to check
      if (seen_stamp[c] != stamp) {
        seen_stamp[c] = stamp;
        ++found;
      }
    }
    return found >= t;
  }

  bool dfs(std::size_t pos, std::uint32_t used) {
    if (pos == order.size()) return true;
    const std::uint64_t tid = order[pos];
    const std::uint32_t limit = std::min(q - 1, used);  // first-use canonical
    for (std::uint32_t c = 0; c <= limit; ++c) {
      if (++nodes > budget)
        fail(ErrorCode::budget_exceeded, "search budget exhausted");
      colors[tid] = static_cast<std::int32_t>(c);
      bool ok = true;
      for (std::uint64_t sid : completes_at[pos]) {
        if (!subset_ok(sid)) {
          ok = false;
          break;
        }
      }
      if (ok && dfs(pos + 1, std::max(used, c + 1))) return true;
    }
    colors[tid] = -1;
    return false;
  }
};

}  // namespace

SearchResult brute_force_search(std::uint64_t universe, std::uint32_t q,
                                std::uint32_t t, std::uint32_t n, int arity,
                                std::uint64_t budget, std::uint64_t order_seed) {
  require(arity == 2 || arity == 3, ErrorCode::invalid_argument,
          "arity must be 2 or 3");
  require(q >= 1 && t >= 1, ErrorCode::invalid_argument, "need q, t >= 1");
  require(n >= static_cast<std::uint32_t>(arity), ErrorCode::invalid_argument,
          "subset size below tuple arity");
  require(universe >= n, ErrorCode::infeasible_spec,
          "universe smaller than the subset size");
  require(universe <= 64, ErrorCode::universe_too_large,
          "exhaustive search is a micro-scale tool");

  Searcher s;
  s.q = q;
  s.t = t;
  s.n = n;
  s.arity = arity;
  s.budget = budget;
  s.seen_stamp.assign(q, 0);

  KSubsetIterator tuples(universe, static_cast<std::uint32_t>(arity));
  if (!tuples.done()) {
    do {
      s.tuple_members.push_back(tuples.current());
    } while (tuples.next());
  }
  const std::uint64_t tuple_count = s.tuple_members.size();

  // tuple id by rank, for membership lookups
  auto tuple_rank = [&](const std::vector<std::uint64_t>& v) {
    return arity == 2 ? PairColoring::rank(v[0], v[1])
                      : TripleColoring::rank(v[0], v[1], v[2]);
  };
  std::vector<std::uint64_t> rank_to_id(tuple_count);
  for (std::uint64_t id = 0; id < tuple_count; ++id)
    rank_to_id[tuple_rank(s.tuple_members[id])] = id;

  KSubsetIterator subsets(universe, n);
  if (!subsets.done()) {
    do {
      const auto& sub = subsets.current();
      std::vector<std::uint64_t> tids;
      KSubsetIterator inner(n, static_cast<std::uint32_t>(arity));
      do {
        std::vector<std::uint64_t> tuple;
        for (std::uint64_t pos : inner.current()) tuple.push_back(sub[pos]);
        tids.push_back(rank_to_id[tuple_rank(tuple)]);
      } while (inner.next());
      s.subset_tuples.push_back(std::move(tids));
    } while (subsets.next());
  }

  s.order.resize(tuple_count);
  std::iota(s.order.begin(), s.order.end(), 0);
  if (order_seed != 0) {
    SplitMix64 rng(order_seed);
    for (std::uint64_t i = tuple_count; i > 1; --i)
      std::swap(s.order[i - 1], s.order[rng.next_below(i)]);
  }
  std::vector<std::uint64_t> pos_of(tuple_count);
  for (std::uint64_t pos = 0; pos < tuple_count; ++pos)
    pos_of[s.order[pos]] = pos;

  // A subset becomes checkable when the last of its tuples is colored.
  s.completes_at.assign(tuple_count, {});
  for (std::uint64_t sid = 0; sid < s.subset_tuples.size(); ++sid) {
    std::uint64_t last = 0;
    for (std::uint64_t tid : s.subset_tuples[sid])
      last = std::max(last, pos_of[tid]);
    s.completes_at[last].push_back(sid);
  }

  s.colors.assign(tuple_count, -1);
  SearchResult result;
  result.sat = s.dfs(0, 0);
  result.nodes = s.nodes;
  if (result.sat) {
    std::vector<ColorId> table(tuple_count);
    for (std::uint64_t id = 0; id < tuple_count; ++id)
      table[tuple_rank(s.tuple_members[id])] =
          static_cast<ColorId>(s.colors[id]);
    if (arity == 2) {
      PairColoring witness(universe, q, std::move(table));
      VerifyOptions opt;
      opt.budget = UINT64_MAX;
      if (t >= 2)
        require(verify_pair_exhaustive(witness, n, t, opt).pass(),
                ErrorCode::internal, "witness failed re-verification");
      result.pair = std::move(witness);
    } else {
      TripleColoring witness(universe, q, std::move(table));
      VerifyOptions opt;
      opt.budget = UINT64_MAX;
      if (t >= 2) {
        LiftedPtr wrapped = Lifted::make_explicit(witness);
        require(verify_exhaustive(*wrapped, n, t, opt).pass(),
                ErrorCode::internal, "witness failed re-verification");
      }
      result.triple = std::move(witness);
    }
  }
  return result;
}

ExactFResult exact_f_micro(std::uint32_t q, std::uint32_t t, std::uint32_t n,
                           std::uint64_t n_max, std::uint64_t budget) {
  require(n >= 3, ErrorCode::invalid_argument, "need n >= 3");
  require(n_max >= n, ErrorCode::invalid_argument, "need N_max >= n");
  ExactFResult out;
  for (std::uint64_t universe = n; universe <= n_max; ++universe) {
    out.last_checked = universe;
    SearchResult r = brute_force_search(universe, q, t, n, 3, budget);
    if (!r.sat) {
      out.capped = false;
      return out;
    }
    out.best = universe;
    out.witness = std::move(r.triple);
  }
  out.capped = true;
  return out;
}

}  // namespace rlc
