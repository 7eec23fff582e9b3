#include "rlc/rlc.h"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <string>

#include "basegen.hpp"
#include "coloring.hpp"
#include "lifted.hpp"
#include "oracle.hpp"
#include "stepup.hpp"
#include "tree_io.hpp"
#include "verify.hpp"

struct rlc_pair_coloring {
  rlc::PairColoring impl;
};
struct rlc_triple_coloring {
  rlc::TripleColoring impl;
};
struct rlc_tree {
  rlc::LiftedPtr impl;
};
struct rlc_report {
  rlc::VerificationReport impl;
};

namespace {

thread_local std::string g_last_error;

rlc_status map_code(rlc::ErrorCode code) {
  using EC = rlc::ErrorCode;
  switch (code) {
    case EC::invalid_argument: return RLC_ERROR_INVALID_ARGUMENT;
    case EC::infeasible_spec: return RLC_ERROR_INFEASIBLE_SPEC;
    case EC::attempts_exhausted: return RLC_ERROR_ATTEMPTS_EXHAUSTED;
    case EC::budget_exceeded: return RLC_ERROR_BUDGET_EXCEEDED;
    case EC::equal_vertices: return RLC_ERROR_EQUAL_VERTICES;
    case EC::out_of_universe: return RLC_ERROR_OUT_OF_UNIVERSE;
    case EC::subset_too_small: return RLC_ERROR_SUBSET_TOO_SMALL;
    case EC::not_power_of_two: return RLC_ERROR_NOT_POWER_OF_TWO;
    case EC::chain_too_short: return RLC_ERROR_CHAIN_TOO_SHORT;
    case EC::universe_too_large: return RLC_ERROR_UNIVERSE_TOO_LARGE;
    case EC::depth_exceeded: return RLC_ERROR_DEPTH_EXCEEDED;
    case EC::format_error: return RLC_ERROR_FORMAT;
    case EC::io_error: return RLC_ERROR_IO;
    case EC::unsupported: return RLC_ERROR_UNSUPPORTED;
    case EC::internal: return RLC_ERROR_INTERNAL;
  }
  return RLC_ERROR_INTERNAL;
}

template <class Fn>
rlc_status wrap(Fn&& fn) noexcept {
  try {
    fn();
    return RLC_OK;
  } catch (const rlc::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RLC_ERROR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return RLC_ERROR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void check_ptr(const void* p, const char* what) {
  rlc::require(p != nullptr, rlc::ErrorCode::invalid_argument,
               std::string(what) + " must not be NULL");
}

rlc::GenSpec make_spec(rlc::GenSpec::Kind kind, uint64_t n, uint32_t q,
                       uint32_t m, uint32_t t, uint64_t seed,
                       uint64_t max_attempts, uint64_t budget,
                       int allow_vacuous) {
  rlc::GenSpec spec;
  spec.kind = kind;
  spec.universe_size = n;
  spec.num_colors = q;
  spec.subset_size = m;
  spec.required_colors = t;
  spec.seed = seed;
  if (max_attempts) spec.max_attempts = max_attempts;
  if (budget) spec.budget = budget;
  spec.allow_vacuous = allow_vacuous != 0;
  return spec;
}

std::vector<rlc::BigInt> parse_vertex_list(const char* const* vertices,
                                           size_t count) {
  check_ptr(vertices, "vertex list");
  std::vector<rlc::BigInt> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    check_ptr(vertices[i], "vertex");
    out.push_back(rlc::parse_bigint(vertices[i]));
  }
  return out;
}

rlc::Chain make_chain(const rlc::BigInt& radix, uint64_t num_digits,
                      const char* const* chain, size_t count) {
  auto values = parse_vertex_list(chain, count);
  std::vector<rlc::VertexCode> codes;
  codes.reserve(values.size());
  for (auto& v : values)
    codes.emplace_back(std::move(v), radix, static_cast<std::size_t>(num_digits));
  return rlc::Chain(std::move(codes));
}

rlc::VerifyOptions make_opts(uint64_t budget, uint32_t workers) {
  rlc::VerifyOptions opt;
  if (budget) opt.budget = budget;
  if (workers) opt.workers = workers;
  return opt;
}

}  // namespace

extern "C" {

const char* rlc_status_name(rlc_status status) {
  switch (status) {
    case RLC_OK: return "ok";
    case RLC_ERROR_INVALID_ARGUMENT: return "invalid_argument";
    case RLC_ERROR_INFEASIBLE_SPEC: return "infeasible_spec";
    case RLC_ERROR_ATTEMPTS_EXHAUSTED: return "attempts_exhausted";
    case RLC_ERROR_BUDGET_EXCEEDED: return "budget_exceeded";
    case RLC_ERROR_EQUAL_VERTICES: return "equal_vertices";
    case RLC_ERROR_OUT_OF_UNIVERSE: return "out_of_universe";
    case RLC_ERROR_SUBSET_TOO_SMALL: return "subset_too_small";
    case RLC_ERROR_NOT_POWER_OF_TWO: return "not_power_of_two";
    case RLC_ERROR_CHAIN_TOO_SHORT: return "chain_too_short";
    case RLC_ERROR_UNIVERSE_TOO_LARGE: return "universe_too_large";
    case RLC_ERROR_DEPTH_EXCEEDED: return "depth_exceeded";
    case RLC_ERROR_FORMAT: return "format_error";
    case RLC_ERROR_IO: return "io_error";
    case RLC_ERROR_UNSUPPORTED: return "unsupported";
    case RLC_ERROR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* rlc_last_error(void) { return g_last_error.c_str(); }

void rlc_string_free(char* s) { std::free(s); }

void rlc_pair_coloring_free(rlc_pair_coloring* h) { delete h; }
void rlc_triple_coloring_free(rlc_triple_coloring* h) { delete h; }
void rlc_tree_free(rlc_tree* h) { delete h; }
void rlc_report_free(rlc_report* h) { delete h; }

/* ------------------------------------------------------------------------ */

rlc_status rlc_generate_pair(uint64_t num_vertices, uint32_t num_colors,
                             uint32_t subset_size, uint32_t required_colors,
                             uint64_t seed, uint64_t max_attempts,
                             uint64_t budget, int allow_vacuous,
                             rlc_pair_coloring** out) {
  return wrap([&] {
    check_ptr(out, "out");
    auto spec = make_spec(rlc::GenSpec::Kind::pair, num_vertices, num_colors,
                          subset_size, required_colors, seed, max_attempts,
                          budget, allow_vacuous);
    *out = new rlc_pair_coloring{
        std::get<rlc::PairColoring>(rlc::generate(spec))};
  });
}

rlc_status rlc_generate_triple(uint64_t num_vertices, uint32_t num_colors,
                               uint32_t subset_size, uint32_t required_colors,
                               uint64_t seed, uint64_t max_attempts,
                               uint64_t budget, int allow_vacuous,
                               rlc_triple_coloring** out) {
  return wrap([&] {
    check_ptr(out, "out");
    auto spec = make_spec(rlc::GenSpec::Kind::triple, num_vertices, num_colors,
                          subset_size, required_colors, seed, max_attempts,
                          budget, allow_vacuous);
    *out = new rlc_triple_coloring{
        std::get<rlc::TripleColoring>(rlc::generate(spec))};
  });
}

rlc_status rlc_pair_universe_size(uint32_t q, uint32_t t, uint32_t m,
                                  char** out_decimal) {
  return wrap([&] {
    check_ptr(out_decimal, "out");
    *out_decimal = dup_string(rlc::to_decimal(rlc::pair_universe_size(q, t, m)));
  });
}

rlc_status rlc_lemma31_universe_size(uint32_t r, char** out_decimal) {
  return wrap([&] {
    check_ptr(out_decimal, "out");
    *out_decimal = dup_string(rlc::to_decimal(rlc::lemma31_universe_size(r)));
  });
}

rlc_status rlc_lemma33_universe_size(uint32_t s, char** out_decimal) {
  return wrap([&] {
    check_ptr(out_decimal, "out");
    *out_decimal = dup_string(rlc::to_decimal(rlc::lemma33_universe_size(s)));
  });
}

rlc_status rlc_expected_bad_subsets(uint32_t q, uint32_t t, uint32_t m,
                                    const char* universe_decimal,
                                    char** out_exact_rational,
                                    char** out_bound_decimal,
                                    int* out_exact_le_bound) {
  return wrap([&] {
    rlc::BigInt universe = universe_decimal
                               ? rlc::parse_bigint(universe_decimal)
                               : rlc::pair_universe_size(q, t, m);
    auto fm = rlc::expected_bad_subsets(q, t, m, universe);
    if (out_exact_rational)
      *out_exact_rational = dup_string(rlc::to_decimal(fm.exact));
    if (out_bound_decimal)
      *out_bound_decimal = dup_string(fm.bound ? rlc::to_decimal(*fm.bound)
                                               : fm.bound_real.to_string(50));
    if (out_exact_le_bound) *out_exact_le_bound = fm.exact_le_bound() ? 1 : 0;
  });
}

rlc_status rlc_min_m_for_bound(uint32_t q, uint32_t t, uint32_t* out_m) {
  return wrap([&] {
    check_ptr(out_m, "out");
    *out_m = rlc::min_m_for_bound(q, t);
  });
}

/* ------------------------------------------------------------------------ */

rlc_status rlc_pair_num_vertices(const rlc_pair_coloring* h, uint64_t* out) {
  return wrap([&] {
    check_ptr(h, "coloring");
    check_ptr(out, "out");
    *out = h->impl.num_vertices();
  });
}

rlc_status rlc_pair_num_colors(const rlc_pair_coloring* h, uint32_t* out) {
  return wrap([&] {
    check_ptr(h, "coloring");
    check_ptr(out, "out");
    *out = h->impl.num_colors();
  });
}

rlc_status rlc_pair_color(const rlc_pair_coloring* h, uint64_t i, uint64_t j,
                          uint32_t* out) {
  return wrap([&] {
    check_ptr(h, "coloring");
    check_ptr(out, "out");
    *out = h->impl.color(i, j);
  });
}

rlc_status rlc_pair_serialize(const rlc_pair_coloring* h, char** out_text) {
  return wrap([&] {
    check_ptr(h, "coloring");
    check_ptr(out_text, "out");
    *out_text = dup_string(h->impl.serialize());
  });
}

rlc_status rlc_pair_parse(const char* text, rlc_pair_coloring** out) {
  return wrap([&] {
    check_ptr(text, "text");
    check_ptr(out, "out");
    *out = new rlc_pair_coloring{rlc::PairColoring::parse(text)};
  });
}

rlc_status rlc_pair_read_file(const char* path, rlc_pair_coloring** out) {
  return wrap([&] {
    check_ptr(path, "path");
    check_ptr(out, "out");
    *out = new rlc_pair_coloring{rlc::PairColoring::read_file(path)};
  });
}

rlc_status rlc_pair_write_file(const rlc_pair_coloring* h, const char* path) {
  return wrap([&] {
    check_ptr(h, "coloring");
    check_ptr(path, "path");
    h->impl.write_file(path);
  });
}

rlc_status rlc_triple_num_vertices(const rlc_triple_coloring* h,
                                   uint64_t* out) {
  return wrap([&] {
    check_ptr(h, "coloring");
    check_ptr(out, "out");
    *out = h->impl.num_vertices();
  });
}

rlc_status rlc_triple_num_colors(const rlc_triple_coloring* h, uint32_t* out) {
  return wrap([&] {
    check_ptr(h, "coloring");
    check_ptr(out, "out");
    *out = h->impl.num_colors();
  });
}

rlc_status rlc_triple_color(const rlc_triple_coloring* h, uint64_t i,
                            uint64_t j, uint64_t k, uint32_t* out) {
  return wrap([&] {
    check_ptr(h, "coloring");
    check_ptr(out, "out");
    *out = h->impl.color(i, j, k);
  });
}

rlc_status rlc_triple_serialize(const rlc_triple_coloring* h,
                                char** out_text) {
  return wrap([&] {
    check_ptr(h, "coloring");
    check_ptr(out_text, "out");
    *out_text = dup_string(h->impl.serialize());
  });
}

rlc_status rlc_triple_parse(const char* text, rlc_triple_coloring** out) {
  return wrap([&] {
    check_ptr(text, "text");
    check_ptr(out, "out");
    *out = new rlc_triple_coloring{rlc::TripleColoring::parse(text)};
  });
}

rlc_status rlc_triple_read_file(const char* path, rlc_triple_coloring** out) {
  return wrap([&] {
    check_ptr(path, "path");
    check_ptr(out, "out");
    *out = new rlc_triple_coloring{rlc::TripleColoring::read_file(path)};
  });
}

rlc_status rlc_triple_write_file(const rlc_triple_coloring* h,
                                 const char* path) {
  return wrap([&] {
    check_ptr(h, "coloring");
    check_ptr(path, "path");
    h->impl.write_file(path);
  });
}

/* ------------------------------------------------------------------------ */

rlc_status rlc_tree_explicit(const rlc_triple_coloring* leaf, rlc_tree** out) {
  return wrap([&] {
    check_ptr(leaf, "leaf");
    check_ptr(out, "out");
    *out = new rlc_tree{rlc::Lifted::make_explicit(leaf->impl)};
  });
}

rlc_status rlc_tree_binary_stepup(const rlc_pair_coloring* base,
                                  rlc_tree** out) {
  return wrap([&] {
    check_ptr(base, "base");
    check_ptr(out, "out");
    *out = new rlc_tree{rlc::Lifted::make_binary(base->impl)};
  });
}

rlc_status rlc_tree_mixed_stepup(const rlc_pair_coloring* pair_base,
                                 const rlc_tree* triple_base, rlc_tree** out) {
  return wrap([&] {
    check_ptr(pair_base, "pair_base");
    check_ptr(triple_base, "triple_base");
    check_ptr(out, "out");
    *out = new rlc_tree{
        rlc::Lifted::make_mixed(pair_base->impl, triple_base->impl)};
  });
}

rlc_status rlc_tree_read_file(const char* path, rlc_tree** out) {
  return wrap([&] {
    check_ptr(path, "path");
    check_ptr(out, "out");
    *out = new rlc_tree{rlc::read_tree(path)};
  });
}

rlc_status rlc_tree_write_file(const rlc_tree* h, const char* path) {
  return wrap([&] {
    check_ptr(h, "tree");
    check_ptr(path, "path");
    rlc::write_tree(path, *h->impl);
  });
}

rlc_status rlc_tree_write_binary_ref(const char* pair_path,
                                     const char* out_path) {
  return wrap([&] {
    check_ptr(pair_path, "pair_path");
    check_ptr(out_path, "out_path");
    rlc::PairColoring::read_file(pair_path);  // validate before referencing
    rlc::write_text_file(out_path, rlc::binary_tree_ref_json(pair_path));
    rlc::read_tree(out_path);  // round-trip sanity
  });
}

rlc_status rlc_tree_write_mixed_ref(const char* pair_path,
                                    const char* triple_path,
                                    const char* out_path) {
  return wrap([&] {
    check_ptr(pair_path, "pair_path");
    check_ptr(triple_path, "triple_path");
    check_ptr(out_path, "out_path");
    rlc::write_text_file(out_path,
                         rlc::mixed_tree_ref_json(pair_path, triple_path));
    rlc::read_tree(out_path);  // validates both referenced files
  });
}

rlc_status rlc_load_coloring(const char* path, rlc_tree** out_tree,
                             rlc_pair_coloring** out_pair) {
  return wrap([&] {
    check_ptr(path, "path");
    check_ptr(out_tree, "out_tree");
    check_ptr(out_pair, "out_pair");
    *out_tree = nullptr;
    *out_pair = nullptr;
    auto loaded = rlc::load_coloring(path);
    if (loaded.tree)
      *out_tree = new rlc_tree{loaded.tree};
    else
      *out_pair = new rlc_pair_coloring{*loaded.pair};
  });
}

rlc_status rlc_tree_get_kind(const rlc_tree* h, rlc_tree_kind* out) {
  return wrap([&] {
    check_ptr(h, "tree");
    check_ptr(out, "out");
    switch (h->impl->kind()) {
      case rlc::Lifted::Kind::explicit_leaf: *out = RLC_TREE_EXPLICIT; break;
      case rlc::Lifted::Kind::binary_stepup: *out = RLC_TREE_BINARY_STEPUP; break;
      case rlc::Lifted::Kind::mixed_stepup: *out = RLC_TREE_MIXED_STEPUP; break;
    }
  });
}

rlc_status rlc_tree_num_colors(const rlc_tree* h, uint32_t* out) {
  return wrap([&] {
    check_ptr(h, "tree");
    check_ptr(out, "out");
    *out = h->impl->num_colors();
  });
}

rlc_status rlc_tree_depth(const rlc_tree* h, uint32_t* out) {
  return wrap([&] {
    check_ptr(h, "tree");
    check_ptr(out, "out");
    *out = static_cast<uint32_t>(h->impl->depth());
  });
}

rlc_status rlc_tree_universe_size(const rlc_tree* h, char** out_decimal) {
  return wrap([&] {
    check_ptr(h, "tree");
    check_ptr(out_decimal, "out");
    *out_decimal = dup_string(rlc::to_decimal(h->impl->universe_size()));
  });
}

rlc_status rlc_tree_eval(const rlc_tree* h, const char* v1, const char* v2,
                         const char* v3, uint32_t* out_color) {
  return wrap([&] {
    check_ptr(h, "tree");
    check_ptr(v1, "v1");
    check_ptr(v2, "v2");
    check_ptr(v3, "v3");
    check_ptr(out_color, "out");
    *out_color = h->impl->color(rlc::parse_bigint(v1), rlc::parse_bigint(v2),
                                rlc::parse_bigint(v3));
  });
}

/* ------------------------------------------------------------------------ */

rlc_status rlc_compose(uint64_t n, uint32_t q, const rlc_compose_options* opt,
                       rlc_tree** out) {
  return wrap([&] {
    check_ptr(out, "out");
    rlc::ComposeOptions options;
    if (opt) {
      options.seed = opt->seed;
      options.pair_vertices = opt->pair_vertices;
      options.pair_subset = opt->pair_subset;
      options.leaf_vertices = opt->leaf_vertices;
      options.leaf_subset = opt->leaf_subset;
      if (opt->max_attempts) options.max_attempts = opt->max_attempts;
      if (opt->budget) options.budget = opt->budget;
    }
    *out = new rlc_tree{rlc::compose(n, q, options)};
  });
}

rlc_status rlc_compose_nominal(uint64_t n, uint32_t q, char** out_json) {
  return wrap([&] {
    check_ptr(out_json, "out");
    *out_json = dup_string(rlc::compose_nominal(n, q).to_json());
  });
}

rlc_status rlc_bound_log2(const char* n_decimal, uint32_t q,
                          char** out_exact_rational, char** out_decimal) {
  return wrap([&] {
    check_ptr(n_decimal, "n");
    auto value = rlc::bound_log2(rlc::parse_bigint(n_decimal), q);
    if (out_exact_rational)
      *out_exact_rational =
          value.exact ? dup_string(rlc::to_decimal(*value.exact)) : nullptr;
    if (out_decimal) *out_decimal = dup_string(value.approx.to_string(50));
  });
}

rlc_status rlc_bound_log2_simple(const char* n_decimal, uint32_t q, uint32_t t,
                                 int allow_general, char** out_exact_rational,
                                 char** out_decimal) {
  return wrap([&] {
    check_ptr(n_decimal, "n");
    auto value = rlc::bound_log2_simple(rlc::parse_bigint(n_decimal), q, t,
                                        allow_general != 0);
    if (out_exact_rational)
      *out_exact_rational =
          value.exact ? dup_string(rlc::to_decimal(*value.exact)) : nullptr;
    if (out_decimal) *out_decimal = dup_string(value.approx.to_string(50));
  });
}

/* ------------------------------------------------------------------------ */

rlc_status rlc_verify_tree_exhaustive(const rlc_tree* h, uint32_t n,
                                      uint32_t t, uint64_t budget,
                                      uint32_t workers, rlc_report** out) {
  return wrap([&] {
    check_ptr(h, "tree");
    check_ptr(out, "out");
    *out = new rlc_report{
        rlc::verify_exhaustive(*h->impl, n, t, make_opts(budget, workers))};
  });
}

rlc_status rlc_verify_tree_exhaustive_list(const rlc_tree* h,
                                           const char* const* vertices,
                                           size_t count, uint32_t n, uint32_t t,
                                           uint64_t budget, uint32_t workers,
                                           rlc_report** out) {
  return wrap([&] {
    check_ptr(h, "tree");
    check_ptr(out, "out");
    auto list = parse_vertex_list(vertices, count);
    *out = new rlc_report{rlc::verify_exhaustive(*h->impl, list, n, t,
                                                 make_opts(budget, workers))};
  });
}

rlc_status rlc_verify_tree_sampled(const rlc_tree* h, uint32_t n, uint32_t t,
                                   uint64_t samples, uint64_t seed,
                                   uint64_t budget, uint32_t workers,
                                   rlc_report** out) {
  return wrap([&] {
    check_ptr(h, "tree");
    check_ptr(out, "out");
    *out = new rlc_report{rlc::verify_sampled(*h->impl, n, t, samples, seed,
                                              make_opts(budget, workers))};
  });
}

rlc_status rlc_verify_pair_exhaustive(const rlc_pair_coloring* h, uint32_t m,
                                      uint32_t t, uint64_t budget,
                                      uint32_t workers, rlc_report** out) {
  return wrap([&] {
    check_ptr(h, "coloring");
    check_ptr(out, "out");
    *out = new rlc_report{rlc::verify_pair_exhaustive(
        h->impl, m, t, make_opts(budget, workers))};
  });
}

rlc_status rlc_verify_pair_sampled(const rlc_pair_coloring* h, uint32_t m,
                                   uint32_t t, uint64_t samples, uint64_t seed,
                                   uint64_t budget, uint32_t workers,
                                   rlc_report** out) {
  return wrap([&] {
    check_ptr(h, "coloring");
    check_ptr(out, "out");
    *out = new rlc_report{rlc::verify_pair_sampled(
        h->impl, m, t, samples, seed, make_opts(budget, workers))};
  });
}

rlc_status rlc_min_colors(const rlc_tree* h, const char* const* vertices,
                          size_t count, uint32_t* out) {
  return wrap([&] {
    check_ptr(h, "tree");
    check_ptr(out, "out");
    auto list = parse_vertex_list(vertices, count);
    *out = rlc::min_colors(*h->impl, list);
  });
}

rlc_status rlc_property_check(uint32_t property, const char* radix_decimal,
                              uint64_t num_digits, int exhaustive,
                              uint64_t samples, uint64_t chain_length,
                              uint64_t seed, uint64_t budget,
                              rlc_report** out) {
  return wrap([&] {
    check_ptr(radix_decimal, "radix");
    check_ptr(out, "out");
    rlc::require(property >= 1 && property <= 3,
                 rlc::ErrorCode::invalid_argument, "property must be 1, 2 or 3");
    rlc::PropertyParams params;
    params.radix = rlc::parse_bigint(radix_decimal);
    params.num_digits = static_cast<std::size_t>(num_digits);
    params.exhaustive = exhaustive != 0;
    if (samples) params.samples = samples;
    if (chain_length) params.chain_length = static_cast<std::size_t>(chain_length);
    params.seed = seed;
    if (budget) params.budget = budget;
    const rlc::PropertyKind kind = property == 1   ? rlc::PropertyKind::I
                                   : property == 2 ? rlc::PropertyKind::II
                                                   : rlc::PropertyKind::III;
    *out = new rlc_report{rlc::property_suite(kind, params)};
  });
}

/* ------------------------------------------------------------------------ */

rlc_status rlc_report_mode(const rlc_report* h, int* out_sampled) {
  return wrap([&] {
    check_ptr(h, "report");
    check_ptr(out_sampled, "out");
    *out_sampled =
        h->impl.mode == rlc::VerificationReport::Mode::sampled ? 1 : 0;
  });
}

rlc_status rlc_report_pass(const rlc_report* h, int* out_pass) {
  return wrap([&] {
    check_ptr(h, "report");
    check_ptr(out_pass, "out");
    *out_pass = h->impl.pass() ? 1 : 0;
  });
}

rlc_status rlc_report_subsets_checked(const rlc_report* h, uint64_t* out) {
  return wrap([&] {
    check_ptr(h, "report");
    check_ptr(out, "out");
    *out = h->impl.subsets_checked;
  });
}

rlc_status rlc_report_evaluations(const rlc_report* h, uint64_t* out) {
  return wrap([&] {
    check_ptr(h, "report");
    check_ptr(out, "out");
    *out = h->impl.evaluations;
  });
}

rlc_status rlc_report_min_colors(const rlc_report* h, uint32_t* out) {
  return wrap([&] {
    check_ptr(h, "report");
    check_ptr(out, "out");
    *out = h->impl.min_colors_seen;
  });
}

rlc_status rlc_report_counterexample_size(const rlc_report* h, size_t* out) {
  return wrap([&] {
    check_ptr(h, "report");
    check_ptr(out, "out");
    *out = h->impl.counterexample ? h->impl.counterexample->size() : 0;
  });
}

rlc_status rlc_report_counterexample_vertex(const rlc_report* h, size_t index,
                                            char** out_decimal) {
  return wrap([&] {
    check_ptr(h, "report");
    check_ptr(out_decimal, "out");
    rlc::require(h->impl.counterexample &&
                     index < h->impl.counterexample->size(),
                 rlc::ErrorCode::invalid_argument,
                 "counterexample index out of range");
    *out_decimal =
        dup_string(rlc::to_decimal((*h->impl.counterexample)[index]));
  });
}

rlc_status rlc_report_to_json(const rlc_report* h, char** out_json) {
  return wrap([&] {
    check_ptr(h, "report");
    check_ptr(out_json, "out");
    *out_json = dup_string(h->impl.to_json());
  });
}

/* ------------------------------------------------------------------------ */

rlc_status rlc_stepdown_extract(const rlc_tree* h, const char* const* chain,
                                size_t count, char** out_json) {
  return wrap([&] {
    check_ptr(h, "tree");
    check_ptr(out_json, "out");
    rlc::require(h->impl->kind() == rlc::Lifted::Kind::binary_stepup,
                 rlc::ErrorCode::invalid_argument,
                 "stepdown extraction needs a binary step-up tree");
    const rlc::PairColoring& base = h->impl->binary_base();
    rlc::Chain c = make_chain(rlc::BigInt(2), base.num_vertices(), chain, count);
    rlc::StepdownResult result = rlc::stepdown_extract(c, base);
    nlohmann::json doc;
    doc["delta_set"] = result.delta_set;
    auto arr = nlohmann::json::array();
    for (const auto& [key, wit] : result.witnesses) {
      nlohmann::json item;
      item["pair"] = {key.first, key.second};
      item["positions"] = {wit.a, wit.b, wit.c};
      item["color"] = base.color(key.first, key.second);
      arr.push_back(item);
    }
    doc["witnesses"] = arr;
    *out_json = dup_string(doc.dump(2) + "\n");
  });
}

rlc_status rlc_equal_delta_escape(const char* radix_decimal,
                                  uint64_t num_digits,
                                  const char* const* chain, size_t count,
                                  uint64_t r, int64_t* out_w) {
  return wrap([&] {
    check_ptr(radix_decimal, "radix");
    check_ptr(out_w, "out");
    rlc::Chain c = make_chain(rlc::parse_bigint(radix_decimal), num_digits,
                              chain, count);
    auto w = rlc::equal_delta_escape(c, static_cast<std::size_t>(r));
    *out_w = w ? static_cast<int64_t>(*w) : -1;
  });
}

rlc_status rlc_chain_extract(const char* radix_decimal, uint64_t num_digits,
                             const char* const* chain, size_t count, uint64_t r,
                             uint64_t s, int mirrored, char** out_json) {
  return wrap([&] {
    check_ptr(radix_decimal, "radix");
    check_ptr(out_json, "out");
    rlc::Chain c = make_chain(rlc::parse_bigint(radix_decimal), num_digits,
                              chain, count);
    auto result = rlc::decreasing_chain_extract(
        c, static_cast<std::size_t>(r), static_cast<std::size_t>(s),
        mirrored != 0);
    nlohmann::json doc;
    if (const auto* ok = std::get_if<rlc::ChainExtractSuccess>(&result)) {
      doc["found"] = true;
      doc["escape_positions"] = ok->escape_positions;
      doc["selected_vertices"] = ok->selected_vertices;
    } else {
      const auto& failure = std::get<rlc::ChainExtractFailure>(result);
      doc["found"] = false;
      doc["reason"] =
          failure.reason == rlc::ChainExtractFailure::Reason::no_escape
              ? "no_escape"
              : "not_strict";
      doc["block_begin"] = failure.block_begin;
      doc["block_end"] = failure.block_end;
      doc["deltas_all_equal"] = failure.deltas_all_equal;
    }
    *out_json = dup_string(doc.dump(2) + "\n");
  });
}

/* ------------------------------------------------------------------------ */

rlc_status rlc_materialize(const rlc_tree* h, uint64_t limit,
                           rlc_triple_coloring** out) {
  return wrap([&] {
    check_ptr(h, "tree");
    check_ptr(out, "out");
    *out = new rlc_triple_coloring{
        rlc::materialize(*h->impl, limit ? limit : 512)};
  });
}

rlc_status rlc_oracle_search(uint64_t universe, uint32_t q, uint32_t t,
                             uint32_t n, uint32_t arity, uint64_t budget,
                             uint64_t order_seed, int* out_sat,
                             rlc_pair_coloring** out_pair,
                             rlc_triple_coloring** out_triple) {
  return wrap([&] {
    check_ptr(out_sat, "out_sat");
    auto result = rlc::brute_force_search(universe, q, t, n,
                                          static_cast<int>(arity), budget,
                                          order_seed);
    *out_sat = result.sat ? 1 : 0;
    if (out_pair) *out_pair = nullptr;
    if (out_triple) *out_triple = nullptr;
    if (result.sat && result.pair && out_pair)
      *out_pair = new rlc_pair_coloring{std::move(*result.pair)};
    if (result.sat && result.triple && out_triple)
      *out_triple = new rlc_triple_coloring{std::move(*result.triple)};
  });
}

rlc_status rlc_oracle_exact_f(uint32_t q, uint32_t t, uint32_t n,
                              uint64_t n_max, uint64_t budget, int* out_found,
                              uint64_t* out_best, int* out_capped,
                              rlc_triple_coloring** out_witness) {
  return wrap([&] {
    check_ptr(out_found, "out_found");
    auto result = rlc::exact_f_micro(q, t, n, n_max, budget);
    *out_found = result.best.has_value() ? 1 : 0;
    if (out_best) *out_best = result.best.value_or(0);
    if (out_capped) *out_capped = result.capped ? 1 : 0;
    if (out_witness) {
      *out_witness = nullptr;
      if (result.witness)
        *out_witness = new rlc_triple_coloring{std::move(*result.witness)};
    }
  });
}

} /* extern "C" */
