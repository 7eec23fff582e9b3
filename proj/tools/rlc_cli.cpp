// Command-line front end. Everything goes through the shared library's C API
// (rlc/rlc.h); this file owns only argument parsing and output formatting.
//
// Exit codes: 0 success / property holds, 2 property violated, 3 budget
// exceeded, 64 usage error, 65 unreadable or malformed input file, 1 other
// runtime errors.

#include <rlc/rlc.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int kExitViolation = 2;
constexpr int kExitBudget = 3;
constexpr int kExitUsage = 64;
constexpr int kExitFile = 65;

bool g_json = false;

int exit_code_for(rlc_status status) {
  switch (status) {
    case RLC_OK: return 0;
    case RLC_ERROR_BUDGET_EXCEEDED: return kExitBudget;
    case RLC_ERROR_FORMAT:
    case RLC_ERROR_IO: return kExitFile;
    default: return 1;
  }
}

void check(rlc_status status) {
  if (status == RLC_OK) return;
  std::cerr << "error (" << rlc_status_name(status) << "): " << rlc_last_error()
            << "\n";
  std::exit(exit_code_for(status));
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  rlc_string_free(s);
  return out;
}

struct StringList {
  std::vector<std::string> storage;
  std::vector<const char*> ptrs;
  explicit StringList(std::vector<std::string> items)
      : storage(std::move(items)) {
    for (const auto& s : storage) ptrs.push_back(s.c_str());
  }
  const char* const* data() const { return ptrs.data(); }
  size_t size() const { return storage.size(); }
};

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// Report printing shared by verify/props.
int emit_report(rlc_report* report, bool expect_pass_exit) {
  int pass = 0;
  check(rlc_report_pass(report, &pass));
  if (g_json) {
    char* json = nullptr;
    check(rlc_report_to_json(report, &json));
    std::cout << take_string(json);
  } else {
    int sampled = 0;
    uint64_t subsets = 0, evals = 0;
    uint32_t min_colors = 0;
    check(rlc_report_mode(report, &sampled));
    check(rlc_report_subsets_checked(report, &subsets));
    check(rlc_report_evaluations(report, &evals));
    check(rlc_report_min_colors(report, &min_colors));
    std::cout << "mode: " << (sampled ? "sampled" : "exhaustive") << "\n"
              << "subsets_checked: " << subsets << "\n"
              << "evaluations: " << evals << "\n"
              << "min_colors_seen: " << min_colors << "\n"
              << "pass: " << (pass ? "true" : "false") << "\n";
    if (!pass) {
      size_t len = 0;
      check(rlc_report_counterexample_size(report, &len));
      std::cout << "counterexample:\n";
      for (size_t i = 0; i < len; ++i) {
        char* v = nullptr;
        check(rlc_report_counterexample_vertex(report, i, &v));
        std::cout << take_string(v) << "\n";
      }
    }
  }
  rlc_report_free(report);
  if (expect_pass_exit && !pass) return kExitViolation;
  return 0;
}

uint64_t parse_u64(const std::string& s, const char* what) {
  try {
    size_t pos = 0;
    unsigned long long v = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (...) {
    std::cerr << "error: " << what << " is not a 64-bit integer: " << s << "\n";
    std::exit(kExitUsage);
  }
}

struct GenBaseArgs {
  std::string kind = "pair";
  uint64_t n = 0;
  uint32_t q = 0;
  uint32_t subset = 0;
  uint32_t t = 0;
  uint64_t seed = 0;
  uint64_t max_attempts = 1000;
  uint64_t budget = 100000000;
  std::string out;
  std::string size_from_lemma;
  bool allow_vacuous = false;
};

int run_gen_base(const GenBaseArgs& a) {
  uint64_t n = a.n;
  if (!a.size_from_lemma.empty()) {
    char* dec = nullptr;
    if (a.size_from_lemma == "2.1")
      check(rlc_pair_universe_size(a.q, a.t, a.subset, &dec));
    else if (a.size_from_lemma == "3.1")
      check(rlc_lemma31_universe_size(a.subset, &dec));
    else
      check(rlc_lemma33_universe_size(a.subset, &dec));
    n = parse_u64(take_string(dec), "lemma universe size");
  }
  if (n == 0) {
    std::cerr << "error: no universe size (--n or --size-from-lemma)\n";
    return kExitUsage;
  }

  if (a.kind == "pair") {
    rlc_pair_coloring* coloring = nullptr;
    check(rlc_generate_pair(n, a.q, a.subset, a.t, a.seed, a.max_attempts,
                            a.budget, a.allow_vacuous ? 1 : 0, &coloring));
    check(rlc_pair_write_file(coloring, a.out.c_str()));
    rlc_pair_coloring_free(coloring);
  } else {
    rlc_triple_coloring* coloring = nullptr;
    check(rlc_generate_triple(n, a.q, a.subset, a.t, a.seed, a.max_attempts,
                              a.budget, a.allow_vacuous ? 1 : 0, &coloring));
    check(rlc_triple_write_file(coloring, a.out.c_str()));
    rlc_triple_coloring_free(coloring);
  }
  if (g_json)
    std::cout << nlohmann::json{{"kind", a.kind}, {"n", n},   {"q", a.q},
                                {"subset", a.subset}, {"t", a.t},
                                {"seed", a.seed},     {"out", a.out}}
                     .dump(2)
              << "\n";
  else
    std::cout << "wrote " << a.kind << " coloring (N=" << n << ", q=" << a.q
              << ") to " << a.out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "rlc - build, lift and verify triple colorings whose small subsets "
      "always show several distinct colors"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output encoding: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  GenBaseArgs gen;
  auto* cmd_gen = app.add_subcommand(
      "gen-base", "generate a verified base coloring by seeded random search");
  cmd_gen->add_option("--kind", gen.kind, "pair or triple")
      ->check(CLI::IsMember({"pair", "triple"}));
  cmd_gen->add_option("--n", gen.n, "universe size");
  cmd_gen->add_option("--q", gen.q, "number of colors")->required();
  cmd_gen->add_option("--subset", gen.subset, "subset size to check")
      ->required();
  cmd_gen->add_option("--t", gen.t, "required distinct colors")->required();
  cmd_gen->add_option("--seed", gen.seed, "RNG seed")->required();
  cmd_gen->add_option("--max-attempts", gen.max_attempts,
                      "rejection-sampling attempts");
  cmd_gen->add_option("--budget", gen.budget, "subset checks per attempt");
  cmd_gen->add_option("--out", gen.out, "output RLC1 path")->required();
  cmd_gen
      ->add_option("--size-from-lemma", gen.size_from_lemma,
                   "compute --n from a size formula: 2.1, 3.1 or 3.3")
      ->check(CLI::IsMember({"2.1", "3.1", "3.3"}));
  cmd_gen->add_flag("--allow-vacuous", gen.allow_vacuous,
                    "accept universes smaller than the subset size");

  auto* cmd_stepup = app.add_subcommand(
      "stepup", "assemble a step-up construction tree from base colorings");
  cmd_stepup->require_subcommand(1);
  std::string su_base, su_pair, su_triple, su_out;
  auto* cmd_su_bin = cmd_stepup->add_subcommand(
      "binary", "binary step-up over a pair coloring");
  cmd_su_bin->add_option("--base", su_base, "pair coloring (RLC1)")->required();
  cmd_su_bin->add_option("--out", su_out, "output tree path")->required();
  auto* cmd_su_mix = cmd_stepup->add_subcommand(
      "mixed", "mixed step-up over a pair base and a triple base");
  cmd_su_mix->add_option("--pair-base", su_pair, "3-color pair coloring (RLC1)")
      ->required();
  cmd_su_mix
      ->add_option("--triple-base", su_triple, "triple base (tree or RLC1)")
      ->required();
  cmd_su_mix->add_option("--out", su_out, "output tree path")->required();

  uint64_t co_n = 0, co_seed = 0;
  uint32_t co_q = 0;
  std::string co_mode = "materializable", co_out;
  rlc_compose_options co_opt{};
  auto* cmd_compose = app.add_subcommand(
      "compose", "build the full recursive construction for (n, q)");
  cmd_compose->add_option("--n", co_n, "subset size parameter")->required();
  cmd_compose->add_option("--q", co_q, "number of colors")->required();
  cmd_compose->add_option("--mode", co_mode, "materializable or nominal")
      ->check(CLI::IsMember({"materializable", "nominal"}));
  cmd_compose->add_option("--seed", co_seed, "RNG seed");
  cmd_compose->add_option("--out", co_out, "output path")->required();
  cmd_compose->add_option("--pair-n", co_opt.pair_vertices,
                          "override: pair-base vertices per level");
  cmd_compose->add_option("--pair-subset", co_opt.pair_subset,
                          "override: pair-base subset size");
  cmd_compose->add_option("--leaf-n", co_opt.leaf_vertices,
                          "override: leaf vertices");
  cmd_compose->add_option("--leaf-subset", co_opt.leaf_subset,
                          "override: leaf subset size");
  cmd_compose->add_option("--max-attempts", co_opt.max_attempts,
                          "generation attempts per base");
  cmd_compose->add_option("--budget", co_opt.budget,
                          "subset checks per generation attempt");

  std::string ev_tree;
  std::vector<std::string> ev_triple;
  auto* cmd_eval =
      app.add_subcommand("eval", "color of one triple under a tree");
  cmd_eval->add_option("--tree", ev_tree, "construction tree path")->required();
  cmd_eval->add_option("--triple", ev_triple, "three vertices (decimal)")
      ->expected(3)
      ->required();

  std::string bo_n;
  uint32_t bo_q = 0, bo_t = 0;
  bool bo_simple = false, bo_general = false;
  auto* cmd_bounds =
      app.add_subcommand("bounds", "log2 of the guaranteed universe size");
  cmd_bounds->add_option("--n", bo_n, "subset size (decimal)")->required();
  cmd_bounds->add_option("--q", bo_q, "number of colors")->required();
  cmd_bounds->add_option("--t", bo_t, "required colors (with --simple)");
  cmd_bounds->add_flag("--simple", bo_simple,
                       "single-level bound n^(log2(q/(t-1)))/4");
  cmd_bounds->add_flag("--general-n", bo_general,
                       "allow n that is not a power of two (--simple)");

  std::string ve_coloring, ve_mode = "exhaustive";
  uint32_t ve_n = 0, ve_t = 0, ve_workers = 1;
  uint64_t ve_samples = 100000, ve_seed = 0, ve_budget = 2000000000ull;
  auto* cmd_verify = app.add_subcommand(
      "verify", "check that every n-subset shows at least t colors");
  cmd_verify->add_option("--coloring", ve_coloring, "tree or RLC1 path")
      ->required();
  cmd_verify->add_option("--n", ve_n, "subset size")->required();
  cmd_verify->add_option("--t", ve_t, "required distinct colors")->required();
  cmd_verify->add_option("--mode", ve_mode, "exhaustive or sample")
      ->check(CLI::IsMember({"exhaustive", "sample"}));
  cmd_verify->add_option("--samples", ve_samples, "sample count");
  cmd_verify->add_option("--seed", ve_seed, "RNG seed (sample mode)");
  cmd_verify->add_option("--workers", ve_workers, "worker threads");
  cmd_verify->add_option("--budget", ve_budget, "tuple evaluation budget");

  std::string pr_check, pr_radix = "2", pr_mode = "exhaustive";
  uint64_t pr_digits = 8, pr_samples = 100000, pr_seed = 0,
           pr_budget = 2000000000ull, pr_chain = 32;
  auto* cmd_props = app.add_subcommand(
      "props", "structural property suites of the delta map");
  cmd_props->add_option("--check", pr_check, "I, II or III")
      ->required()
      ->check(CLI::IsMember({"I", "II", "III", "1", "2", "3"}));
  cmd_props->add_option("--radix", pr_radix, "digit radix (decimal)");
  cmd_props->add_option("--digits", pr_digits, "number of digits");
  cmd_props->add_option("--mode", pr_mode, "exhaustive or sample")
      ->check(CLI::IsMember({"exhaustive", "sample"}));
  cmd_props->add_option("--samples", pr_samples, "sample count");
  cmd_props->add_option("--chain-len", pr_chain, "max chain length (II)");
  cmd_props->add_option("--seed", pr_seed, "RNG seed");
  cmd_props->add_option("--budget", pr_budget, "evaluation budget");

  std::string sd_tree, sd_chain;
  auto* cmd_stepdown = app.add_subcommand(
      "stepdown", "extract realized delta pairs from a chain");
  cmd_stepdown->add_option("--tree", sd_tree, "binary step-up tree path")
      ->required();
  cmd_stepdown
      ->add_option("--chain", sd_chain, "comma-separated increasing vertices")
      ->required();

  auto* cmd_oracle =
      app.add_subcommand("oracle", "micro-scale ground-truth tools");
  cmd_oracle->require_subcommand(1);
  std::string om_tree, om_out;
  uint64_t om_limit = 512;
  auto* cmd_om = cmd_oracle->add_subcommand(
      "materialize", "tabulate a lifted coloring explicitly");
  cmd_om->add_option("--tree", om_tree, "construction tree path")->required();
  cmd_om->add_option("--out", om_out, "output RLC1 path")->required();
  cmd_om->add_option("--limit", om_limit, "max universe size");

  uint64_t os_n_universe = 0, os_budget = 1000000000ull, os_order_seed = 0;
  uint32_t os_q = 0, os_t = 0, os_n = 0, os_arity = 3;
  std::string os_out;
  auto* cmd_os = cmd_oracle->add_subcommand(
      "search", "exhaustive existence search for a coloring");
  cmd_os->add_option("--N", os_n_universe, "universe size")->required();
  cmd_os->add_option("--q", os_q, "number of colors")->required();
  cmd_os->add_option("--t", os_t, "required distinct colors")->required();
  cmd_os->add_option("--n", os_n, "subset size")->required();
  cmd_os->add_option("--arity", os_arity, "2 or 3")
      ->check(CLI::IsMember({"2", "3"}));
  cmd_os->add_option("--budget", os_budget, "search node budget");
  cmd_os->add_option("--order-seed", os_order_seed,
                     "shuffle the assignment order (consistency checks)");
  cmd_os->add_option("--out", os_out, "write the witness coloring here");

  uint64_t of_nmax = 0, of_budget = 1000000000ull;
  uint32_t of_q = 0, of_t = 0, of_n = 0;
  std::string of_out;
  auto* cmd_of = cmd_oracle->add_subcommand(
      "exact-f", "largest Sat universe size in [n, max-N]");
  cmd_of->add_option("--q", of_q, "number of colors")->required();
  cmd_of->add_option("--t", of_t, "required distinct colors")->required();
  cmd_of->add_option("--n", of_n, "subset size")->required();
  cmd_of->add_option("--max-N", of_nmax, "scan limit")->required();
  cmd_of->add_option("--budget", of_budget, "search node budget per size");
  cmd_of->add_option("--out", of_out, "write the witness coloring here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  g_json = format == "json";

  if (*cmd_gen) return run_gen_base(gen);

  if (*cmd_stepup) {
    if (*cmd_su_bin)
      check(rlc_tree_write_binary_ref(su_base.c_str(), su_out.c_str()));
    else
      check(rlc_tree_write_mixed_ref(su_pair.c_str(), su_triple.c_str(),
                                     su_out.c_str()));
    rlc_tree* tree = nullptr;
    check(rlc_tree_read_file(su_out.c_str(), &tree));
    char* size = nullptr;
    check(rlc_tree_universe_size(tree, &size));
    uint32_t colors = 0;
    check(rlc_tree_num_colors(tree, &colors));
    std::string size_str = take_string(size);
    rlc_tree_free(tree);
    if (g_json)
      std::cout << nlohmann::json{{"out", su_out},
                                  {"universe_size", size_str},
                                  {"num_colors", colors}}
                       .dump(2)
                << "\n";
    else
      std::cout << "wrote tree to " << su_out << " (universe " << size_str
                << ", " << colors << " colors)\n";
    return 0;
  }

  if (*cmd_compose) {
    if (co_mode == "nominal") {
      char* json = nullptr;
      check(rlc_compose_nominal(co_n, co_q, &json));
      std::string text = take_string(json);
      FILE* f = std::fopen(co_out.c_str(), "wb");
      if (!f) {
        std::cerr << "error: cannot write " << co_out << "\n";
        return kExitFile;
      }
      std::fwrite(text.data(), 1, text.size(), f);
      std::fclose(f);
      if (g_json)
        std::cout << text;
      else
        std::cout << "wrote nominal plan to " << co_out << "\n";
      return 0;
    }
    co_opt.seed = co_seed;
    rlc_tree* tree = nullptr;
    check(rlc_compose(co_n, co_q, &co_opt, &tree));
    check(rlc_tree_write_file(tree, co_out.c_str()));
    char* size = nullptr;
    check(rlc_tree_universe_size(tree, &size));
    uint32_t depth = 0;
    check(rlc_tree_depth(tree, &depth));
    std::string size_str = take_string(size);
    rlc_tree_free(tree);
    if (g_json)
      std::cout << nlohmann::json{{"out", co_out},
                                  {"universe_size", size_str},
                                  {"depth", depth}}
                       .dump(2)
                << "\n";
    else
      std::cout << "wrote tree to " << co_out << " (universe " << size_str
                << ", depth " << depth << ")\n";
    return 0;
  }

  if (*cmd_eval) {
    rlc_tree* tree = nullptr;
    check(rlc_tree_read_file(ev_tree.c_str(), &tree));
    uint32_t color = 0;
    check(rlc_tree_eval(tree, ev_triple[0].c_str(), ev_triple[1].c_str(),
                        ev_triple[2].c_str(), &color));
    rlc_tree_free(tree);
    if (g_json)
      std::cout << nlohmann::json{{"color", color}}.dump(2) << "\n";
    else
      std::cout << color << "\n";
    return 0;
  }

  if (*cmd_bounds) {
    char* exact = nullptr;
    char* decimal = nullptr;
    if (bo_simple) {
      if (bo_t == 0) {
        std::cerr << "error: --simple needs --t\n";
        return kExitUsage;
      }
      check(rlc_bound_log2_simple(bo_n.c_str(), bo_q, bo_t, bo_general ? 1 : 0,
                                  &exact, &decimal));
    } else {
      check(rlc_bound_log2(bo_n.c_str(), bo_q, &exact, &decimal));
    }
    std::string exact_str = exact ? take_string(exact) : "";
    std::string dec_str = take_string(decimal);
    if (g_json) {
      nlohmann::json doc;
      doc["log2_bound"] = exact_str.empty() ? dec_str : exact_str;
      doc["exact"] = !exact_str.empty();
      doc["decimal"] = dec_str;
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << "log2_bound = " << (exact_str.empty() ? dec_str : exact_str)
                << "\n";
    }
    return 0;
  }

  if (*cmd_verify) {
    rlc_tree* tree = nullptr;
    rlc_pair_coloring* pair = nullptr;
    check(rlc_load_coloring(ve_coloring.c_str(), &tree, &pair));
    rlc_report* report = nullptr;
    if (tree) {
      if (ve_mode == "exhaustive")
        check(rlc_verify_tree_exhaustive(tree, ve_n, ve_t, ve_budget,
                                         ve_workers, &report));
      else
        check(rlc_verify_tree_sampled(tree, ve_n, ve_t, ve_samples, ve_seed,
                                      ve_budget, ve_workers, &report));
      rlc_tree_free(tree);
    } else {
      if (ve_mode == "exhaustive")
        check(rlc_verify_pair_exhaustive(pair, ve_n, ve_t, ve_budget,
                                         ve_workers, &report));
      else
        check(rlc_verify_pair_sampled(pair, ve_n, ve_t, ve_samples, ve_seed,
                                      ve_budget, ve_workers, &report));
      rlc_pair_coloring_free(pair);
    }
    return emit_report(report, true);
  }

  if (*cmd_props) {
    uint32_t property = pr_check == "I" || pr_check == "1"    ? 1
                        : pr_check == "II" || pr_check == "2" ? 2
                                                              : 3;
    rlc_report* report = nullptr;
    check(rlc_property_check(property, pr_radix.c_str(), pr_digits,
                             pr_mode == "exhaustive" ? 1 : 0, pr_samples,
                             pr_chain, pr_seed, pr_budget, &report));
    return emit_report(report, true);
  }

  if (*cmd_stepdown) {
    rlc_tree* tree = nullptr;
    check(rlc_tree_read_file(sd_tree.c_str(), &tree));
    StringList chain(split_commas(sd_chain));
    char* json = nullptr;
    check(rlc_stepdown_extract(tree, chain.data(), chain.size(), &json));
    rlc_tree_free(tree);
    std::cout << take_string(json);
    return 0;
  }

  if (*cmd_oracle) {
    if (*cmd_om) {
      rlc_tree* tree = nullptr;
      check(rlc_tree_read_file(om_tree.c_str(), &tree));
      rlc_triple_coloring* coloring = nullptr;
      check(rlc_materialize(tree, om_limit, &coloring));
      rlc_tree_free(tree);
      check(rlc_triple_write_file(coloring, om_out.c_str()));
      uint64_t n = 0;
      check(rlc_triple_num_vertices(coloring, &n));
      rlc_triple_coloring_free(coloring);
      if (g_json)
        std::cout << nlohmann::json{{"out", om_out}, {"n", n}}.dump(2) << "\n";
      else
        std::cout << "wrote explicit coloring of " << n << " vertices to "
                  << om_out << "\n";
      return 0;
    }
    if (*cmd_os) {
      int sat = 0;
      rlc_pair_coloring* pair = nullptr;
      rlc_triple_coloring* triple = nullptr;
      check(rlc_oracle_search(os_n_universe, os_q, os_t, os_n, os_arity,
                              os_budget, os_order_seed, &sat, &pair, &triple));
      if (g_json)
        std::cout << nlohmann::json{{"sat", sat != 0}}.dump(2) << "\n";
      else
        std::cout << (sat ? "sat" : "unsat") << "\n";
      if (sat && !os_out.empty()) {
        if (pair) check(rlc_pair_write_file(pair, os_out.c_str()));
        if (triple) check(rlc_triple_write_file(triple, os_out.c_str()));
      }
      rlc_pair_coloring_free(pair);
      rlc_triple_coloring_free(triple);
      return 0;
    }
    if (*cmd_of) {
      int found = 0, capped = 0;
      uint64_t best = 0;
      rlc_triple_coloring* witness = nullptr;
      check(rlc_oracle_exact_f(of_q, of_t, of_n, of_nmax, of_budget, &found,
                               &best, &capped, &witness));
      if (g_json) {
        nlohmann::json doc;
        doc["found"] = found != 0;
        if (found) doc["best"] = best;
        doc["capped"] = capped != 0;
        std::cout << doc.dump(2) << "\n";
      } else if (found) {
        std::cout << "best = " << best << (capped ? " (capped at max-N)" : "")
                  << "\n";
      } else {
        std::cout << "unsat at n\n";
      }
      if (witness && !of_out.empty())
        check(rlc_triple_write_file(witness, of_out.c_str()));
      rlc_triple_coloring_free(witness);
      return 0;
    }
  }

  std::cerr << "error: no subcommand\n";
  return kExitUsage;
}
