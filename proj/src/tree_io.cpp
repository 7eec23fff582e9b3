#include "tree_io.hpp"

#include <json.hpp>

#include <filesystem>

#include "coloring.hpp"

namespace rlc {

namespace {

using nlohmann::json;

std::string hash_hex(std::string_view bytes) {
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx",
           static_cast<unsigned long long>(fnv1a64(bytes)));
  return buf;
}

json ref_object(const std::string& path) {
  const std::string bytes = read_text_file(path);
  return json{{"path", path}, {"fnv1a64", hash_hex(bytes)}};
}

// Resolves an inline/path base reference to the raw RLC1 text.
std::string resolve_rlc_text(const json& ref, const std::string& base_dir) {
  if (!ref.is_object())
    fail(ErrorCode::format_error, "base reference must be an object");
  if (ref.contains("inline")) {
    if (!ref["inline"].is_string())
      fail(ErrorCode::format_error, "inline base must be a string");
    return ref["inline"].get<std::string>();
  }
  if (!ref.contains("path") || !ref["path"].is_string())
    fail(ErrorCode::format_error, "base reference needs 'inline' or 'path'");
  std::filesystem::path p = ref["path"].get<std::string>();
  if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
  const std::string bytes = read_text_file(p.string());
  if (ref.contains("fnv1a64")) {
    if (!ref["fnv1a64"].is_string() ||
        ref["fnv1a64"].get<std::string>() != hash_hex(bytes))
      fail(ErrorCode::format_error,
           "content hash mismatch for '" + p.string() +
               "' (stale or modified base file)");
  }
  return bytes;
}

json parse_json(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded())
    fail(ErrorCode::format_error, "not a valid JSON document");
  return doc;
}

LiftedPtr tree_from_json(const json& doc, const std::string& base_dir) {
  if (!doc.is_object() || !doc.contains("type") || !doc["type"].is_string())
    fail(ErrorCode::format_error, "tree node needs a 'type' string");
  const std::string type = doc["type"].get<std::string>();
  if (type == "nominal")
    fail(ErrorCode::unsupported,
         "nominal plans carry sizes only and cannot be evaluated");
  if (type == "explicit") {
    if (!doc.contains("coloring"))
      fail(ErrorCode::format_error, "explicit node needs 'coloring'");
    return Lifted::make_explicit(
        TripleColoring::parse(resolve_rlc_text(doc["coloring"], base_dir)));
  }
  if (type == "binary_stepup") {
    if (!doc.contains("base"))
      fail(ErrorCode::format_error, "binary_stepup node needs 'base'");
    return Lifted::make_binary(
        PairColoring::parse(resolve_rlc_text(doc["base"], base_dir)));
  }
  if (type == "mixed_stepup") {
    if (!doc.contains("pair_base") || !doc.contains("triple_base"))
      fail(ErrorCode::format_error,
           "mixed_stepup node needs 'pair_base' and 'triple_base'");
    PairColoring pair_base =
        PairColoring::parse(resolve_rlc_text(doc["pair_base"], base_dir));
    const json& tb = doc["triple_base"];
    LiftedPtr triple_base;
    if (tb.is_object() && tb.contains("type")) {
      triple_base = tree_from_json(tb, base_dir);
    } else {
      const std::string text = resolve_rlc_text(tb, base_dir);
      if (text.rfind("RLC1 triple", 0) == 0)
        triple_base = Lifted::make_explicit(TripleColoring::parse(text));
      else
        triple_base = tree_from_json(parse_json(text), base_dir);
    }
    return Lifted::make_mixed(std::move(pair_base), std::move(triple_base));
  }
  fail(ErrorCode::format_error, "unknown tree node type '" + type + "'");
}

json tree_to_json_node(const Lifted& tree) {
  switch (tree.kind()) {
    case Lifted::Kind::explicit_leaf:
      return json{{"type", "explicit"},
                  {"coloring", json{{"inline", tree.leaf().serialize()}}}};
    case Lifted::Kind::binary_stepup:
      return json{{"type", "binary_stepup"},
                  {"base", json{{"inline", tree.binary_base().serialize()}}}};
    case Lifted::Kind::mixed_stepup:
      return json{
          {"type", "mixed_stepup"},
          {"pair_base", json{{"inline", tree.mixed_pair_base().serialize()}}},
          {"triple_base", tree_to_json_node(*tree.mixed_triple_base())}};
  }
  fail(ErrorCode::internal, "unreachable");
}

}  // namespace

LiftedPtr parse_tree(const std::string& json_text, const std::string& base_dir) {
  return tree_from_json(parse_json(json_text), base_dir);
}

LiftedPtr read_tree(const std::string& path) {
  const std::string text = read_text_file(path);
  if (text.rfind("RLC1 triple", 0) == 0)
    return Lifted::make_explicit(TripleColoring::parse(text));
  const std::string dir = std::filesystem::path(path).parent_path().string();
  return parse_tree(text, dir);
}

std::string tree_to_json(const Lifted& tree) {
  return tree_to_json_node(tree).dump(2) + "\n";
}

void write_tree(const std::string& path, const Lifted& tree) {
  write_text_file(path, tree_to_json(tree));
}

std::string binary_tree_ref_json(const std::string& pair_path) {
  json doc{{"type", "binary_stepup"}, {"base", ref_object(pair_path)}};
  return doc.dump(2) + "\n";
}

std::string mixed_tree_ref_json(const std::string& pair_path,
                                const std::string& triple_path) {
  const std::string triple_text = read_text_file(triple_path);
  json doc{{"type", "mixed_stepup"}, {"pair_base", ref_object(pair_path)}};
  doc["triple_base"] = json{{"path", triple_path},
                            {"fnv1a64", hash_hex(triple_text)}};
  return doc.dump(2) + "\n";
}

LoadedColoring load_coloring(const std::string& path) {
  const std::string text = read_text_file(path);
  LoadedColoring out;
  if (text.rfind("RLC1 pair", 0) == 0) {
    out.pair = std::make_shared<PairColoring>(PairColoring::parse(text));
    return out;
  }
  if (text.rfind("RLC1 triple", 0) == 0) {
    out.tree = Lifted::make_explicit(TripleColoring::parse(text));
    return out;
  }
  const std::string dir = std::filesystem::path(path).parent_path().string();
  out.tree = parse_tree(text, dir);
  return out;
}

}  // namespace rlc
