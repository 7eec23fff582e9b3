#pragma once

// Construction-tree files: JSON documents describing how a lifted coloring is
// assembled. Base colorings are either inlined as RLC1 text or referenced by
// path together with an FNV-1a content hash, so a verification run notices
// when a referenced base file changed underneath it.

#include <string>

#include "lifted.hpp"

namespace rlc {

// Parses a tree JSON document. Referenced paths resolve relative to
// `base_dir`; hashes are recomputed and must match. Documents of type
// "nominal" are size-only plans and are rejected here.
LiftedPtr parse_tree(const std::string& json_text, const std::string& base_dir);

// Reads either a tree JSON file or a bare RLC1 triple coloring (wrapped as an
// explicit leaf).
LiftedPtr read_tree(const std::string& path);

// Self-contained document with every base inlined.
std::string tree_to_json(const Lifted& tree);
void write_tree(const std::string& path, const Lifted& tree);

// Reference-style documents for trees assembled from files on disk.
std::string binary_tree_ref_json(const std::string& pair_path);
std::string mixed_tree_ref_json(const std::string& pair_path,
                                const std::string& triple_path);

// Loads a coloring file of either kind: RLC1 pair, RLC1 triple (wrapped as an
// explicit leaf), or a tree document. Exactly one output is set.
struct LoadedColoring {
  LiftedPtr tree;                      // triple colorings of any form
  std::shared_ptr<PairColoring> pair;  // bare pair colorings
};
LoadedColoring load_coloring(const std::string& path);

}  // namespace rlc
