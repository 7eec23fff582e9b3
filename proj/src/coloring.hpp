#pragma once

// Explicitly stored base colorings. Entries live in a flat array indexed by
// the colexicographic rank of the sorted tuple, which gives O(1) access and a
// canonical serialization order.
//
// RLC1 text format (ASCII, LF newlines, bit-exact across runs):
//   RLC1 <pair|triple> <N> <q>
//   <i> <j> <c>          one line per pair, lexicographic tuple order
//   <i> <j> <k> <c>      one line per triple, lexicographic tuple order

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace rlc {

using ColorId = std::uint32_t;

class PairColoring {
 public:
  PairColoring(std::uint64_t num_vertices, std::uint32_t num_colors,
               std::vector<ColorId> colors);

  std::uint64_t num_vertices() const { return num_vertices_; }
  std::uint32_t num_colors() const { return num_colors_; }
  const std::vector<ColorId>& colors() const { return colors_; }

  // Unordered access; i == j is an error.
  ColorId color(std::uint64_t i, std::uint64_t j) const;

  static std::uint64_t rank(std::uint64_t i, std::uint64_t j);  // i < j

  std::string serialize() const;
  static PairColoring parse(std::string_view text);
  static PairColoring read_file(const std::string& path);
  void write_file(const std::string& path) const;

 private:
  std::uint64_t num_vertices_;
  std::uint32_t num_colors_;
  std::vector<ColorId> colors_;
};

class TripleColoring {
 public:
  TripleColoring(std::uint64_t num_vertices, std::uint32_t num_colors,
                 std::vector<ColorId> colors);

  std::uint64_t num_vertices() const { return num_vertices_; }
  std::uint32_t num_colors() const { return num_colors_; }
  const std::vector<ColorId>& colors() const { return colors_; }

  // Invariant under argument order; repeated vertices are an error.
  ColorId color(std::uint64_t i, std::uint64_t j, std::uint64_t k) const;

  static std::uint64_t rank(std::uint64_t i, std::uint64_t j,
                            std::uint64_t k);  // i < j < k

  // Same palette size, entries unchanged; used when a 3-color base is
  // embedded in a wider palette.
  TripleColoring with_palette(std::uint32_t num_colors) const;

  std::string serialize() const;
  static TripleColoring parse(std::string_view text);
  static TripleColoring read_file(const std::string& path);
  void write_file(const std::string& path) const;

 private:
  std::uint64_t num_vertices_;
  std::uint32_t num_colors_;
  std::vector<ColorId> colors_;
};

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

// FNV-1a over raw bytes; construction trees store this for referenced files.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace rlc
