#include "coloring.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace rlc {

namespace {

constexpr std::uint64_t kMaxExplicitEntries = 1ull << 28;

std::uint64_t choose2(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

std::uint64_t choose3(std::uint64_t n) {
  if (n < 3) return 0;
  unsigned __int128 p = static_cast<unsigned __int128>(n) * (n - 1) * (n - 2);
  return static_cast<std::uint64_t>(p / 6);
}

struct LineReader {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line_no = 0;

  bool next(std::string_view& line) {
    if (pos >= text.size()) return false;
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos)
      fail(ErrorCode::format_error, "missing trailing newline");
    line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    return true;
  }
};

std::uint64_t parse_u64_token(std::string_view& s, const char* what) {
  std::size_t start = 0;
  while (start < s.size() && s[start] == ' ') ++start;
  std::size_t end = start;
  while (end < s.size() && s[end] != ' ') ++end;
  std::uint64_t value = 0;
  auto token = s.substr(start, end - start);
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty())
    fail(ErrorCode::format_error,
         std::string("bad ") + what + " token: '" + std::string(token) + "'");
  s = s.substr(end);
  return value;
}

void expect_exhausted(std::string_view s) {
  for (char c : s)
    if (c != ' ') fail(ErrorCode::format_error, "trailing characters on line");
}

}  // namespace

// ---------------------------------------------------------------------------
// PairColoring

PairColoring::PairColoring(std::uint64_t num_vertices, std::uint32_t num_colors,
                           std::vector<ColorId> colors)
    : num_vertices_(num_vertices),
      num_colors_(num_colors),
      colors_(std::move(colors)) {
  require(num_vertices_ >= 2, ErrorCode::invalid_argument,
          "pair coloring needs at least 2 vertices");
  require(num_vertices_ <= (1ull << 21), ErrorCode::universe_too_large,
          "explicit pair coloring too large");
  require(num_colors_ >= 1, ErrorCode::invalid_argument, "need q >= 1");
  require(choose2(num_vertices_) <= kMaxExplicitEntries,
          ErrorCode::universe_too_large, "explicit pair coloring too large");
  require(colors_.size() == choose2(num_vertices_), ErrorCode::invalid_argument,
          "expected C(N,2) color entries");
  for (ColorId c : colors_)
    require(c < num_colors_, ErrorCode::invalid_argument,
            "color index out of palette");
}

std::uint64_t PairColoring::rank(std::uint64_t i, std::uint64_t j) {
  return choose2(j) + i;
}

ColorId PairColoring::color(std::uint64_t i, std::uint64_t j) const {
  require(i != j, ErrorCode::invalid_argument,
          "pair coloring queried on a diagonal pair");
  if (i > j) std::swap(i, j);
  require(j < num_vertices_, ErrorCode::out_of_universe,
          "pair vertex out of range");
  return colors_[rank(i, j)];
}

std::string PairColoring::serialize() const {
  std::ostringstream out;
  out << "RLC1 pair " << num_vertices_ << " " << num_colors_ << "\n";
  for (std::uint64_t i = 0; i + 1 < num_vertices_; ++i)
    for (std::uint64_t j = i + 1; j < num_vertices_; ++j)
      out << i << " " << j << " " << colors_[rank(i, j)] << "\n";
  return out.str();
}

PairColoring PairColoring::parse(std::string_view text) {
  LineReader reader{text};
  std::string_view header;
  if (!reader.next(header)) fail(ErrorCode::format_error, "empty file");
  if (header.substr(0, 10) != "RLC1 pair ")
    fail(ErrorCode::format_error, "expected 'RLC1 pair' header");
  std::string_view rest = header.substr(9);
  std::uint64_t n = parse_u64_token(rest, "vertex count");
  std::uint64_t q = parse_u64_token(rest, "color count");
  expect_exhausted(rest);
  require(n >= 2 && n <= (1ull << 21) && choose2(n) <= kMaxExplicitEntries,
          ErrorCode::format_error, "bad vertex count");

  std::vector<ColorId> colors(choose2(n));
  for (std::uint64_t i = 0; i + 1 < n; ++i) {
    for (std::uint64_t j = i + 1; j < n; ++j) {
      std::string_view line;
      if (!reader.next(line))
        fail(ErrorCode::format_error, "truncated pair coloring");
      std::uint64_t fi = parse_u64_token(line, "vertex");
      std::uint64_t fj = parse_u64_token(line, "vertex");
      std::uint64_t fc = parse_u64_token(line, "color");
      expect_exhausted(line);
      if (fi != i || fj != j)
        fail(ErrorCode::format_error,
             "line " + std::to_string(reader.line_no) +
                 ": tuples must appear in lexicographic order");
      if (fc >= q) fail(ErrorCode::format_error, "color out of palette");
      colors[rank(i, j)] = static_cast<ColorId>(fc);
    }
  }
  std::string_view extra;
  if (reader.next(extra))
    fail(ErrorCode::format_error, "trailing lines after coloring");
  return PairColoring(n, static_cast<std::uint32_t>(q), std::move(colors));
}

PairColoring PairColoring::read_file(const std::string& path) {
  return parse(read_text_file(path));
}

void PairColoring::write_file(const std::string& path) const {
  write_text_file(path, serialize());
}

// ---------------------------------------------------------------------------
// TripleColoring

TripleColoring::TripleColoring(std::uint64_t num_vertices,
                               std::uint32_t num_colors,
                               std::vector<ColorId> colors)
    : num_vertices_(num_vertices),
      num_colors_(num_colors),
      colors_(std::move(colors)) {
  require(num_vertices_ >= 3, ErrorCode::invalid_argument,
          "triple coloring needs at least 3 vertices");
  require(num_vertices_ <= (1ull << 21), ErrorCode::universe_too_large,
          "explicit triple coloring too large");
  require(num_colors_ >= 1, ErrorCode::invalid_argument, "need q >= 1");
  require(choose3(num_vertices_) <= kMaxExplicitEntries,
          ErrorCode::universe_too_large, "explicit triple coloring too large");
  require(colors_.size() == choose3(num_vertices_), ErrorCode::invalid_argument,
          "expected C(N,3) color entries");
  for (ColorId c : colors_)
    require(c < num_colors_, ErrorCode::invalid_argument,
            "color index out of palette");
}

std::uint64_t TripleColoring::rank(std::uint64_t i, std::uint64_t j,
                                   std::uint64_t k) {
  return choose3(k) + choose2(j) + i;
}

ColorId TripleColoring::color(std::uint64_t i, std::uint64_t j,
                              std::uint64_t k) const {
  std::uint64_t a = i, b = j, c = k;
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  require(a != b && b != c, ErrorCode::invalid_argument,
          "triple coloring queried with repeated vertices");
  require(c < num_vertices_, ErrorCode::out_of_universe,
          "triple vertex out of range");
  return colors_[rank(a, b, c)];
}

TripleColoring TripleColoring::with_palette(std::uint32_t num_colors) const {
  require(num_colors >= num_colors_, ErrorCode::invalid_argument,
          "palette can only grow");
  return TripleColoring(num_vertices_, num_colors, colors_);
}

std::string TripleColoring::serialize() const {
  std::ostringstream out;
  out << "RLC1 triple " << num_vertices_ << " " << num_colors_ << "\n";
  for (std::uint64_t i = 0; i + 2 < num_vertices_; ++i)
    for (std::uint64_t j = i + 1; j + 1 < num_vertices_; ++j)
      for (std::uint64_t k = j + 1; k < num_vertices_; ++k)
        out << i << " " << j << " " << k << " " << colors_[rank(i, j, k)]
            << "\n";
  return out.str();
}

TripleColoring TripleColoring::parse(std::string_view text) {
  LineReader reader{text};
  std::string_view header;
  if (!reader.next(header)) fail(ErrorCode::format_error, "empty file");
  if (header.substr(0, 12) != "RLC1 triple ")
    fail(ErrorCode::format_error, "expected 'RLC1 triple' header");
  std::string_view rest = header.substr(11);
  std::uint64_t n = parse_u64_token(rest, "vertex count");
  std::uint64_t q = parse_u64_token(rest, "color count");
  expect_exhausted(rest);
  require(n >= 3 && n <= (1ull << 21) && choose3(n) <= kMaxExplicitEntries,
          ErrorCode::format_error, "bad vertex count");

  std::vector<ColorId> colors(choose3(n));
  for (std::uint64_t i = 0; i + 2 < n; ++i) {
    for (std::uint64_t j = i + 1; j + 1 < n; ++j) {
      for (std::uint64_t k = j + 1; k < n; ++k) {
        std::string_view line;
        if (!reader.next(line))
          fail(ErrorCode::format_error, "truncated triple coloring");
        std::uint64_t fi = parse_u64_token(line, "vertex");
        std::uint64_t fj = parse_u64_token(line, "vertex");
        std::uint64_t fk = parse_u64_token(line, "vertex");
        std::uint64_t fc = parse_u64_token(line, "color");
        expect_exhausted(line);
        if (fi != i || fj != j || fk != k)
          fail(ErrorCode::format_error,
               "line " + std::to_string(reader.line_no) +
                   ": tuples must appear in lexicographic order");
        if (fc >= q) fail(ErrorCode::format_error, "color out of palette");
        colors[rank(i, j, k)] = static_cast<ColorId>(fc);
      }
    }
  }
  std::string_view extra;
  if (reader.next(extra))
    fail(ErrorCode::format_error, "trailing lines after coloring");
  return TripleColoring(n, static_cast<std::uint32_t>(q), std::move(colors));
}

TripleColoring TripleColoring::read_file(const std::string& path) {
  return parse(read_text_file(path));
}

void TripleColoring::write_file(const std::string& path) const {
  write_text_file(path, serialize());
}

// ---------------------------------------------------------------------------

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::io_error, "cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!in.good() && !in.eof())
    fail(ErrorCode::io_error, "read failure on '" + path + "'");
  return buf.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::io_error, "cannot open '" + path + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out.good()) fail(ErrorCode::io_error, "write failure on '" + path + "'");
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

}  // namespace rlc
