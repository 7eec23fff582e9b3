#pragma once

// Lexicographic k-subset enumeration over {0..N-1}.

#include <cstdint>
#include <vector>

#include "error.hpp"

namespace rlc {

class KSubsetIterator {
 public:
  KSubsetIterator(std::uint64_t n, std::uint32_t k);

  const std::vector<std::uint64_t>& current() const { return idx_; }
  // Advance to the next subset in lexicographic order; false when exhausted.
  bool next();
  bool done() const { return done_; }

 private:
  std::uint64_t n_;
  std::uint32_t k_;
  bool done_;
  std::vector<std::uint64_t> idx_;
};

}  // namespace rlc
