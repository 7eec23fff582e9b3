#include "subsets.hpp"

namespace rlc {

KSubsetIterator::KSubsetIterator(std::uint64_t n, std::uint32_t k)
    : n_(n), k_(k), done_(k > n || k == 0) {
  idx_.resize(k_);
  for (std::uint32_t i = 0; i < k_; ++i) idx_[i] = i;
}

bool KSubsetIterator::next() {
  if (done_) return false;
  std::uint32_t i = k_;
  while (i-- > 0) {
    if (idx_[i] != n_ - k_ + i) {
      ++idx_[i];
      for (std::uint32_t j = i + 1; j < k_; ++j) idx_[j] = idx_[j - 1] + 1;
      return true;
    }
  }
  done_ = true;
  return false;
}

}  // namespace rlc
