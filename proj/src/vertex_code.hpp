#pragma once

// A vertex of a lifted universe, viewed as a fixed-width number in a given
// radix. The same natural number is read in base 2 by the binary step-up and
// in base N3 by the mixed step-up, so the radix is part of the value.

#include <cstdint>
#include <vector>

#include "bigint.hpp"

namespace rlc {

class VertexCode {
 public:
  VertexCode(BigInt value, BigInt radix, std::size_t num_digits);

  const BigInt& value() const { return value_; }
  const BigInt& radix() const { return radix_; }
  std::size_t num_digits() const { return digits_.size(); }

  // i-th digit, least significant first.
  const BigInt& digit(std::size_t i) const;
  const std::vector<BigInt>& digits() const { return digits_; }

  static VertexCode from_digits(const std::vector<BigInt>& digits,
                                const BigInt& radix);

  friend bool operator==(const VertexCode& a, const VertexCode& b) {
    return a.value_ == b.value_;
  }
  friend bool operator<(const VertexCode& a, const VertexCode& b) {
    return a.value_ < b.value_;
  }

 private:
  BigInt value_;
  BigInt radix_;
  std::vector<BigInt> digits_;
};

}  // namespace rlc
