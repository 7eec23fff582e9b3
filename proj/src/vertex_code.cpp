#include "vertex_code.hpp"

namespace rlc {

VertexCode::VertexCode(BigInt value, BigInt radix, std::size_t num_digits)
    : value_(std::move(value)), radix_(std::move(radix)) {
  require(radix_ >= 2, ErrorCode::invalid_argument, "radix must be >= 2");
  require(num_digits >= 1, ErrorCode::invalid_argument,
          "num_digits must be >= 1");
  require(sgn(value_) >= 0, ErrorCode::invalid_argument,
          "vertex values are non-negative");
  digits_.reserve(num_digits);
  BigInt rest = value_;
  for (std::size_t i = 0; i < num_digits; ++i) {
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rest.get_mpz_t(),
                radix_.get_mpz_t());
    digits_.push_back(std::move(r));
    rest = std::move(q);
  }
  require(sgn(rest) == 0, ErrorCode::out_of_universe,
          "value " + value_.get_str() + " needs more than " +
              std::to_string(num_digits) + " base-" + radix_.get_str() +
              " digits");
}

const BigInt& VertexCode::digit(std::size_t i) const {
  require(i < digits_.size(), ErrorCode::invalid_argument,
          "digit index " + std::to_string(i) + " out of range [0, " +
              std::to_string(digits_.size()) + ")");
  return digits_[i];
}

VertexCode VertexCode::from_digits(const std::vector<BigInt>& digits,
                                   const BigInt& radix) {
  require(!digits.empty(), ErrorCode::invalid_argument, "no digits");
  BigInt value = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    require(sgn(digits[i]) >= 0 && digits[i] < radix,
            ErrorCode::invalid_argument, "digit out of range for radix");
    value = value * radix + digits[i];
  }
  return VertexCode(std::move(value), radix, digits.size());
}

}  // namespace rlc
