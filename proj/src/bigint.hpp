#pragma once

// Exact integer/rational arithmetic used throughout: universe sizes and
// vertex labels routinely exceed machine words, and all size formulas are
// required to be evaluated without floating point.

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "error.hpp"

namespace rlc {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt pow_big(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline BigInt pow2(unsigned long exp) { return pow_big(BigInt(2), exp); }

inline BigInt binomial(const BigInt& n, unsigned long k) {
  BigInt r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

// floor(x^(1/k)) for x >= 0.
inline BigInt iroot_floor(const BigInt& x, unsigned long k) {
  require(sgn(x) >= 0 && k >= 1, ErrorCode::invalid_argument,
          "iroot_floor requires x >= 0 and k >= 1");
  BigInt r;
  mpz_root(r.get_mpz_t(), x.get_mpz_t(), k);
  return r;
}

// floor(log2(n)) for n >= 1; exact (bit length minus one).
inline std::uint64_t floor_log2(const BigInt& n) {
  require(sgn(n) > 0, ErrorCode::invalid_argument, "floor_log2 requires n >= 1");
  return mpz_sizeinbase(n.get_mpz_t(), 2) - 1;
}

inline bool is_power_of_two(const BigInt& n) {
  return sgn(n) > 0 && mpz_popcount(n.get_mpz_t()) == 1;
}

inline bool fits_u64(const BigInt& n) {
  return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const BigInt& n) {
  require(fits_u64(n), ErrorCode::universe_too_large,
          "value does not fit in 64 bits: " + n.get_str());
  std::uint64_t lo = mpz_getlimbn(n.get_mpz_t(), 0);
  return sgn(n) == 0 ? 0 : lo;
}

inline BigInt parse_bigint(const std::string& text) {
  if (text.empty()) fail(ErrorCode::format_error, "empty integer literal");
  BigInt r;
  if (mpz_set_str(r.get_mpz_t(), text.c_str(), 10) != 0)
    fail(ErrorCode::format_error, "not a decimal integer: '" + text + "'");
  return r;
}

inline std::string to_decimal(const BigInt& n) { return n.get_str(); }

// Canonical "p" or "p/q" form.
inline std::string to_decimal(const BigRat& r) {
  BigRat c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace rlc
