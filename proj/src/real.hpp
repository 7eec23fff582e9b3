#pragma once

// Thin RAII wrapper over MPFR at a fixed working precision, plus Log2Value,
// the "exact rational when possible, high-precision real otherwise" carrier
// used by the bound calculators.

#include <mpfr.h>

#include <cstdint>
#include <optional>
#include <string>

#include "bigint.hpp"

namespace rlc {

class Real {
 public:
  static constexpr mpfr_prec_t kPrecision = 256;

  Real();
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(Real other) noexcept;
  ~Real();

  explicit Real(std::uint64_t v);
  explicit Real(const BigInt& v);
  explicit Real(const BigRat& v);

  Real operator+(const Real& rhs) const;
  Real operator-(const Real& rhs) const;
  Real operator*(const Real& rhs) const;
  Real operator/(const Real& rhs) const;

  Real log2() const;      // requires positive value
  Real exp2() const;      // 2^x
  Real root(unsigned long k) const;  // k-th root, requires non-negative
  int cmp(const Real& rhs) const;

  bool operator<(const Real& rhs) const { return cmp(rhs) < 0; }
  bool operator<=(const Real& rhs) const { return cmp(rhs) <= 0; }
  bool operator>(const Real& rhs) const { return cmp(rhs) > 0; }

  double to_double() const;
  // Scientific decimal with the given number of significant digits.
  std::string to_string(int significant_digits = 50) const;

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  mpfr_t v_;
};

// log2 of a bound: exact rational whenever the evaluation stayed in Q,
// always accompanied by a 256-bit real for display and numeric work.
struct Log2Value {
  std::optional<BigRat> exact;
  Real approx;

  bool is_exact() const { return exact.has_value(); }
  // "p/q" (canonical) when exact, otherwise 50 significant digits.
  std::string to_string() const;
};

Log2Value exact_log2_value(const BigRat& value);

}  // namespace rlc
