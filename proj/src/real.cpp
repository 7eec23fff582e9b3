#include "real.hpp"

#include <utility>

namespace rlc {

Real::Real() { mpfr_init2(v_, kPrecision); mpfr_set_zero(v_, 1); }

Real::Real(const Real& other) {
  mpfr_init2(v_, kPrecision);
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, kPrecision);
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(Real other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real::Real(std::uint64_t v) : Real() {
  mpfr_set_ui(v_, static_cast<unsigned long>(v), MPFR_RNDN);
}

Real::Real(const BigInt& v) : Real() {
  mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const BigRat& v) : Real() {
  mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

Real Real::operator+(const Real& rhs) const {
  Real r;
  mpfr_add(r.v_, v_, rhs.v_, MPFR_RNDN);
  return r;
}

Real Real::operator-(const Real& rhs) const {
  Real r;
  mpfr_sub(r.v_, v_, rhs.v_, MPFR_RNDN);
  return r;
}

Real Real::operator*(const Real& rhs) const {
  Real r;
  mpfr_mul(r.v_, v_, rhs.v_, MPFR_RNDN);
  return r;
}

Real Real::operator/(const Real& rhs) const {
  Real r;
  mpfr_div(r.v_, v_, rhs.v_, MPFR_RNDN);
  return r;
}

Real Real::log2() const {
  require(mpfr_sgn(v_) > 0, ErrorCode::invalid_argument,
          "log2 of a non-positive value");
  Real r;
  mpfr_log2(r.v_, v_, MPFR_RNDN);
  return r;
}

Real Real::exp2() const {
  Real r;
  mpfr_exp2(r.v_, v_, MPFR_RNDN);
  return r;
}

Real Real::root(unsigned long k) const {
  require(mpfr_sgn(v_) >= 0, ErrorCode::invalid_argument,
          "root of a negative value");
  Real r;
  mpfr_rootn_ui(r.v_, v_, k, MPFR_RNDN);
  return r;
}

int Real::cmp(const Real& rhs) const { return mpfr_cmp(v_, rhs.v_); }

double Real::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

std::string Real::to_string(int significant_digits) const {
  char buf[256];
  mpfr_snprintf(buf, sizeof buf, "%.*Rg", significant_digits, v_);
  return buf;
}

std::string Log2Value::to_string() const {
  if (exact) return to_decimal(*exact);
  return approx.to_string(50);
}

Log2Value exact_log2_value(const BigRat& value) {
  BigRat c = value;
  c.canonicalize();
  return Log2Value{c, Real(c)};
}

}  // namespace rlc
