#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace egf {

// Value-semantic arbitrary-precision real backed by MPFR.
//
// Every value carries its own precision. Binary operations round to the
// wider of the two operand precisions, with round-to-nearest-even
// throughout. There is no implicit default precision and no global state.
class Real {
 public:
  explicit Real(mpfr_prec_t prec);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real of_ui(unsigned long value, mpfr_prec_t prec);
  static Real of_si(long value, mpfr_prec_t prec);
  static Real of_double(double value, mpfr_prec_t prec);
  static Real of_integer(const mpz_class& value, mpfr_prec_t prec);
  static Real two_pow(long exponent, mpfr_prec_t prec);  // 2^exponent, exact
  static Real pi(mpfr_prec_t prec);

  mpfr_prec_t precision() const;

  // Copy rounded (or exactly widened) to the given precision.
  Real rounded_to(mpfr_prec_t prec) const;

  double to_double() const;
  long floor_to_long() const;  // floor(value); must fit in a long
  std::string str(int significant_digits) const;

  bool is_finite() const;
  int sign() const;

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

  Real operator-() const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);

  friend Real operator+(const Real& a, unsigned long b);
  friend Real operator-(const Real& a, unsigned long b);
  friend Real operator*(const Real& a, unsigned long b);
  friend Real operator/(const Real& a, unsigned long b);
  friend Real operator/(unsigned long a, const Real& b);
  friend Real operator+(const Real& a, const mpz_class& b);

  friend bool operator<(const Real& a, const Real& b);
  friend bool operator<=(const Real& a, const Real& b);
  friend bool operator>(const Real& a, const Real& b);
  friend bool operator>=(const Real& a, const Real& b);
  friend bool operator==(const Real& a, const Real& b);
  friend bool operator!=(const Real& a, const Real& b);

 private:
  mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);

// base^exponent for a machine-integer base.
Real pow(unsigned long base, const Real& exponent);

}  // namespace egf
