#include "egf/real.hpp"

#include <algorithm>

#include "egf/errors.hpp"

namespace egf {

Real::Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }

Real::Real(const Real& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::of_ui(unsigned long value, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_ui(r.v_, value, MPFR_RNDN);
  return r;
}

Real Real::of_si(long value, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_si(r.v_, value, MPFR_RNDN);
  return r;
}

Real Real::of_double(double value, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_d(r.v_, value, MPFR_RNDN);
  return r;
}

Real Real::of_integer(const mpz_class& value, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_z(r.v_, value.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real Real::two_pow(long exponent, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_ui_2exp(r.v_, 1, exponent, MPFR_RNDN);
  return r;
}

Real Real::pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

mpfr_prec_t Real::precision() const { return mpfr_get_prec(v_); }

Real Real::rounded_to(mpfr_prec_t prec) const {
  Real r(prec);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

double Real::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

long Real::floor_to_long() const {
  if (!mpfr_fits_slong_p(v_, MPFR_RNDD))
    throw PrecisionError("floor does not fit in a machine integer");
  return mpfr_get_si(v_, MPFR_RNDD);
}

std::string Real::str(int significant_digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", significant_digits, v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

bool Real::is_finite() const { return mpfr_number_p(v_) != 0; }

int Real::sign() const { return mpfr_sgn(v_); }

Real Real::operator-() const {
  Real r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

namespace {
mpfr_prec_t wider(const Real& a, const Real& b) {
  return std::max(a.precision(), b.precision());
}
}  // namespace

Real operator+(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, unsigned long b) {
  Real r(a.precision());
  mpfr_add_ui(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, unsigned long b) {
  Real r(a.precision());
  mpfr_sub_ui(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, unsigned long b) {
  Real r(a.precision());
  mpfr_mul_ui(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, unsigned long b) {
  Real r(a.precision());
  mpfr_div_ui(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}

Real operator/(unsigned long a, const Real& b) {
  Real r(b.precision());
  mpfr_ui_div(r.raw(), a, b.raw(), MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, const mpz_class& b) {
  Real r(a.precision());
  mpfr_add_z(r.raw(), a.raw(), b.get_mpz_t(), MPFR_RNDN);
  return r;
}

bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.raw(), b.raw()) != 0; }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.raw(), b.raw()) != 0; }
bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.raw(), b.raw()) != 0; }
bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
bool operator!=(const Real& a, const Real& b) { return !(a == b); }

namespace {
template <typename F>
Real unary(const Real& x, F f) {
  Real r(x.precision());
  f(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
}  // namespace

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real log1p(const Real& x) { return unary(x, mpfr_log1p); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real expm1(const Real& x) { return unary(x, mpfr_expm1); }

Real pow(unsigned long base, const Real& exponent) {
  Real r(exponent.precision());
  mpfr_ui_pow(r.raw(), base, exponent.raw(), MPFR_RNDN);
  return r;
}

}  // namespace egf
