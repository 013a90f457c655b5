#include "localh/bigfloat.hpp"

#include <stdexcept>
#include <utility>

namespace localh {

namespace {
long checked_prec(long bits) {
  if (bits < MPFR_PREC_MIN || bits > 1L << 24)
    throw std::invalid_argument("BigFloat: unsupported precision");
  return bits;
}
}  // namespace

BigFloat::BigFloat(long precision_bits) {
  mpfr_init2(v_, checked_prec(precision_bits));
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(BigFloat o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

long BigFloat::precision_bits() const noexcept { return mpfr_get_prec(v_); }

BigFloat BigFloat::pi(long precision_bits) {
  BigFloat out(precision_bits);
  mpfr_const_pi(out.v_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::from_rational(const Rational& q, long precision_bits) {
  BigFloat out(precision_bits);
  mpfr_set_q(out.v_, q.get_mpq_t(), MPFR_RNDN);
  return out;
}

BigFloat BigFloat::from_long(long v, long precision_bits) {
  BigFloat out(precision_bits);
  mpfr_set_si(out.v_, v, MPFR_RNDN);
  return out;
}

namespace {
long max_prec(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision_bits(), b.precision_bits());
}
}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat out(max_prec(a, b));
  mpfr_add(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat out(max_prec(a, b));
  mpfr_sub(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat out(max_prec(a, b));
  mpfr_mul(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat out(max_prec(a, b));
  mpfr_div(out.v_, a.v_, b.v_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::operator-() const {
  BigFloat out(precision_bits());
  mpfr_neg(out.v_, v_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::mul_ui(unsigned long v) const {
  BigFloat out(precision_bits());
  mpfr_mul_ui(out.v_, v_, v, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::div_ui(unsigned long v) const {
  BigFloat out(precision_bits());
  mpfr_div_ui(out.v_, v_, v, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::cos() const {
  BigFloat out(precision_bits());
  mpfr_cos(out.v_, v_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::sqr() const {
  BigFloat out(precision_bits());
  mpfr_sqr(out.v_, v_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::abs() const {
  BigFloat out(precision_bits());
  mpfr_abs(out.v_, v_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::mul_2exp(long e) const {
  BigFloat out(precision_bits());
  mpfr_mul_2si(out.v_, v_, e, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::add_rounded_up(const BigFloat& o) const {
  BigFloat out(max_prec(*this, o));
  mpfr_add(out.v_, v_, o.v_, MPFR_RNDU);
  return out;
}

BigFloat BigFloat::sub_rounded_down(const BigFloat& o) const {
  BigFloat out(max_prec(*this, o));
  mpfr_sub(out.v_, v_, o.v_, MPFR_RNDD);
  return out;
}

int BigFloat::sign() const noexcept { return mpfr_sgn(v_); }

int BigFloat::compare(const Rational& q) const noexcept {
  return mpfr_cmp_q(v_, q.get_mpq_t());
}

int BigFloat::compare(const BigFloat& o) const noexcept {
  return mpfr_cmp(v_, o.v_);
}

double BigFloat::to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }

std::string BigFloat::to_string(std::size_t digits) const {
  char* s = nullptr;
  if (mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), v_) < 0)
    throw std::runtime_error("BigFloat::to_string failed");
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

}  // namespace localh
