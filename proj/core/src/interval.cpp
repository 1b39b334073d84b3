#include "hyperis/interval.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <vector>

#include "hyperis/errors.hpp"

namespace hyperis {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    mpfr_set_prec(lo_, other.prec_);
    mpfr_set_prec(hi_, other.prec_);
    prec_ = other.prec_;
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  if (this != &other) {
    prec_ = other.prec_;
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
  }
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::exact_int(long v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_si(r.lo_, v, MPFR_RNDD);
  mpfr_set_si(r.hi_, v, MPFR_RNDU);
  return r;
}

Interval Interval::exact_rational(const mpq_class& q, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::exact_double(double v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_d(r.lo_, v, MPFR_RNDD);
  mpfr_set_d(r.hi_, v, MPFR_RNDU);
  return r;
}

Interval Interval::point(const mpfr_t v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set(r.lo_, v, MPFR_RNDD);
  mpfr_set(r.hi_, v, MPFR_RNDU);
  return r;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  // Sign-agnostic: take the extrema of the four endpoint products, each
  // computed once rounded down and once rounded up.
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_t t;
  mpfr_init2(t, r.prec_);

  const mpfr_srcptr as[2] = {a.lo_, a.hi_};
  const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
  bool first = true;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      mpfr_mul(t, as[i], bs[j], MPFR_RNDD);
      if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, as[i], bs[j], MPFR_RNDU);
      if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0) {
    throw PrecisionExhausted("interval division: divisor not sign-definite");
  }
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_t t;
  mpfr_init2(t, r.prec_);

  const mpfr_srcptr as[2] = {a.lo_, a.hi_};
  const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
  bool first = true;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      mpfr_div(t, as[i], bs[j], MPFR_RNDD);
      if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_div(t, as[i], bs[j], MPFR_RNDU);
      if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return r;
}

Interval Interval::operator-() const {
  Interval r(prec_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval Interval::pow_ui(unsigned long e) const {
  assert(mpfr_sgn(lo_) >= 0 && "pow_ui expects a nonnegative base");
  Interval r(prec_);
  if (e == 0) {
    mpfr_set_si(r.lo_, 1, MPFR_RNDD);
    mpfr_set_si(r.hi_, 1, MPFR_RNDU);
    return r;
  }
  mpfr_pow_ui(r.lo_, lo_, e, MPFR_RNDD);
  mpfr_pow_ui(r.hi_, hi_, e, MPFR_RNDU);
  return r;
}

Interval Interval::pow_monotone(const Interval& base, const Interval& exponent) {
  assert(mpfr_cmp_si(base.lo_, 1) >= 0 && "pow_monotone expects base >= 1");
  assert(mpfr_sgn(exponent.lo_) >= 0 && "pow_monotone expects exponent >= 0");
  Interval r(std::max(base.prec_, exponent.prec_));
  mpfr_pow(r.lo_, base.lo_, exponent.lo_, MPFR_RNDD);
  mpfr_pow(r.hi_, base.hi_, exponent.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::exp_of(const Interval& x) {
  Interval r(x.prec_);
  mpfr_exp(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

int Interval::certified_sign() const {
  if (mpfr_sgn(lo_) > 0) return 1;
  if (mpfr_sgn(hi_) < 0) return -1;
  return 0;
}

bool Interval::certainly_less(const Interval& b) const {
  return mpfr_cmp(hi_, b.lo_) < 0;
}

bool Interval::intersects(const Interval& b) const {
  return mpfr_cmp(lo_, b.hi_) <= 0 && mpfr_cmp(b.lo_, hi_) <= 0;
}

Interval Interval::intersect(const Interval& b) const {
  assert(intersects(b));
  Interval r(std::max(prec_, b.prec_));
  mpfr_set(r.lo_, mpfr_cmp(lo_, b.lo_) >= 0 ? lo_ : b.lo_, MPFR_RNDD);
  mpfr_set(r.hi_, mpfr_cmp(hi_, b.hi_) <= 0 ? hi_ : b.hi_, MPFR_RNDU);
  return r;
}

bool Interval::contains(double v) const {
  return mpfr_cmp_d(lo_, v) <= 0 && mpfr_cmp_d(hi_, v) >= 0;
}

double Interval::lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }

double Interval::upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::midpoint_double() const {
  mpfr_t mid;
  mpfr_init2(mid, prec_);
  mpfr_add(mid, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
  const double d = mpfr_get_d(mid, MPFR_RNDN);
  mpfr_clear(mid);
  return d;
}

double Interval::width_double() const {
  mpfr_t w;
  mpfr_init2(w, prec_);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  const double d = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return d;
}

std::string Interval::to_string(int digits) const {
  char buf[256];
  std::string out = "[";
  mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, lo_);
  out += buf;
  out += ", ";
  mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, hi_);
  out += buf;
  out += "]";
  return out;
}

}  // namespace hyperis
