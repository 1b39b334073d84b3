#pragma once

#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace hyperis {

/// Closed interval [lo, hi] with MPFR endpoints and outward rounding: every
/// operation rounds lo toward -inf and hi toward +inf, so the true real
/// value of an expression is always enclosed. This is what makes sign
/// checks certificates rather than estimates.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 64);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  static Interval exact_int(long v, mpfr_prec_t prec);
  static Interval exact_rational(const mpq_class& q, mpfr_prec_t prec);
  static Interval exact_double(double v, mpfr_prec_t prec);
  /// Point interval at an existing MPFR value (exact).
  static Interval point(const mpfr_t v, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return prec_; }
  const mpfr_t& lo() const { return lo_; }
  const mpfr_t& hi() const { return hi_; }

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  /// Divisor must be certified sign-definite; throws PrecisionExhausted
  /// when its enclosure straddles zero.
  friend Interval operator/(const Interval& a, const Interval& b);
  Interval operator-() const;

  /// x^e for nonnegative bases (monotone endpoint powers).
  Interval pow_ui(unsigned long e) const;
  /// x^y for base >= 1 and exponent >= 0, both monotone.
  static Interval pow_monotone(const Interval& base, const Interval& exponent);
  static Interval exp_of(const Interval& x);

  /// +1 when lo > 0, -1 when hi < 0, 0 when the enclosure straddles zero.
  int certified_sign() const;
  /// True iff a.hi < b.lo, i.e. a < b holds for all enclosed values.
  bool certainly_less(const Interval& b) const;
  bool intersects(const Interval& b) const;
  /// Tightest common enclosure; both must intersect.
  Interval intersect(const Interval& b) const;
  bool contains(double v) const;

  double lower_double() const;   // rounded down
  double upper_double() const;   // rounded up
  double midpoint_double() const;
  double width_double() const;   // rounded up

  std::string to_string(int digits = 20) const;

 private:
  mpfr_prec_t prec_;
  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace hyperis
