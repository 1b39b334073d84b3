#include <doctest.h>

#include <gmpxx.h>

#include "hyperis/errors.hpp"
#include "hyperis/interval.hpp"
#include "hyperis/rng.hpp"

using hyperis::Interval;

namespace {

bool contains_rational(const Interval& i, const mpq_class& q) {
  const Interval probe = Interval::exact_rational(q, 512);
  return mpfr_cmp(i.lo(), probe.hi()) <= 0 && mpfr_cmp(probe.lo(), i.hi()) <= 0;
}

}  // namespace

TEST_CASE("exact construction and sign") {
  const auto five = Interval::exact_int(5, 64);
  CHECK(five.certified_sign() == 1);
  CHECK(five.lower_double() == 5.0);
  CHECK(five.upper_double() == 5.0);

  const auto neg = Interval::exact_rational(mpq_class(-3, 7), 64);
  CHECK(neg.certified_sign() == -1);

  const auto zero = Interval::exact_int(0, 64);
  CHECK(zero.certified_sign() == 0);
}

TEST_CASE("arithmetic always encloses the exact rational result") {
  hyperis::SplitMix64 rng(20);
  for (int trial = 0; trial < 200; ++trial) {
    const auto draw = [&] {
      const long num = static_cast<long>(rng.below(2001)) - 1000;
      const long den = 1 + static_cast<long>(rng.below(50));
      return mpq_class(num, den);
    };
    mpq_class a = draw(), b = draw(), c = draw();
    const Interval ia = Interval::exact_rational(a, 64);
    const Interval ib = Interval::exact_rational(b, 64);
    const Interval ic = Interval::exact_rational(c, 64);

    CHECK(contains_rational(ia + ib, a + b));
    CHECK(contains_rational(ia - ib, a - b));
    CHECK(contains_rational(ia * ib, a * b));
    CHECK(contains_rational((ia + ib) * ic, (a + b) * c));
    if (c > 0) {
      CHECK(contains_rational(ia / ic, a / c));
    }
  }
}

TEST_CASE("division requires a sign-definite divisor") {
  const auto one = Interval::exact_int(1, 64);
  const auto three = Interval::exact_int(3, 64);
  const auto third = Interval::exact_rational(mpq_class(1, 3), 64);
  const auto around_zero = one - third * three;  // encloses zero by rounding
  CHECK(around_zero.certified_sign() == 0);
  CHECK_THROWS_AS(one / around_zero, hyperis::PrecisionExhausted);
  CHECK_THROWS_AS(one / (one - one), hyperis::PrecisionExhausted);
}

TEST_CASE("integer powers") {
  const auto x = Interval::exact_rational(mpq_class(11, 10), 128);
  const Interval p = x.pow_ui(10);
  mpq_class exact(11, 10);
  mpq_class result = 1;
  for (int i = 0; i < 10; ++i) result *= exact;
  CHECK(contains_rational(p, result));
  CHECK(p.width_double() < 1e-30);

  CHECK(contains_rational(x.pow_ui(0), 1));
  CHECK(contains_rational(Interval::exact_int(0, 64).pow_ui(0), 1));
}

TEST_CASE("exp and monotone pow") {
  const auto one = Interval::exact_int(1, 128);
  const Interval e = Interval::exp_of(one);
  CHECK(e.lower_double() > 2.718281828459044);
  CHECK(e.upper_double() < 2.718281828459046);

  // (1 + 1/n)^n < e
  const auto n = Interval::exact_int(1000, 128);
  const Interval almost_e = Interval::pow_monotone(one + one / n, n);
  CHECK(almost_e.certainly_less(e));
}

TEST_CASE("precision drives width") {
  const mpq_class third(1, 3);
  const Interval coarse = Interval::exact_rational(third, 32);
  const Interval fine = Interval::exact_rational(third, 256);
  CHECK(fine.width_double() < coarse.width_double());
  CHECK(contains_rational(coarse, third));
  CHECK(contains_rational(fine, third));
}

TEST_CASE("intersection") {
  const auto a = Interval::exact_int(1, 64) / Interval::exact_int(3, 64);
  const auto b = Interval::exact_rational(mpq_class(1, 3), 128);
  REQUIRE(a.intersects(b));
  const Interval both = a.intersect(b);
  CHECK(contains_rational(both, mpq_class(1, 3)));
  CHECK(both.width_double() <= a.width_double());

  const auto far = Interval::exact_int(7, 64);
  CHECK_FALSE(a.intersects(far));
}
