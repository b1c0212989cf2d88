#include <doctest.h>

#include "betaspec/numerics.hpp"

using namespace betaspec;

TEST_CASE("precision below 64 bits is a configuration error") {
  CHECK_THROWS_AS(Precision(63), Error);
  try {
    with_precision(32, [](Precision) { return 0; });
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::config);
  }
  CHECK(Precision().bits() == 256);
  CHECK(Precision::for_digits(50).bits() % 64 == 0);
  CHECK(Precision::for_digits(50).bits() >= 167 + 32);
}

TEST_CASE("one third at 64 bits is within 2^-62") {
  with_precision(64, [](Precision p) {
    const Real third = Real(1, p) / Real(3, p);
    const Real err = abs(third - Real(Rational(1, 3), Precision(512)));
    CHECK(err <= ldexp(Real(1, p), -62));
  });
}

TEST_CASE("4/3 - 1 at 256 bits is within 2^-254 of 1/3") {
  const Precision p(256);
  const Real x = Real(Rational(4, 3), p) - Real(1, p);
  CHECK(abs(x - Real(Rational(1, 3), Precision(1024))) <= ldexp(Real(1, p), -254));
}

TEST_CASE("geometric sum of 4/3^-i matches the exact rational value") {
  Rational exact = 0;
  Rational power = 1;
  const Rational inv(3, 4);
  const Precision p(256);
  Real approx(p);
  const Real inv_p(inv, p);
  Real power_p(1, p);
  for (int i = 1; i <= 400; ++i) {
    power *= inv;
    exact += power;
    power_p *= inv_p;
    approx += power_p;
  }
  CHECK(abs(approx - Real(exact, Precision(2048))) <= ldexp(Real(1, p), -200));
}

TEST_CASE("doubling precision never moves away from the exact value") {
  const Rational exact(22, 7);
  Real previous_err(1, Precision(64));
  for (unsigned long bits = 64; bits <= 2048; bits *= 2) {
    const Precision p(bits);
    const Real x = Real(22, p) / Real(7, p);
    const Real err = abs(x - Real(exact, Precision(4096)));
    CHECK(err <= previous_err);
    previous_err = err.at(Precision(64));
  }
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("4/3") == Rational(4, 3));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("1.25") == Rational(5, 4));
  CHECK(parse_rational("-2.5e-3") == Rational(-1, 400));
  CHECK(parse_rational("12") == Rational(12));
  CHECK(parse_rational("1e2") == Rational(100));
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK(to_string(Rational(4)) == "4");
}

TEST_CASE("complex parsing and exact arithmetic") {
  const ExactComplex z = parse_exact_complex("1/2+3/4i");
  CHECK(z.re() == Rational(1, 2));
  CHECK(z.im() == Rational(3, 4));
  CHECK(parse_exact_complex("2-i") == ExactComplex(2, -1));
  CHECK(parse_exact_complex("i") == ExactComplex(0, 1));
  CHECK(parse_exact_complex("-0.5i") == ExactComplex(0, Rational(-1, 2)));
  CHECK(z * z.inverse() == ExactComplex(1));
  CHECK(pow(ExactComplex(0, 1), 4) == ExactComplex(1));
  CHECK(pow(ExactComplex(2), -3) == ExactComplex(Rational(1, 8)));
  CHECK(to_string(ExactComplex(1, -2)) == "1-2i");
}

TEST_CASE("decimal rendering") {
  const Precision p(256);
  CHECK(to_decimal(Real(Rational(1, 3), p), 5) == "0.33333");
  CHECK(to_decimal(Real(3, p), 10) == "3");
  CHECK(to_decimal(Real(-2.5, p), 10) == "-2.5");
  CHECK(to_decimal(Real(Rational(1, 3000000000UL), p), 3) == "3.33e-10");
  CHECK(to_decimal(Real(p), 5) == "0");
  CHECK(agreeing_digits(Real("3.14159", p), Real("3.14160", p)) == 5);
}

TEST_CASE("values carry their own precision") {
  const Real a(1, Precision(64));
  const Real b(1, Precision(512));
  CHECK((a + b).precision().bits() == 512);
  const Complex z(Real(3, Precision(128)), Real(4, Precision(128)));
  CHECK(abs(z) == Real(5, Precision(128)));
  CHECK(arg(Complex(Real(-1, Precision(128)))) == pi(Precision(128)));
}
