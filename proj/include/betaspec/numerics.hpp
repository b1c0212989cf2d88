#pragma once

// Scalar arithmetic used throughout the library.
//
//   Rational      exact rational (GMP mpq, always canonical)
//   ExactComplex  pair of Rationals; exact arithmetic over Q(i)
//   Real          MPFR value; precision is a property of each value
//   Complex       pair of Reals at a common precision
//
// Binary operations on Real/Complex produce a result at the larger of the
// operand precisions. There is no global precision state.

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <concepts>
#include <type_traits>
#include <complex>
#include <functional>
#include <string>
#include <string_view>
#include <utility>

#include "betaspec/error.hpp"

namespace betaspec {

/// Working precision in bits. Never below 64.
class Precision {
 public:
  static constexpr unsigned long kMinimum = 64;
  static constexpr unsigned long kDefault = 256;

  constexpr Precision() = default;
  explicit Precision(unsigned long bits);

  constexpr unsigned long bits() const noexcept { return bits_; }
  Precision doubled() const { return Precision(bits_ * 2); }

  /// Smallest precision (rounded up to a multiple of 64) able to carry
  /// `digits` decimal digits plus `guard_bits`.
  static Precision for_digits(unsigned digits, unsigned long guard_bits = 32);

  constexpr auto operator<=>(const Precision&) const = default;

 private:
  unsigned long bits_ = kDefault;
};

inline Precision max(Precision a, Precision b) { return a < b ? b : a; }

/// Runs `computation(precision)` after validating the requested bit count.
template <class F>
decltype(auto) with_precision(unsigned long bits, F&& computation) {
  return std::invoke(std::forward<F>(computation), Precision(bits));
}

// ---------------------------------------------------------------- rationals

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", an integer, or a decimal such as "-1.25e-3" into the exact
/// rational it denotes.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

Rational pow(const Rational& base, long exponent);

class ExactComplex {
 public:
  ExactComplex() = default;
  ExactComplex(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}
  ExactComplex(long re) : re_(re), im_(0) {}

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  /// |z|^2, exact.
  Rational norm() const { return re_ * re_ + im_ * im_; }
  ExactComplex conj() const { return {re_, -im_}; }
  ExactComplex inverse() const;

  ExactComplex& operator+=(const ExactComplex& o);
  ExactComplex& operator-=(const ExactComplex& o);
  ExactComplex& operator*=(const ExactComplex& o);
  ExactComplex& operator/=(const ExactComplex& o);

  friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
  friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
  friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
  friend ExactComplex operator/(ExactComplex a, const ExactComplex& b) { return a /= b; }
  friend ExactComplex operator-(const ExactComplex& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_ = 0;
  Rational im_ = 0;
};

ExactComplex pow(const ExactComplex& base, long exponent);

/// Accepts everything parse_rational does, plus complex literals
/// "a+bi", "a-bi", "bi" with rational/decimal parts.
ExactComplex parse_exact_complex(std::string_view text);

/// "p/q" for real values, "p/q+r/si" otherwise.
std::string to_string(const ExactComplex& value);

// --------------------------------------------------------------------- reals

class Real {
 public:
  explicit Real(Precision p);
  template <std::integral I>
  Real(I value, Precision p) : Real(p) {
    if constexpr (std::is_signed_v<I>) {
      mpfr_set_si(value_, static_cast<long>(value), MPFR_RNDN);
    } else {
      mpfr_set_ui(value_, static_cast<unsigned long>(value), MPFR_RNDN);
    }
  }
  Real(double value, Precision p);
  Real(const Rational& value, Precision p);
  Real(const Integer& value, Precision p);
  /// Decimal literal, correctly rounded to `p`.
  Real(std::string_view decimal, Precision p);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  /// Same value rounded (or exactly extended) to another precision.
  Real at(Precision p) const;

  Precision precision() const { return Precision(mpfr_get_prec(value_)); }

  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  /// Binary exponent e with 0.5 <= |x| / 2^e < 1; meaningless for zero.
  long exponent() const { return mpfr_get_exp(value_); }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator*=(long o);
  Real& operator/=(long o);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator*(Real a, long b) { return a *= b; }
  friend Real operator*(long a, Real b) { return b *= a; }
  friend Real operator/(Real a, long b) { return a /= b; }
  friend Real operator-(const Real& a);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.value_, b.value_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.value_, b.value_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.value_, b.value_) != 0; }

 private:
  void release() noexcept;
  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real log10(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pi(Precision p);
Real pow(const Real& base, long exponent);
/// x * 2^e
Real ldexp(const Real& x, long e);
Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);
/// 10^-digits at precision p.
Real ten_to_minus(unsigned digits, Precision p);

/// Decimal rendering with `digits` significant digits: fixed notation for
/// moderate exponents, scientific otherwise. Deterministic for a given value.
std::string to_decimal(const Real& x, unsigned digits);

/// Number of leading significant decimal digits on which `a` agrees with
/// `reference`, floor(-log10(|a - reference| / |reference|)); capped at
/// `cap` when they are equal.
unsigned agreeing_digits(const Real& a, const Real& reference, unsigned cap = 100000);

// ------------------------------------------------------------------ complex

class Complex {
 public:
  explicit Complex(Precision p) : re_(p), im_(p) {}
  Complex(Real re, Real im);
  explicit Complex(Real re);
  Complex(const ExactComplex& value, Precision p) : re_(value.re(), p), im_(value.im(), p) {}
  Complex(std::complex<double> value, Precision p) : re_(value.real(), p), im_(value.imag(), p) {}

  const Real& re() const noexcept { return re_; }
  const Real& im() const noexcept { return im_; }
  Real& re() noexcept { return re_; }
  Real& im() noexcept { return im_; }

  Precision precision() const { return max(re_.precision(), im_.precision()); }
  Complex at(Precision p) const { return {re_.at(p), im_.at(p)}; }
  std::complex<double> to_complex_double() const { return {re_.to_double(), im_.to_double()}; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  Complex conj() const { return {re_, -im_}; }
  /// |z|^2
  Real norm() const;

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator*=(const Real& o);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator*(Complex a, const Real& b) { return a *= b; }
  friend Complex operator-(const Complex& a) { return {-a.re_, -a.im_}; }

 private:
  Real re_;
  Real im_;
};

Real abs(const Complex& z);
/// Principal argument in (-pi, pi].
Real arg(const Complex& z);
Complex polar(const Real& r, const Real& theta);

}  // namespace betaspec
