#include "betaspec/numerics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

namespace betaspec {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::config: return "config";
    case ErrorCode::parse: return "parse";
    case ErrorCode::invalid_order: return "invalid_order";
    case ErrorCode::invalid_parameter: return "invalid_parameter";
    case ErrorCode::size_limit: return "size_limit";
    case ErrorCode::zero_root: return "zero_root";
    case ErrorCode::pole: return "pole";
    case ErrorCode::convergence_failure: return "convergence_failure";
    case ErrorCode::refinement_failure: return "refinement_failure";
    case ErrorCode::inconsistency: return "inconsistency";
    case ErrorCode::singularity: return "singularity";
    case ErrorCode::unknown_test_function: return "unknown_test_function";
    case ErrorCode::unknown_target: return "unknown_target";
  }
  return "unknown";
}

// ---------------------------------------------------------------- precision

Precision::Precision(unsigned long bits) : bits_(bits) {
  if (bits < kMinimum) {
    fail(ErrorCode::config, "working precision must be at least " + std::to_string(kMinimum) +
                                " bits, got " + std::to_string(bits));
  }
  if (bits > static_cast<unsigned long>(MPFR_PREC_MAX)) {
    fail(ErrorCode::config, "working precision exceeds MPFR limit");
  }
}

Precision Precision::for_digits(unsigned digits, unsigned long guard_bits) {
  const auto needed = static_cast<unsigned long>(std::ceil(digits * 3.321928094887362)) + guard_bits;
  const unsigned long rounded = ((needed + 63) / 64) * 64;
  return Precision(std::max(rounded, kMinimum));
}

// ---------------------------------------------------------------- rationals

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

[[noreturn]] void bad_number(std::string_view text) {
  fail(ErrorCode::parse, "cannot parse number '" + std::string(text) + "'");
}

Integer parse_integer(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!all_digits(body)) bad_number(text);
  Integer value(std::string(body), 10);
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) bad_number(text);

  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const Integer num = parse_integer(trim(s.substr(0, slash)));
    const Integer den = parse_integer(trim(s.substr(slash + 1)));
    if (sgn(den) == 0) fail(ErrorCode::parse, "zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  std::string_view body = s;
  bool negative = false;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  long exponent = 0;
  if (const auto e = body.find_first_of("eE"); e != std::string_view::npos) {
    const Integer ex = parse_integer(body.substr(e + 1));
    if (abs(ex) > 100000) fail(ErrorCode::parse, "exponent out of range in '" + std::string(text) + "'");
    exponent = ex.get_si();
    body = body.substr(0, e);
  }
  std::string digits;
  if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = body.substr(0, dot);
    const std::string_view frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      bad_number(text);
    }
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(body)) bad_number(text);
    digits = std::string(body);
  }
  Rational r{Integer(digits, 10)};
  r *= pow(Rational(10), exponent);
  if (negative) r = -r;
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational pow(const Rational& base, long exponent) {
  if (exponent == 0) return 1;
  if (sgn(base) == 0) {
    if (exponent < 0) fail(ErrorCode::invalid_parameter, "zero raised to a negative power");
    return 0;
  }
  const unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational r = exponent > 0 ? Rational(num, den) : Rational(den, num);
  r.canonicalize();
  return r;
}

ExactComplex ExactComplex::inverse() const {
  const Rational n = norm();
  if (sgn(n) == 0) fail(ErrorCode::invalid_parameter, "division by zero");
  return {re_ / n, -im_ / n};
}

ExactComplex& ExactComplex::operator+=(const ExactComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

ExactComplex& ExactComplex::operator-=(const ExactComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

ExactComplex& ExactComplex::operator*=(const ExactComplex& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

ExactComplex& ExactComplex::operator/=(const ExactComplex& o) {
  if (o.is_real()) {
    if (sgn(o.re_) == 0) fail(ErrorCode::invalid_parameter, "division by zero");
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

ExactComplex pow(const ExactComplex& base, long exponent) {
  if (base.is_real()) return {pow(base.re(), exponent), 0};
  ExactComplex b = exponent < 0 ? base.inverse() : base;
  unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  ExactComplex result(1);
  while (e != 0) {
    if (e & 1UL) result *= b;
    e >>= 1;
    if (e != 0) b *= b;
  }
  return result;
}

ExactComplex parse_exact_complex(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) bad_number(text);
  if (s.back() != 'i' && s.back() != 'I') return {parse_rational(s), 0};

  const std::string_view body = s.substr(0, s.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const auto imaginary = [&](std::string_view part) -> Rational {
    part = trim(part);
    if (part.empty() || part == "+") return 1;
    if (part == "-") return -1;
    return parse_rational(part);
  };
  if (split == std::string_view::npos) return {0, imaginary(body)};
  return {parse_rational(trim(body.substr(0, split))), imaginary(body.substr(split))};
}

std::string to_string(const ExactComplex& value) {
  if (value.is_real()) return to_string(value.re());
  std::string im = to_string(abs(value.im())) + "i";
  if (sgn(value.re()) == 0) return sgn(value.im()) < 0 ? "-" + im : im;
  return to_string(value.re()) + (sgn(value.im()) < 0 ? "-" : "+") + im;
}

// --------------------------------------------------------------------- reals

Real::Real(Precision p) {
  mpfr_init2(value_, static_cast<mpfr_prec_t>(p.bits()));
  mpfr_set_zero(value_, 1);
}

Real::Real(double value, Precision p) : Real(p) { mpfr_set_d(value_, value, MPFR_RNDN); }

Real::Real(const Rational& value, Precision p) : Real(p) {
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Integer& value, Precision p) : Real(p) {
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(std::string_view decimal, Precision p) : Real(p) {
  const std::string s(trim(decimal));
  char* end = nullptr;
  mpfr_strtofr(value_, s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end == nullptr || *end != '\0') bad_number(decimal);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

// A moved-from Real has a null limb pointer and may only be destroyed or
// assigned to.
Real::Real(Real&& other) noexcept {
  value_[0] = other.value_[0];
  other.value_[0]._mpfr_d = nullptr;
}

Real& Real::operator=(const Real& other) {
  if (this == &other) return *this;
  if (value_[0]._mpfr_d == nullptr) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
  } else if (mpfr_get_prec(value_) != mpfr_get_prec(other.value_)) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
  }
  mpfr_set(value_, other.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  std::swap(value_[0], other.value_[0]);
  return *this;
}

Real::~Real() { release(); }

void Real::release() noexcept {
  if (value_[0]._mpfr_d != nullptr) {
    mpfr_clear(value_);
    value_[0]._mpfr_d = nullptr;
  }
}

Real Real::at(Precision p) const {
  Real r(p);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

namespace {

mpfr_prec_t wider(mpfr_srcptr a, mpfr_srcptr b) { return std::max(mpfr_get_prec(a), mpfr_get_prec(b)); }

void widen_to(mpfr_ptr target, mpfr_srcptr other) {
  if (mpfr_get_prec(other) > mpfr_get_prec(target)) {
    mpfr_prec_round(target, mpfr_get_prec(other), MPFR_RNDN);
  }
}

Precision precision_of(mpfr_prec_t bits) { return Precision(static_cast<unsigned long>(bits)); }

}  // namespace

Real& Real::operator+=(const Real& o) {
  widen_to(value_, o.value_);
  mpfr_add(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  widen_to(value_, o.value_);
  mpfr_sub(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  widen_to(value_, o.value_);
  mpfr_mul(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  widen_to(value_, o.value_);
  mpfr_div(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(long o) {
  mpfr_mul_si(value_, value_, o, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(long o) {
  mpfr_div_si(value_, value_, o, MPFR_RNDN);
  return *this;
}

Real operator+(const Real& a, const Real& b) {
  Real r(precision_of(wider(a.value_, b.value_)));
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(precision_of(wider(a.value_, b.value_)));
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(precision_of(wider(a.value_, b.value_)));
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r(precision_of(wider(a.value_, b.value_)));
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a) {
  Real r(a.precision());
  mpfr_neg(r.value_, a.value_, MPFR_RNDN);
  return r;
}

namespace {

template <class Fn>
Real unary(const Real& x, Fn fn) {
  Real r(x.precision());
  fn(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real log10(const Real& x) { return unary(x, mpfr_log10); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }

Real atan2(const Real& y, const Real& x) {
  Real r(max(x.precision(), y.precision()));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

Real pi(Precision p) {
  Real r(p);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& base, long exponent) {
  Real r(base.precision());
  mpfr_pow_si(r.get(), base.get(), exponent, MPFR_RNDN);
  return r;
}

Real ldexp(const Real& x, long e) {
  Real r(x.precision());
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

Real min(const Real& a, const Real& b) { return b < a ? b : a; }
Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real ten_to_minus(unsigned digits, Precision p) {
  Real r(p);
  mpfr_ui_pow_ui(r.get(), 10, digits, MPFR_RNDN);
  mpfr_ui_div(r.get(), 1, r.get(), MPFR_RNDN);
  return r;
}

std::string to_decimal(const Real& x, unsigned digits) {
  if (mpfr_nan_p(x.get())) return "nan";
  if (mpfr_inf_p(x.get())) return x.sign() < 0 ? "-inf" : "inf";
  if (x.is_zero()) return "0";
  digits = std::max(digits, 1U);

  mpfr_exp_t e10 = 0;
  char* raw = mpfr_get_str(nullptr, &e10, 10, digits, x.get(), MPFR_RNDN);
  std::string mantissa(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (mantissa.front() == '-') {
    sign = "-";
    mantissa.erase(0, 1);
  }
  // value = 0.mantissa * 10^e10, so the leading digit has decimal exponent e10 - 1.
  const long lead = static_cast<long>(e10) - 1;
  const auto strip = [](std::string s) {
    if (s.find('.') == std::string::npos) return s;
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
  };

  if (lead >= -6 && lead < static_cast<long>(digits)) {
    std::string out;
    if (lead < 0) {
      out = "0." + std::string(static_cast<std::size_t>(-lead - 1), '0') + mantissa;
    } else {
      const auto whole = static_cast<std::size_t>(lead + 1);
      out = mantissa.substr(0, whole);
      if (mantissa.size() > whole) out += "." + mantissa.substr(whole);
    }
    return sign + strip(out);
  }
  std::string out = mantissa.substr(0, 1);
  if (mantissa.size() > 1) out += "." + mantissa.substr(1);
  out = strip(out);
  return sign + out + "e" + (lead < 0 ? "-" : "+") + std::to_string(lead < 0 ? -lead : lead);
}

unsigned agreeing_digits(const Real& a, const Real& reference, unsigned cap) {
  const Precision p = max(a.precision(), reference.precision());
  Real diff = abs(a - reference);
  if (diff.is_zero()) return cap;
  if (!reference.is_zero()) diff /= abs(reference);
  const Real lg = -log10(diff.at(p));
  const double d = std::floor(lg.to_double());
  if (d <= 0) return 0;
  return d >= cap ? cap : static_cast<unsigned>(d);
}

// ------------------------------------------------------------------ complex

Complex::Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {
  const Precision p = precision();
  if (re_.precision() != p) re_ = re_.at(p);
  if (im_.precision() != p) im_ = im_.at(p);
}

Complex::Complex(Real re) : re_(std::move(re)), im_(re_.precision()) {}

Real Complex::norm() const { return re_ * re_ + im_ * im_; }

Complex& Complex::operator+=(const Complex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Real re = re_ * o.re_ - im_ * o.im_;
  Real im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  const Real den = o.norm();
  Real re = (re_ * o.re_ + im_ * o.im_) / den;
  Real im = (im_ * o.re_ - re_ * o.im_) / den;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Complex& Complex::operator*=(const Real& o) {
  re_ *= o;
  im_ *= o;
  return *this;
}

Real abs(const Complex& z) {
  Real r(z.precision());
  mpfr_hypot(r.get(), z.re().get(), z.im().get(), MPFR_RNDN);
  return r;
}

Real arg(const Complex& z) { return atan2(z.im(), z.re()); }

Complex polar(const Real& r, const Real& theta) { return {r * cos(theta), r * sin(theta)}; }

}  // namespace betaspec
