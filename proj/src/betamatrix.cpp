#include "betaspec/betamatrix.hpp"

#include <algorithm>

namespace betaspec {

std::string_view beta_class_name(BetaClass c) noexcept {
  switch (c) {
    case BetaClass::real_gt1: return "real_gt1";
    case BetaClass::real_eq1: return "real_eq1";
    case BetaClass::complex_nonzero: return "complex_nonzero";
  }
  return "unknown";
}

namespace {

BetaClass classify(const ExactComplex& v) {
  if (v.is_zero()) fail(ErrorCode::invalid_parameter, "beta must be nonzero");
  if (v.is_real() && v.re() > 1) return BetaClass::real_gt1;
  if (v.is_real() && v.re() == 1) return BetaClass::real_eq1;
  return BetaClass::complex_nonzero;
}

void require_order(std::size_t n, std::size_t minimum) {
  if (n < minimum) {
    fail(ErrorCode::invalid_order,
         "matrix order must be at least " + std::to_string(minimum) + ", got " + std::to_string(n));
  }
}

}  // namespace

BetaParam::BetaParam(ExactComplex value) : value_(std::move(value)), kind_(classify(value_)) {}

BetaParam BetaParam::parse(std::string_view text) {
  ExactComplex v;
  try {
    v = parse_exact_complex(text);
  } catch (const Error& e) {
    fail(e.code(), std::string("invalid beta: ") + e.what());
  }
  return BetaParam(std::move(v));
}

void BetaParam::require(std::initializer_list<BetaClass> accepted, std::string_view feature) const {
  if (std::find(accepted.begin(), accepted.end(), kind_) != accepted.end()) return;
  std::string allowed;
  for (const BetaClass c : accepted) {
    if (!allowed.empty()) allowed += ", ";
    allowed += beta_class_name(c);
  }
  fail(ErrorCode::invalid_parameter, std::string(feature) + " requires beta in {" + allowed + "}, got beta=" +
                                         to_string() + " (" + std::string(beta_class_name(kind_)) + ")");
}

BetaMatrix::BetaMatrix(BetaParam beta, std::size_t n) : beta_(std::move(beta)), n_(n) {
  require_order(n, 1);
}

std::vector<ExactComplex> BetaMatrix::correction() const {
  std::vector<ExactComplex> u;
  u.reserve(n_);
  const ExactComplex inv = beta_.value().inverse();
  ExactComplex power = inv;
  for (std::size_t s = 0; s < n_; ++s) {
    u.push_back(power);
    power *= inv;
  }
  u[0] -= ExactComplex(1);
  return u;
}

std::vector<Complex> BetaMatrix::correction(Precision p) const {
  const auto exact = correction();
  std::vector<Complex> u;
  u.reserve(n_);
  for (const auto& x : exact) u.emplace_back(x, p);
  return u;
}

ExactComplex BetaMatrix::entry(std::size_t s, std::size_t t) const {
  ExactComplex value = beta_.inverse_power(static_cast<long>(s) + 1);
  if (s == 0) value -= ExactComplex(1);
  if (s == t + 1) value += ExactComplex(1);
  return value;
}

Matrix<ExactComplex> BetaMatrix::dense_exact() const {
  const auto u = correction();
  Matrix<ExactComplex> m(n_, n_, ExactComplex(0));
  for (std::size_t s = 0; s < n_; ++s) {
    for (std::size_t t = 0; t < n_; ++t) m(s, t) = u[s];
    if (s >= 1) m(s, s - 1) += ExactComplex(1);
  }
  return m;
}

Matrix<Complex> BetaMatrix::dense(Precision p) const {
  const auto u = correction();
  Matrix<Complex> m(n_, n_, Complex(p));
  for (std::size_t s = 0; s < n_; ++s) {
    const Complex us(u[s], p);
    for (std::size_t t = 0; t < n_; ++t) m(s, t) = us;
    if (s >= 1) m(s, s - 1) = Complex(u[s] + ExactComplex(1), p);
  }
  return m;
}

std::vector<ExactComplex> BetaMatrix::apply(std::span<const ExactComplex> x) const {
  if (x.size() != n_) fail(ErrorCode::invalid_parameter, "apply: vector length differs from matrix order");
  ExactComplex total(0);
  for (const auto& xi : x) total += xi;
  const auto u = correction();
  std::vector<ExactComplex> y(n_);
  for (std::size_t s = 0; s < n_; ++s) {
    y[s] = u[s] * total;
    if (s >= 1) y[s] += x[s - 1];
  }
  return y;
}

std::vector<Complex> BetaMatrix::apply(std::span<const Complex> x) const {
  if (x.size() != n_) fail(ErrorCode::invalid_parameter, "apply: vector length differs from matrix order");
  const Precision p = x.front().precision();
  Complex total(p);
  for (const auto& xi : x) total += xi;
  const auto u = correction(p);
  std::vector<Complex> y;
  y.reserve(n_);
  for (std::size_t s = 0; s < n_; ++s) {
    y.push_back(u[s] * total);
    if (s >= 1) y[s] += x[s - 1];
  }
  return y;
}

std::vector<Complex> BetaMatrix::apply_adjoint(std::span<const Complex> x) const {
  if (x.size() != n_) fail(ErrorCode::invalid_parameter, "apply_adjoint: vector length differs from matrix order");
  const Precision p = x.front().precision();
  const auto u = correction(p);
  Complex dot(p);
  for (std::size_t s = 0; s < n_; ++s) dot += u[s].conj() * x[s];
  std::vector<Complex> y;
  y.reserve(n_);
  for (std::size_t t = 0; t < n_; ++t) {
    y.push_back(dot);
    if (t + 1 < n_) y[t] += x[t + 1];
  }
  return y;
}

ExactComplex BetaMatrix::trace() const {
  ExactComplex sum(0);
  for (const auto& us : correction()) sum += us;
  return sum;
}

BetaMatrix build_beta_matrix(const BetaParam& beta, std::size_t n) { return BetaMatrix(beta, n); }

namespace {

template <class T>
Matrix<T> aux_matrix(const T& t, const T& zero, const T& one, std::size_t n) {
  require_order(n, 1);
  Matrix<T> m(n, n, zero);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = -one;
    if (i + 1 < n) m(i, i + 1) = t;
  }
  for (std::size_t j = 0; j < n; ++j) m(n - 1, j) -= t;
  return m;
}

}  // namespace

Matrix<ExactComplex> build_aux_matrix(const ExactComplex& t, std::size_t n) {
  return aux_matrix(t, ExactComplex(0), ExactComplex(1), n);
}

Matrix<Complex> build_aux_matrix(const Complex& t, std::size_t n) {
  const Precision p = t.precision();
  return aux_matrix(t, Complex(p), Complex(Real(1, p)), n);
}

Matrix<ExactComplex> build_shifted(const BetaParam& beta, std::size_t n, const ExactComplex& t) {
  auto m = BetaMatrix(beta, n).dense_exact();
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t c = 0; c < n; ++c) m(s, c) = -m(s, c);
    m(s, s) += t;
  }
  return m;
}

Matrix<Complex> build_shifted(const BetaParam& beta, std::size_t n, const Complex& t) {
  auto m = BetaMatrix(beta, n).dense(t.precision());
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t c = 0; c < n; ++c) m(s, c) = -m(s, c);
    m(s, s) += t;
  }
  return m;
}

Matrix<Rational> build_x_block(std::size_t n) {
  require_order(n, 2);
  const std::size_t m = n - 1;
  Matrix<Rational> x(m, m, Rational(1));
  for (std::size_t i = 1; i < m; ++i) x(i, i - 1) = 2;
  return x;
}

}  // namespace betaspec
