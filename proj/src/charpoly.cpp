#include "betaspec/charpoly.hpp"

#include <algorithm>
#include <cstdint>

namespace betaspec {

ExactPoly operator+(const ExactPoly& a, const ExactPoly& b) {
  std::vector<ExactComplex> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) c[k] += a.coeff(k);
  for (std::size_t k = 0; k < b.coeffs().size(); ++k) c[k] += b.coeff(k);
  return ExactPoly(std::move(c));
}

ExactPoly operator-(const ExactPoly& a, const ExactPoly& b) {
  std::vector<ExactComplex> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) c[k] += a.coeff(k);
  for (std::size_t k = 0; k < b.coeffs().size(); ++k) c[k] -= b.coeff(k);
  return ExactPoly(std::move(c));
}

ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
  std::vector<ExactComplex> c(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeff(i) * b.coeff(j);
  }
  return ExactPoly(std::move(c));
}

PrecPoly to_precision(const ExactPoly& poly, Precision p) {
  std::vector<Complex> c;
  c.reserve(poly.coeffs().size());
  for (const auto& x : poly.coeffs()) c.emplace_back(x, p);
  return PrecPoly(std::move(c));
}

ExactComplex evaluate(const ExactPoly& poly, const ExactComplex& t) {
  ExactComplex acc(0);
  for (std::size_t k = poly.coeffs().size(); k-- > 0;) {
    acc *= t;
    acc += poly.coeff(k);
  }
  return acc;
}

Complex evaluate(const PrecPoly& poly, const Complex& t) {
  Complex acc(t.precision());
  for (std::size_t k = poly.coeffs().size(); k-- > 0;) {
    acc *= t;
    acc += poly.coeff(k);
  }
  return acc;
}

bool has_real_coefficients(const ExactPoly& poly) {
  return std::all_of(poly.coeffs().begin(), poly.coeffs().end(), [](const ExactComplex& c) { return c.is_real(); });
}

namespace {

void require_order(std::size_t n) {
  if (n == 0) fail(ErrorCode::invalid_order, "polynomial order n must be at least 1");
}

/// prefix[m] = sum_{i=1}^{m+1} beta^-i for m = 0..n-1.
std::vector<ExactComplex> inverse_power_prefix(const BetaParam& beta, std::size_t n) {
  const ExactComplex inv = beta.value().inverse();
  std::vector<ExactComplex> prefix;
  prefix.reserve(n);
  ExactComplex power = inv;
  ExactComplex sum(0);
  for (std::size_t m = 0; m < n; ++m) {
    sum += power;
    prefix.push_back(sum);
    power *= inv;
  }
  return prefix;
}

}  // namespace

ExactPoly charpoly_closed_form(const BetaParam& beta, std::size_t n) {
  require_order(n);
  const auto prefix = inverse_power_prefix(beta, n);
  std::vector<ExactComplex> c;
  c.reserve(n + 1);
  for (std::size_t m = 0; m < n; ++m) c.push_back(ExactComplex(1) - prefix[m]);
  c.emplace_back(1);
  return ExactPoly(std::move(c));
}

std::pair<ExactPoly, ExactPoly> split_qr(const BetaParam& beta, std::size_t n) {
  require_order(n);
  std::vector<ExactComplex> q(n + 1, ExactComplex(1));
  auto r = inverse_power_prefix(beta, n);
  return {ExactPoly(std::move(q)), ExactPoly(std::move(r))};
}

ExactPoly reverse_poly(const ExactPoly& poly) {
  if (poly.coeff(0).is_zero()) {
    fail(ErrorCode::zero_root, "cannot reverse a polynomial with a root at zero");
  }
  std::vector<ExactComplex> c(poly.coeffs().rbegin(), poly.coeffs().rend());
  return ExactPoly(std::move(c));
}

PrecPoly reverse_poly(const PrecPoly& poly) {
  if (poly.coeff(0).is_zero()) {
    fail(ErrorCode::zero_root, "cannot reverse a polynomial with a root at zero");
  }
  std::vector<Complex> c(poly.coeffs().rbegin(), poly.coeffs().rend());
  return PrecPoly(std::move(c));
}

ExactPoly det_oracle(const Matrix<LinearEntry>& matrix) {
  const std::size_t n = matrix.rows();
  if (matrix.cols() != n) fail(ErrorCode::invalid_parameter, "det_oracle: non-square matrix");
  if (n == 0) fail(ErrorCode::invalid_order, "det_oracle: empty matrix");
  if (n > kDetOracleMaxOrder) {
    fail(ErrorCode::size_limit, "det_oracle supports n <= " + std::to_string(kDetOracleMaxOrder) + ", got " +
                                    std::to_string(n));
  }
  // minors[mask] = det of rows 0..popcount(mask)-1 restricted to the columns
  // in mask, expanded along its last row.
  const std::uint32_t full = (1U << n) - 1U;
  std::vector<ExactPoly> minors(full + 1U, ExactPoly({ExactComplex(0)}));
  minors[0] = ExactPoly({ExactComplex(1)});
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    const std::size_t row = size - 1;
    ExactPoly acc({ExactComplex(0)});
    std::size_t position = 0;  // index of column c among the columns in mask
    for (std::size_t c = 0; c < n; ++c) {
      if ((mask & (1U << c)) == 0) continue;
      const LinearEntry& e = matrix(row, c);
      const std::uint32_t rest = mask & ~(1U << c);
      if (!(e.constant.is_zero() && e.slope.is_zero()) && !minors[rest].is_zero()) {
        ExactPoly term = ExactPoly({e.constant, e.slope}) * minors[rest];
        // Sign of the cofactor at (row, position) in the size x size minor.
        acc = ((row + position) % 2 == 0) ? acc + term : acc - term;
      }
      ++position;
    }
    minors[mask] = std::move(acc);
  }
  return minors[full];
}

Matrix<LinearEntry> symbolic_aux_matrix(std::size_t n) {
  if (n == 0) fail(ErrorCode::invalid_order, "matrix order must be at least 1");
  Matrix<LinearEntry> m(n, n, LinearEntry{ExactComplex(0), ExactComplex(0)});
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i).constant = ExactComplex(-1);
    if (i + 1 < n) m(i, i + 1).slope = ExactComplex(1);
  }
  for (std::size_t j = 0; j < n; ++j) m(n - 1, j).slope -= ExactComplex(1);
  return m;
}

Matrix<LinearEntry> symbolic_shifted(const BetaParam& beta, std::size_t n) {
  const auto b = BetaMatrix(beta, n).dense_exact();
  Matrix<LinearEntry> m(n, n, LinearEntry{ExactComplex(0), ExactComplex(0)});
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) m(s, t).constant = -b(s, t);
    m(s, s).slope = ExactComplex(1);
  }
  return m;
}

namespace {

struct LimitParts {
  Complex one;
  Complex beta;
  Complex a;  // beta - t
  Complex b;  // 1 - t
  Complex numerator;  // beta - 1 - t
};

LimitParts limit_parts(const LimitFunction& fn, const Complex& t) {
  fn.beta.require({BetaClass::real_gt1}, "limit functions");
  const Precision p = t.precision();
  if (!(abs(t) < Real(1, p))) {
    fail(ErrorCode::invalid_parameter, "limit functions are defined on the open unit disk |t| < 1");
  }
  Complex one(Real(1, p));
  Complex beta(fn.beta.value(), p);
  Complex a = beta - t;
  Complex b = one - t;
  if (b.is_zero() || (fn.kind == LimitKind::p && a.is_zero())) fail(ErrorCode::pole, "limit function pole");
  Complex numerator = a - one;
  return {std::move(one), std::move(beta), std::move(a), std::move(b), std::move(numerator)};
}

}  // namespace

Complex eval_limit(const LimitFunction& fn, const Complex& t) {
  const auto parts = limit_parts(fn, t);
  if (fn.kind == LimitKind::p) return parts.numerator / (parts.b * parts.a);
  return parts.numerator / (parts.b * (parts.beta - parts.one));
}

Complex limit_derivative(const LimitFunction& fn, const Complex& t) {
  const auto parts = limit_parts(fn, t);
  const Complex b2 = parts.b * parts.b;
  if (fn.kind == LimitKind::p) {
    // p'(t) = ((beta-t)^2 - (beta-t) - (1-t)) / ((1-t)^2 (beta-t)^2)
    const Complex a2 = parts.a * parts.a;
    return (a2 - parts.a - parts.b) / (b2 * a2);
  }
  // p~'(t) = ((beta-1-t) - (1-t)) / ((1-t)^2 (beta-1))
  return (parts.numerator - parts.b) / (b2 * (parts.beta - parts.one));
}

}  // namespace betaspec
