#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "betaspec/betamatrix.hpp"
#include "betaspec/dense.hpp"
#include "betaspec/numerics.hpp"

namespace betaspec {

/// Polynomial with coefficients c_0..c_d stored low to high. Trailing zero
/// coefficients are trimmed on construction, so a nonzero polynomial always
/// has a nonzero leading coefficient; the zero polynomial is {0}.
template <class T>
class Poly {
 public:
  explicit Poly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) fail(ErrorCode::invalid_parameter, "polynomial needs at least one coefficient");
    while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  const T& coeff(std::size_t k) const { return coeffs_.at(k); }
  const T& leading() const { return coeffs_.back(); }
  std::span<const T> coeffs() const noexcept { return coeffs_; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0].is_zero(); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<T> coeffs_;
};

using ExactPoly = Poly<ExactComplex>;
using PrecPoly = Poly<Complex>;

ExactPoly operator+(const ExactPoly& a, const ExactPoly& b);
ExactPoly operator-(const ExactPoly& a, const ExactPoly& b);
ExactPoly operator*(const ExactPoly& a, const ExactPoly& b);

/// Coefficients rounded to precision p.
PrecPoly to_precision(const ExactPoly& poly, Precision p);

ExactComplex evaluate(const ExactPoly& poly, const ExactComplex& t);
/// Horner at the precision of t (coefficients are used at their own).
Complex evaluate(const PrecPoly& poly, const Complex& t);

bool has_real_coefficients(const ExactPoly& poly);

/// p_n(t) = det(t I - B_n). Coefficient of t^m is 1 - sum_{i=1}^{m+1} beta^-i
/// for m < n and 1 for m = n; built from prefix sums in O(n).
ExactPoly charpoly_closed_form(const BetaParam& beta, std::size_t n);

/// q_n(t) = sum_{j=0}^n t^j and r_n(t) = sum_{i=1}^n sum_{j=0}^{n-i}
/// t^{i+j-1} beta^-i, so that p_n = q_n - r_n.
std::pair<ExactPoly, ExactPoly> split_qr(const BetaParam& beta, std::size_t n);

/// t^d p(1/t). Throws `zero_root` when the constant term vanishes.
ExactPoly reverse_poly(const ExactPoly& poly);
PrecPoly reverse_poly(const PrecPoly& poly);

/// Matrix entry a + b t.
struct LinearEntry {
  ExactComplex constant;
  ExactComplex slope;
};

/// Exact determinant of a matrix with entries of degree <= 1 in t, by
/// Laplace expansion over minors memoized on column subsets. n <= 12.
ExactPoly det_oracle(const Matrix<LinearEntry>& matrix);

inline constexpr std::size_t kDetOracleMaxOrder = 12;

/// M_n with t kept symbolic.
Matrix<LinearEntry> symbolic_aux_matrix(std::size_t n);
/// t I - B_n with t kept symbolic.
Matrix<LinearEntry> symbolic_shifted(const BetaParam& beta, std::size_t n);

/// Uniform limits of p_n and of the reversed p~_n inside the unit disk:
///   p(t)  = (beta - 1 - t) / ((1 - t)(beta - t))
///   p~(t) = (beta - 1 - t) / ((1 - t)(beta - 1))
enum class LimitKind { p, p_tilde };

struct LimitFunction {
  LimitKind kind;
  BetaParam beta;
};

Complex eval_limit(const LimitFunction& fn, const Complex& t);
Complex limit_derivative(const LimitFunction& fn, const Complex& t);

}  // namespace betaspec
