#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "betaspec/dense.hpp"
#include "betaspec/numerics.hpp"

namespace betaspec {

enum class BetaClass { real_gt1, real_eq1, complex_nonzero };

std::string_view beta_class_name(BetaClass c) noexcept;

/// The parameter beta, held exactly. Classification:
///   real_gt1         beta real and > 1
///   real_eq1         beta == 1
///   complex_nonzero  any other nonzero value
class BetaParam {
 public:
  explicit BetaParam(ExactComplex value);
  explicit BetaParam(const Rational& value) : BetaParam(ExactComplex(value)) {}

  /// "p/q", decimal, or complex "a+bi". Decimals become the rational they
  /// denote.
  static BetaParam parse(std::string_view text);

  const ExactComplex& value() const noexcept { return value_; }
  BetaClass kind() const noexcept { return kind_; }
  bool is_real() const { return value_.is_real(); }

  /// beta^-k, exact.
  ExactComplex inverse_power(long k) const { return pow(value_, -k); }

  /// Throws `invalid_parameter` unless kind() is one of `accepted`.
  void require(std::initializer_list<BetaClass> accepted, std::string_view feature) const;

  std::string to_string() const { return betaspec::to_string(value_); }

  friend bool operator==(const BetaParam& a, const BetaParam& b) { return a.value_ == b.value_; }

 private:
  ExactComplex value_;
  BetaClass kind_;
};

/// B_n = T_n + (v - e_1) e^T with v_j = beta^-j, where T_n is the lower
/// shift (ones on the first subdiagonal). Only (beta, n) is stored; dense
/// forms are materialized on request.
class BetaMatrix {
 public:
  BetaMatrix(BetaParam beta, std::size_t n);

  std::size_t order() const noexcept { return n_; }
  const BetaParam& beta() const noexcept { return beta_; }

  /// u = v - e_1, i.e. u_1 = beta^-1 - 1 and u_s = beta^-s for s >= 2.
  std::vector<ExactComplex> correction() const;
  std::vector<Complex> correction(Precision p) const;

  /// Entry (s, t), zero-based.
  ExactComplex entry(std::size_t s, std::size_t t) const;

  Matrix<ExactComplex> dense_exact() const;
  Matrix<Complex> dense(Precision p) const;

  /// B x in O(n): (Bx)_s = x_{s-1} + u_s * sum(x).
  std::vector<ExactComplex> apply(std::span<const ExactComplex> x) const;
  std::vector<Complex> apply(std::span<const Complex> x) const;

  /// B^* x in O(n): (B^* x)_t = x_{t+1} + conj(u) . x.
  std::vector<Complex> apply_adjoint(std::span<const Complex> x) const;

  /// trace(B_n) = sum_{i=1..n} beta^-i - 1.
  ExactComplex trace() const;

 private:
  BetaParam beta_;
  std::size_t n_;
};

BetaMatrix build_beta_matrix(const BetaParam& beta, std::size_t n);

/// M_n = -I + t (T_n^T - e_n e^T): -1 diagonal, t superdiagonal, last row
/// (-t, ..., -t, -1-t).
Matrix<ExactComplex> build_aux_matrix(const ExactComplex& t, std::size_t n);
Matrix<Complex> build_aux_matrix(const Complex& t, std::size_t n);

/// t I - B_n.
Matrix<ExactComplex> build_shifted(const BetaParam& beta, std::size_t n, const ExactComplex& t);
Matrix<Complex> build_shifted(const BetaParam& beta, std::size_t n, const Complex& t);

/// X_{n-1} = T_{n-1} + e e^T: all ones with twos on the subdiagonal.
Matrix<Rational> build_x_block(std::size_t n);

}  // namespace betaspec
