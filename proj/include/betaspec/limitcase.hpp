#pragma once
// The beta = 1 case. B_n has a zero first row and lower-right block
// X_{n-1} = T_{n-1} + e e^T; its dominant eigenvalue lambda_M comes from the
// power method on X_{n-1}.

#include <cstddef>
#include <optional>
#include <vector>

#include "betaspec/numerics.hpp"

namespace betaspec {

/// Kernel vector w = (1, s) of B_n at beta = 1, with X_{n-1} s = -(e + e_1)
/// solved exactly. n >= 2.
std::vector<Rational> kernel_vector(std::size_t n);

struct PowerTrace {
  std::size_t n = 0;
  /// v_0 = e, v_{k+1} = X_{n-1} v_k, k = 0..K.
  std::vector<std::vector<Integer>> iterates;
  /// (v_k)_1
  std::vector<Integer> first_components;
  /// r_k = (v_{k+1})_1 / (v_k)_1, k = 0..K-1.
  std::vector<Rational> ratios;
};

/// K power iterations in exact integer arithmetic. n >= 3, K >= 1.
PowerTrace power_method_trace(std::size_t n, std::size_t iterations);

/// Closed forms of (v_k)_1 as polynomials in n, k = 1..5:
///   n - 1, n^2 - n - 1, n^3 - n^2 - 2n, n^4 - n^3 - 3n^2 + 1,
///   n^5 - n^4 - 4n^3 + 3n + 1
Integer table_first_component(unsigned k, const Integer& n);

struct AsymptoticFit {
  std::size_t n = 0;
  Real lambda_max;
  Real c0_est;  // lambda_M - n
  Real c1_est;  // n (lambda_M - n)
  std::size_t iterations = 0;
};

/// Iteration cap for lambda_max_beta1.
inline constexpr std::size_t kPowerIterationCap = 200000;
/// Bit size above which exact iterates are replaced by normalized reals.
inline constexpr std::size_t kExactBitCap = 1000000;

/// Dominant eigenvalue of X_{n-1}, stopping when successive ratios of first
/// components differ by less than 10^-target_digits. n = 2 gives 1.
AsymptoticFit lambda_max_beta1(std::size_t n, unsigned target_digits);

/// lambda_M < n.
bool gerschgorin_check(std::size_t n);

/// Estimate of c_2 in lambda_M = n - 1/n + c_2/n^2 + ... from the two largest
/// orders among `fits`, by one Richardson step on d(n) = n^2 (lambda_M - n + 1/n).
/// No ground truth is implied.
Real richardson_c2(const std::vector<AsymptoticFit>& fits);

}  // namespace betaspec
