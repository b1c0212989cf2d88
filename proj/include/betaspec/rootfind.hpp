#pragma once

#include <cstddef>
#include <vector>

#include "betaspec/charpoly.hpp"
#include "betaspec/numerics.hpp"

namespace betaspec {

struct SolveOptions {
  /// Decimal digits on which two successive precision levels must agree.
  unsigned target_digits = 30;
  /// First rung of the precision ladder; raised if target_digits needs more.
  Precision precision{};
  /// Rungs in the ladder (each doubles the previous).
  unsigned max_levels = 4;
  unsigned max_sweeps = 500;
  /// Iterate the initial circle in double precision before the first
  /// multiprecision rung.
  bool warm_start = true;
  /// Worker threads for one sweep; 0 picks from the hardware. Results do not
  /// depend on this value.
  unsigned threads = 0;
};

/// All roots of a polynomial with per-root residual certificates.
///   residuals[i] = |p(z_i)| / |c_d|
///   bounds[i]    = 10^-digits * sum_k |c_k / c_d| |z_i|^k
struct RootSet {
  std::vector<Complex> roots;
  std::vector<Real> residuals;
  std::vector<Real> bounds;
  unsigned long precision_bits = 0;
  unsigned iterations = 0;

  std::size_t size() const noexcept { return roots.size(); }
  bool certified() const;
};

/// Convergence failure that carries the best iterate found.
class ConvergenceFailure : public Error {
 public:
  ConvergenceFailure(const std::string& what, RootSet best)
      : Error(ErrorCode::convergence_failure, what), best_(std::move(best)) {}
  const RootSet& best() const noexcept { return best_; }

 private:
  RootSet best_;
};

/// Ehrlich-Aberth simultaneous iteration on an escalating precision ladder
/// until two successive rungs agree on every root to target_digits.
RootSet solve_all(const ExactPoly& poly, const SolveOptions& options = {});
RootSet solve_all(const PrecPoly& poly, const SolveOptions& options = {});

/// Newton polish of a real root at escalating precision. Requires real
/// coefficients. The result satisfies |p(x)| / sum|c_k||x|^k <= 10^-digits
/// and agrees with the next precision rung to target_digits.
Real refine_real_root(const ExactPoly& poly, const Real& seed, unsigned target_digits);
Real refine_real_root(const PrecPoly& poly, const Real& seed, unsigned target_digits);

/// Root moduli/arguments ordering used in reports: principal argument, ties
/// by modulus.
std::vector<std::size_t> report_order(const std::vector<Complex>& roots);

}  // namespace betaspec
