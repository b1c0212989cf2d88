#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "betaspec/betamatrix.hpp"
#include "betaspec/numerics.hpp"
#include "betaspec/rootfind.hpp"

namespace betaspec {

/// Eigenvalues of B_n as the roots of its characteristic polynomial.
RootSet spectrum(const BetaParam& beta, std::size_t n, const SolveOptions& options = {});

struct ClusterReport {
  std::string beta;
  std::size_t n = 0;
  double epsilon = 0;
  std::size_t inside_count = 0;
  std::size_t outside_count = 0;
  std::vector<Complex> outside_points;
};

/// Partition by the annulus test ||z| - 1| <= epsilon (inside).
ClusterReport cluster_count(const RootSet& roots, double epsilon, const BetaParam& beta);

inline constexpr double kDefaultOutlierEpsilon = 0.05;

struct OutlierRecord {
  std::size_t n = 0;
  std::string beta;
  std::optional<Real> small;
  std::optional<Real> large;
  std::optional<Real> err_small;  // |small - (beta - 1)|
  std::optional<Real> err_large;  // |large - 1/(beta - 1)|
  std::size_t annulus_outliers = 0;
  /// Why the record is absent; empty when both outliers are present.
  std::string diagnostic;

  bool present() const { return small.has_value() && large.has_value(); }
};

/// The two real positive eigenvalues off the unit annulus for beta in (1, 2),
/// each polished to target_digits. Throws `inconsistency` if more than two
/// eigenvalues lie outside the annulus.
OutlierRecord find_outliers(const BetaParam& beta, std::size_t n, unsigned target_digits,
                            double epsilon = kDefaultOutlierEpsilon);

enum class SvdMethod { automatic, dense, structured };

/// Singular values of B_n at precision p, sorted nonincreasing.
///   dense       Jacobi on the Hermitian matrix B^* B
///   structured  B^* B = I + W with W of rank <= 3; Jacobi on the compression
///               of B^* B to range(W), every other singular value is 1
///   automatic   dense for n <= 48, structured above
std::vector<Real> singular_values(const BetaParam& beta, std::size_t n, Precision p,
                                  SvdMethod method = SvdMethod::automatic);

enum class TestFunction { radial_bump, angular_window, re_moment, im_moment, unit_ball };
enum class WeylKind { eigen, singular };

TestFunction parse_test_function(std::string_view id);
std::string_view test_function_name(TestFunction f) noexcept;
std::vector<TestFunction> all_test_functions();
std::string_view weyl_kind_name(WeylKind k) noexcept;

/// Built-in test functions. With phi(x) = exp(1 - 1/(1 - x^2)) on |x| < 1 and
/// w(r) a smooth window equal to 1 on [0, 4] and 0 beyond 5:
///   radial_bump     phi((|z| - 1) / 0.5)
///   angular_window  phi((arg z - pi/4) / (pi/4)) * phi((|z| - 1) / 0.5)
///   re_moment       Re z * w(|z|)
///   im_moment       Im z * w(|z|)
///   unit_ball       w(|z|)
Real evaluate_test_function(TestFunction f, const Complex& z);

inline constexpr std::size_t kQuadratureNodes = 4096;

struct WeylReport {
  TestFunction function;
  WeylKind kind;
  std::size_t n = 0;
  Real empirical;
  Real reference;
  Real gap;
};

/// (1/n) sum F(x_i) against (1/2pi) int F(e^{i theta}) d theta (eigen) or
/// F(1) (singular).
WeylReport weyl_sum(const std::vector<Complex>& values, TestFunction f, WeylKind kind);
WeylReport weyl_sum(const std::vector<Real>& values, TestFunction f, WeylKind kind);

/// (1/n) sum_i |sigma_i - |lambda_i|| with both lists sorted nonincreasing.
/// Requires |beta| >= 1.
Real quasi_normality_gap(const BetaParam& beta, std::size_t n, Precision p);

struct ConditionCheck {
  Real kappa;
  Real bound;
  bool satisfied = false;
};

/// kappa = sigma_max / sigma_min against [max(beta - 1, 1/(beta - 1))]^2; satisfied when
/// kappa >= 0.98 * bound.
ConditionCheck condition_bound_check(const BetaParam& beta, std::size_t n, Precision p);

}  // namespace betaspec
