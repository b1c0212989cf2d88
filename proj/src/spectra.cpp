#include "betaspec/spectra.hpp"

#include <algorithm>

#include "betaspec/charpoly.hpp"
#include "betaspec/dense.hpp"

namespace betaspec {

RootSet spectrum(const BetaParam& beta, std::size_t n, const SolveOptions& options) {
  return solve_all(charpoly_closed_form(beta, n), options);
}

ClusterReport cluster_count(const RootSet& roots, double epsilon, const BetaParam& beta) {
  if (!(epsilon > 0)) fail(ErrorCode::invalid_parameter, "epsilon must be positive");
  ClusterReport report;
  report.beta = beta.to_string();
  report.n = roots.size();
  report.epsilon = epsilon;
  for (const auto& z : roots.roots) {
    const Precision p = z.precision();
    const Real distance = abs(abs(z) - Real(1, p));
    if (distance <= Real(epsilon, p)) {
      ++report.inside_count;
    } else {
      ++report.outside_count;
      report.outside_points.push_back(z);
    }
  }
  return report;
}

OutlierRecord find_outliers(const BetaParam& beta, std::size_t n, unsigned target_digits, double epsilon) {
  beta.require({BetaClass::real_gt1}, "find_outliers");
  if (!(beta.value().re() < 2)) {
    fail(ErrorCode::invalid_parameter, "find_outliers requires beta in (1, 2), got beta=" + beta.to_string());
  }
  if (n < 2) fail(ErrorCode::invalid_order, "find_outliers requires n >= 2");
  if (target_digits == 0) fail(ErrorCode::invalid_parameter, "target_digits must be positive");

  const ExactPoly poly = charpoly_closed_form(beta, n);
  SolveOptions options;
  options.target_digits = std::min(target_digits, 60U);
  const RootSet roots = solve_all(poly, options);
  const ClusterReport cluster = cluster_count(roots, epsilon, beta);

  OutlierRecord record;
  record.n = n;
  record.beta = beta.to_string();
  record.annulus_outliers = cluster.outside_count;
  if (cluster.outside_count > 2) {
    fail(ErrorCode::inconsistency, std::to_string(cluster.outside_count) + " eigenvalues of B_" +
                                       std::to_string(n) + " lie outside the annulus of width " +
                                       std::to_string(epsilon) + " (expected at most 2)");
  }

  const Precision p(roots.precision_bits);
  const Real imag_limit = ten_to_minus(options.target_digits / 2, p);
  std::vector<Real> seeds;
  for (const auto& z : cluster.outside_points) {
    if (abs(z.im()) < imag_limit && z.re().sign() > 0) seeds.push_back(z.re());
  }
  if (seeds.size() < 2) {
    record.diagnostic = "found " + std::to_string(seeds.size()) +
                        " real positive eigenvalue(s) outside the annulus; n may be below the onset of separation";
    return record;
  }
  std::sort(seeds.begin(), seeds.end());
  Real small = refine_real_root(poly, seeds[0], target_digits);
  Real large = refine_real_root(poly, seeds[1], target_digits);
  const Precision q = small.precision();
  const Real limit_small(beta.value().re() - 1, q);
  const Real limit_large(Rational(1 / (beta.value().re() - 1)), q);
  record.err_small = abs(small - limit_small);
  record.err_large = abs(large - limit_large);
  record.small = std::move(small);
  record.large = std::move(large);
  return record;
}

namespace {

Matrix<Complex> gram_dense(const BetaMatrix& b, Precision p) {
  const auto m = b.dense(p);
  const std::size_t n = b.order();
  Matrix<Complex> g(n, n, Complex(p));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Complex acc(p);
      for (std::size_t k = 0; k < n; ++k) acc += m(k, i).conj() * m(k, j);
      g(i, j) = acc;
      g(j, i) = acc.conj();
    }
  }
  return g;
}

bool all_real(const Matrix<Complex>& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (const auto& x : a.row(i)) {
      if (!x.im().is_zero()) return false;
    }
  }
  return true;
}

std::vector<Real> hermitian_spectrum(const Matrix<Complex>& a) {
  if (!all_real(a)) return hermitian_eigenvalues(a, 100);
  const Precision p = a(0, 0).precision();
  Matrix<Real> r(a.rows(), a.cols(), Real(p));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j).re();
  }
  return jacobi_eigenvalues(std::move(r), 100);
}

Complex inner(const std::vector<Complex>& x, const std::vector<Complex>& y) {
  Complex acc(x.front().precision());
  for (std::size_t k = 0; k < x.size(); ++k) acc += x[k].conj() * y[k];
  return acc;
}

/// Orthonormal basis of span{e_n, T^* u, e} by modified Gram-Schmidt (twice),
/// dropping directions that vanish to working precision.
std::vector<std::vector<Complex>> correction_basis(const BetaMatrix& b, Precision p) {
  const std::size_t n = b.order();
  const auto u = b.correction(p);
  std::vector<std::vector<Complex>> candidates(3, std::vector<Complex>(n, Complex(p)));
  candidates[0][n - 1] = Complex(Real(1, p));
  for (std::size_t t = 0; t + 1 < n; ++t) candidates[1][t] = u[t + 1];
  for (auto& x : candidates[2]) x = Complex(Real(1, p));

  const Real drop = ldexp(Real(1, p), -static_cast<long>(p.bits()) / 2);
  std::vector<std::vector<Complex>> basis;
  for (auto& x : candidates) {
    const Real original = sqrt(inner(x, x).re());
    if (original.is_zero()) continue;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) {
        const Complex c = inner(q, x);
        for (std::size_t k = 0; k < n; ++k) x[k] -= q[k] * c;
      }
    }
    const Real norm = sqrt(inner(x, x).re());
    if (norm <= drop * original) continue;
    const Complex scale(Real(1, p) / norm);
    for (auto& xk : x) xk *= scale;
    basis.push_back(x);
  }
  return basis;
}

std::vector<Real> structured_singular_values(const BetaMatrix& b, Precision p) {
  const std::size_t n = b.order();
  const auto basis = correction_basis(b, p);
  std::vector<std::vector<Complex>> images;
  for (const auto& q : basis) images.push_back(b.apply(q));
  const std::size_t k = basis.size();
  Matrix<Complex> g(k, k, Complex(p));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      g(i, j) = inner(images[i], images[j]);
      g(j, i) = g(i, j).conj();
    }
  }
  std::vector<Real> values;
  values.reserve(n);
  for (const auto& lambda : hermitian_eigenvalues(g, 100)) values.push_back(sqrt(max(lambda, Real(p))));
  for (std::size_t i = k; i < n; ++i) values.emplace_back(1, p);
  std::sort(values.begin(), values.end(), [](const Real& x, const Real& y) { return x > y; });
  return values;
}

}  // namespace

std::vector<Real> singular_values(const BetaParam& beta, std::size_t n, Precision p, SvdMethod method) {
  const BetaMatrix b(beta, n);
  if (method == SvdMethod::automatic) method = n <= 48 ? SvdMethod::dense : SvdMethod::structured;
  if (method == SvdMethod::structured) return structured_singular_values(b, p);
  std::vector<Real> values;
  for (const auto& lambda : hermitian_spectrum(gram_dense(b, p))) values.push_back(sqrt(max(lambda, Real(p))));
  return values;
}

// ------------------------------------------------------------------- Weyl

TestFunction parse_test_function(std::string_view id) {
  for (const TestFunction f : all_test_functions()) {
    if (test_function_name(f) == id) return f;
  }
  fail(ErrorCode::unknown_test_function, "unknown test function '" + std::string(id) +
                                             "' (expected radial_bump, angular_window, re_moment, im_moment, unit_ball)");
}

std::string_view test_function_name(TestFunction f) noexcept {
  switch (f) {
    case TestFunction::radial_bump: return "radial_bump";
    case TestFunction::angular_window: return "angular_window";
    case TestFunction::re_moment: return "re_moment";
    case TestFunction::im_moment: return "im_moment";
    case TestFunction::unit_ball: return "unit_ball";
  }
  return "unknown";
}

std::vector<TestFunction> all_test_functions() {
  return {TestFunction::radial_bump, TestFunction::angular_window, TestFunction::re_moment, TestFunction::im_moment,
          TestFunction::unit_ball};
}

std::string_view weyl_kind_name(WeylKind k) noexcept { return k == WeylKind::eigen ? "eigen" : "singular"; }

namespace {

Real bump(const Real& x) {
  const Precision p = x.precision();
  const Real one(1, p);
  const Real x2 = x * x;
  if (!(x2 < one)) return Real(p);
  return exp(one - one / (one - x2));
}

Real taper_piece(const Real& x) {
  if (x.sign() <= 0) return Real(x.precision());
  return exp(-(Real(1, x.precision()) / x));
}

/// 1 on [0, 4], 0 on [5, inf), smooth in between.
Real window(const Real& r) {
  const Precision p = r.precision();
  const Real s = r - Real(4, p);
  const Real a = taper_piece(Real(1, p) - s);
  const Real b = taper_piece(s);
  return a / (a + b);
}

}  // namespace

Real evaluate_test_function(TestFunction f, const Complex& z) {
  const Precision p = z.precision();
  const Real r = abs(z);
  switch (f) {
    case TestFunction::radial_bump: return bump((r - Real(1, p)) * 2L);
    case TestFunction::angular_window: {
      const Real quarter = pi(p) / 4L;
      return bump((arg(z) - quarter) / quarter) * bump((r - Real(1, p)) * 2L);
    }
    case TestFunction::re_moment: return z.re() * window(r);
    case TestFunction::im_moment: return z.im() * window(r);
    case TestFunction::unit_ball: return window(r);
  }
  fail(ErrorCode::unknown_test_function, "unknown test function");
}

WeylReport weyl_sum(const std::vector<Complex>& values, TestFunction f, WeylKind kind) {
  if (values.empty()) fail(ErrorCode::invalid_parameter, "weyl_sum needs at least one value");
  Precision p = values.front().precision();
  for (const auto& v : values) p = max(p, v.precision());
  Real sum(p);
  for (const auto& v : values) sum += evaluate_test_function(f, v.at(p));
  Real empirical = sum / static_cast<long>(values.size());

  Real reference(p);
  if (kind == WeylKind::singular) {
    reference = evaluate_test_function(f, Complex(Real(1, p)));
  } else {
    const Real two_pi = pi(p) * 2L;
    const auto m = static_cast<long>(kQuadratureNodes);
    for (long j = 0; j < m; ++j) {
      const Real theta = two_pi * Real(j, p) / m - pi(p);
      reference += evaluate_test_function(f, polar(Real(1, p), theta));
    }
    reference /= m;
  }
  Real gap = abs(empirical - reference);
  return {f, kind, values.size(), std::move(empirical), std::move(reference), std::move(gap)};
}

WeylReport weyl_sum(const std::vector<Real>& values, TestFunction f, WeylKind kind) {
  std::vector<Complex> z;
  z.reserve(values.size());
  for (const auto& v : values) z.emplace_back(v);
  return weyl_sum(z, f, kind);
}

Real quasi_normality_gap(const BetaParam& beta, std::size_t n, Precision p) {
  if (beta.value().norm() < 1) {
    fail(ErrorCode::invalid_parameter, "quasi_normality_gap requires |beta| >= 1, got beta=" + beta.to_string());
  }
  SolveOptions options;
  options.precision = p;
  const RootSet roots = spectrum(beta, n, options);
  std::vector<Real> moduli;
  for (const auto& z : roots.roots) moduli.push_back(abs(z).at(p));
  std::sort(moduli.begin(), moduli.end(), [](const Real& x, const Real& y) { return x > y; });
  const auto sigma = singular_values(beta, n, p);
  Real sum(p);
  for (std::size_t i = 0; i < n; ++i) sum += abs(sigma[i] - moduli[i]);
  return sum / static_cast<long>(n);
}

ConditionCheck condition_bound_check(const BetaParam& beta, std::size_t n, Precision p) {
  beta.require({BetaClass::real_gt1}, "condition_bound_check");
  const auto sigma = singular_values(beta, n, p);
  if (sigma.back().is_zero()) fail(ErrorCode::singularity, "smallest singular value is zero");
  Real kappa = sigma.front() / sigma.back();
  const Rational shift = beta.value().re() - 1;
  const Rational inverse = 1 / shift;
  const Rational worst = shift < inverse ? inverse : shift;
  Real bound(Rational(worst * worst), p);
  const bool satisfied = kappa >= Real(Rational(49, 50), p) * bound;
  return {std::move(kappa), std::move(bound), satisfied};
}

}  // namespace betaspec
