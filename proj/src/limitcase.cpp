#include "betaspec/limitcase.hpp"

#include <algorithm>

#include "betaspec/betamatrix.hpp"
#include "betaspec/dense.hpp"

namespace betaspec {

std::vector<Rational> kernel_vector(std::size_t n) {
  if (n < 2) fail(ErrorCode::invalid_order, "kernel_vector requires n >= 2");
  const auto x = to_exact(build_x_block(n));
  std::vector<ExactComplex> rhs(n - 1, ExactComplex(-1));
  rhs[0] -= ExactComplex(1);
  std::vector<ExactComplex> s;
  try {
    s = solve(x, std::move(rhs));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::singularity) throw;
    fail(ErrorCode::inconsistency, "X_{n-1} is singular for n=" + std::to_string(n));
  }
  std::vector<Rational> w;
  w.reserve(n);
  w.emplace_back(1);
  for (const auto& v : s) w.push_back(v.re());
  return w;
}

namespace {

/// X v with X = T + e e^T: (Xv)_i = sum(v) + v_{i-1}.
template <class T>
std::vector<T> apply_x(const std::vector<T>& v) {
  T total = v[0];
  for (std::size_t i = 1; i < v.size(); ++i) total += v[i];
  std::vector<T> w;
  w.reserve(v.size());
  w.push_back(total);
  for (std::size_t i = 1; i < v.size(); ++i) w.push_back(total + v[i - 1]);
  return w;
}

}  // namespace

PowerTrace power_method_trace(std::size_t n, std::size_t iterations) {
  if (n < 3) fail(ErrorCode::invalid_order, "power_method_trace requires n >= 3");
  if (iterations < 1) fail(ErrorCode::invalid_parameter, "power_method_trace requires K >= 1");
  PowerTrace trace;
  trace.n = n;
  trace.iterates.emplace_back(n - 1, Integer(1));
  for (std::size_t k = 0; k < iterations; ++k) trace.iterates.push_back(apply_x(trace.iterates.back()));
  for (const auto& v : trace.iterates) trace.first_components.push_back(v[0]);
  for (std::size_t k = 0; k < iterations; ++k) {
    Rational r(trace.first_components[k + 1], trace.first_components[k]);
    r.canonicalize();
    trace.ratios.push_back(r);
  }
  return trace;
}

Integer table_first_component(unsigned k, const Integer& n) {
  const Integer n2 = n * n;
  const Integer n3 = n2 * n;
  const Integer n4 = n3 * n;
  switch (k) {
    case 1: return n - 1;
    case 2: return n2 - n - 1;
    case 3: return n3 - n2 - 2 * n;
    case 4: return n4 - n3 - 3 * n2 + 1;
    case 5: return n4 * n - n4 - 4 * n3 + 3 * n + 1;
    default: break;
  }
  fail(ErrorCode::invalid_parameter, "closed forms exist for k = 1..5 only");
}

namespace {

AsymptoticFit make_fit(std::size_t n, Real lambda, std::size_t iterations) {
  const Precision p = lambda.precision();
  Real c0 = lambda - Real(n, p);
  Real c1 = c0 * static_cast<long>(n);
  return {n, std::move(lambda), std::move(c0), std::move(c1), iterations};
}

}  // namespace

AsymptoticFit lambda_max_beta1(std::size_t n, unsigned target_digits) {
  if (n < 2) fail(ErrorCode::invalid_order, "lambda_max_beta1 requires n >= 2");
  const Precision p = Precision::for_digits(target_digits + 10);
  if (n == 2) return make_fit(n, Real(1, p), 0);

  const Real tol = ten_to_minus(target_digits, p);
  std::vector<Integer> exact(n - 1, Integer(1));
  std::vector<Real> approx;
  bool use_exact = true;
  std::optional<Real> previous;
  for (std::size_t k = 1; k <= kPowerIterationCap; ++k) {
    Real ratio(p);
    if (use_exact) {
      auto next = apply_x(exact);
      ratio = Real(next[0], p) / Real(exact[0], p);
      exact = std::move(next);
      if (mpz_sizeinbase(exact[0].get_mpz_t(), 2) > kExactBitCap) {
        use_exact = false;
        const Real scale(exact[0], p);
        for (const auto& v : exact) approx.push_back(Real(v, p) / scale);
        exact.clear();
      }
    } else {
      auto next = apply_x(approx);
      ratio = next[0] / approx[0];
      const Real scale = next[0];
      for (auto& v : next) v /= scale;
      approx = std::move(next);
    }
    if (previous && abs(ratio - *previous) < tol) return make_fit(n, std::move(ratio), k);
    previous = std::move(ratio);
  }
  fail(ErrorCode::convergence_failure, "power method did not converge within " +
                                           std::to_string(kPowerIterationCap) + " iterations");
}

bool gerschgorin_check(std::size_t n) {
  const AsymptoticFit fit = lambda_max_beta1(n, 30);
  return fit.lambda_max < Real(n, fit.lambda_max.precision());
}

Real richardson_c2(const std::vector<AsymptoticFit>& fits) {
  if (fits.size() < 2) fail(ErrorCode::invalid_parameter, "richardson_c2 needs at least two fits");
  std::vector<const AsymptoticFit*> sorted;
  for (const auto& f : fits) sorted.push_back(&f);
  std::sort(sorted.begin(), sorted.end(), [](const AsymptoticFit* a, const AsymptoticFit* b) { return a->n < b->n; });
  const AsymptoticFit& a = *sorted[sorted.size() - 2];
  const AsymptoticFit& b = *sorted.back();
  if (a.n == b.n) fail(ErrorCode::invalid_parameter, "richardson_c2 needs two distinct orders");
  const auto d = [](const AsymptoticFit& f) {
    const Precision p = f.lambda_max.precision();
    const Real nn(f.n, p);
    return (f.c0_est + Real(1, p) / nn) * nn * nn;
  };
  // d(n) = c2 + c3/n + ...; eliminate the 1/n term.
  const Precision p = max(a.lambda_max.precision(), b.lambda_max.precision());
  const Real na(a.n, p);
  const Real nb(b.n, p);
  return (d(b) * nb - d(a) * na) / (nb - na);
}

}  // namespace betaspec
