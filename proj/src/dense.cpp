#include "betaspec/dense.hpp"

#include <algorithm>
#include <utility>

namespace betaspec {

namespace {

/// In-place forward elimination; returns the pivot columns. `sign` tracks
/// row swaps for the determinant. Optional right-hand side follows the rows.
std::vector<std::size_t> eliminate(Matrix<ExactComplex>& a, std::vector<ExactComplex>* rhs, int& sign) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  sign = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(p, k), a(r, k));
      if (rhs != nullptr) std::swap((*rhs)[p], (*rhs)[r]);
      sign = -sign;
    }
    const ExactComplex inv = a(r, c).inverse();
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a(i, c).is_zero()) continue;
      const ExactComplex f = a(i, c) * inv;
      for (std::size_t k = c; k < cols; ++k) a(i, k) -= f * a(r, k);
      if (rhs != nullptr) (*rhs)[i] -= f * (*rhs)[r];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

ExactComplex determinant(Matrix<ExactComplex> a) {
  if (a.rows() != a.cols()) fail(ErrorCode::invalid_parameter, "determinant of a non-square matrix");
  int sign = 1;
  const auto pivots = eliminate(a, nullptr, sign);
  if (pivots.size() < a.rows()) return ExactComplex(0);
  ExactComplex d(sign);
  for (std::size_t i = 0; i < a.rows(); ++i) d *= a(i, i);
  return d;
}

std::vector<ExactComplex> solve(Matrix<ExactComplex> a, std::vector<ExactComplex> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) fail(ErrorCode::invalid_parameter, "solve: dimension mismatch");
  int sign = 1;
  if (eliminate(a, &b, sign).size() < n) fail(ErrorCode::singularity, "solve: singular matrix");
  std::vector<ExactComplex> x(n);
  for (std::size_t i = n; i-- > 0;) {
    ExactComplex s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= a(i, k) * x[k];
    x[i] = s / a(i, i);
  }
  return x;
}

std::size_t rank(Matrix<ExactComplex> a) {
  int sign = 1;
  return eliminate(a, nullptr, sign).size();
}

Matrix<ExactComplex> to_exact(const Matrix<Rational>& a) {
  Matrix<ExactComplex> out(a.rows(), a.cols(), ExactComplex(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = ExactComplex(a(i, j));
  }
  return out;
}

std::vector<Real> jacobi_eigenvalues(Matrix<Real> a, unsigned max_sweeps) {
  const std::size_t n = a.rows();
  if (a.cols() != n) fail(ErrorCode::invalid_parameter, "jacobi: non-square matrix");
  if (n == 0) return {};
  const Precision p = a(0, 0).precision();
  // Off-diagonal mass below eps^2 * total mass counts as converged.
  const Real eps = ldexp(Real(1, p), -static_cast<long>(p.bits()) + 8);

  const auto off_norm = [&]() {
    Real s(p);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) s += a(i, j) * a(i, j);
    }
    return s;
  };
  Real total(p);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) total += a(i, j) * a(i, j);
  }

  bool converged = n == 1;
  for (unsigned sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    if (off_norm() <= eps * eps * total) {
      converged = true;
      break;
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (a(i, j).is_zero()) continue;
        // Rutishauser's stable rotation.
        const Real theta = (a(j, j) - a(i, i)) / (a(i, j) * 2L);
        Real t = Real(1, p) / (abs(theta) + sqrt(theta * theta + Real(1, p)));
        if (theta.sign() < 0) t = -t;
        const Real c = Real(1, p) / sqrt(t * t + Real(1, p));
        const Real s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const Real aki = a(k, i);
          const Real akj = a(k, j);
          a(k, i) = c * aki - s * akj;
          a(k, j) = s * aki + c * akj;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Real aik = a(i, k);
          const Real ajk = a(j, k);
          a(i, k) = c * aik - s * ajk;
          a(j, k) = s * aik + c * ajk;
        }
      }
    }
  }
  if (!converged && off_norm() > eps * eps * total) {
    fail(ErrorCode::convergence_failure, "jacobi eigensolver did not converge");
  }
  std::vector<Real> values;
  values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) values.push_back(a(i, i));
  std::sort(values.begin(), values.end(), [](const Real& x, const Real& y) { return x > y; });
  return values;
}

std::vector<Real> hermitian_eigenvalues(const Matrix<Complex>& a, unsigned max_sweeps) {
  const std::size_t n = a.rows();
  if (n == 0) return {};
  const Precision p = a(0, 0).precision();
  Matrix<Real> embed(2 * n, 2 * n, Real(p));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      embed(i, j) = a(i, j).re();
      embed(i + n, j + n) = a(i, j).re();
      embed(i, j + n) = -a(i, j).im();
      embed(i + n, j) = a(i, j).im();
    }
  }
  auto doubled = jacobi_eigenvalues(std::move(embed), max_sweeps);
  std::vector<Real> values;
  values.reserve(n);
  for (std::size_t k = 0; k < n; ++k) values.push_back(doubled[2 * k]);
  return values;
}

}  // namespace betaspec
