#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "betaspec/numerics.hpp"

namespace betaspec {

/// Row-major dense matrix. Element type is whatever arithmetic the caller
/// asked for (ExactComplex, Rational, Complex, Real, double...).
template <class T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> data_;
};

/// Exact determinant by Gaussian elimination over Q(i).
ExactComplex determinant(Matrix<ExactComplex> a);

/// Exact solution of a x = b; throws `singularity` when a is singular.
std::vector<ExactComplex> solve(Matrix<ExactComplex> a, std::vector<ExactComplex> b);

/// Exact rank.
std::size_t rank(Matrix<ExactComplex> a);

Matrix<ExactComplex> to_exact(const Matrix<Rational>& a);

/// Eigenvalues of a real symmetric matrix by cyclic two-sided Jacobi
/// rotations at the matrix's precision, sorted nonincreasing. Throws
/// `convergence_failure` after `max_sweeps` sweeps.
std::vector<Real> jacobi_eigenvalues(Matrix<Real> a, unsigned max_sweeps = 60);

/// Eigenvalues of a Hermitian matrix via the real symmetric embedding
/// [[Re, -Im], [Im, Re]], whose spectrum is that of `a` with every value
/// doubled. Sorted nonincreasing.
std::vector<Real> hermitian_eigenvalues(const Matrix<Complex>& a, unsigned max_sweeps = 60);

}  // namespace betaspec
