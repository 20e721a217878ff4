#pragma once

#include <cstddef>
#include <vector>

namespace ddakit {

using RVec = std::vector<double>;

/// Dense row-major matrix of 64-bit reals.
struct Mat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}
  Mat(std::size_t r, std::size_t c, std::vector<double> d);

  double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  static Mat identity(std::size_t n);
};

Mat transpose(const Mat& a);
Mat matmul(const Mat& a, const Mat& b);
Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat operator*(double s, const Mat& a);

/// a + s * I
Mat add_ridge(const Mat& a, double s);

/// Outer product a b^T.
Mat outer(const RVec& a, const RVec& b);

RVec matvec(const Mat& a, const RVec& x);
double dot(const RVec& a, const RVec& b);
double norm2(const RVec& a);
RVec operator+(const RVec& a, const RVec& b);
RVec operator-(const RVec& a, const RVec& b);
RVec operator*(double s, const RVec& a);

/// Largest absolute entry; 0 for an empty matrix.
double max_abs(const Mat& a);

/// Sum of diagonal entries of a square matrix.
double trace(const Mat& a);

/// Eigenvalues (descending) with column-aligned orthonormal eigenvectors.
struct EigPairs {
  std::vector<double> values;
  Mat vectors;  // column i pairs with values[i]
};

/// Symmetric eigendecomposition by cyclic Jacobi rotations.  The input must
/// be square and symmetric within 1e-9 relative to its largest entry.
/// Throws NonSymmetricError or NoConvergenceError.
EigPairs sym_eig(const Mat& a);

/// Solve a x = b for symmetric positive definite a via Cholesky.
/// Throws NotPositiveDefiniteError when a factorization pivot is <= 0.
Mat solve_spd(const Mat& a, const Mat& b);
RVec solve_spd(const Mat& a, const RVec& b);

/// Inverse of a symmetric positive definite matrix.
Mat spd_inverse(const Mat& a);

}  // namespace ddakit
