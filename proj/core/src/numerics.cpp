#include "ddakit/numerics.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ddakit/errors.hpp"

namespace ddakit {

Mat::Mat(std::size_t r, std::size_t c, std::vector<double> d)
    : rows(r), cols(c), data(std::move(d)) {
  if (data.size() != rows * cols) {
    throw ShapeMismatchError("Mat: data length does not match rows*cols");
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Mat transpose(const Mat& a) {
  Mat t(a.cols, a.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
  return t;
}

Mat matmul(const Mat& a, const Mat& b) {
  if (a.cols != b.rows) throw ShapeMismatchError("matmul: inner dimensions differ");
  Mat c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw ShapeMismatchError("Mat+: shapes differ");
  Mat c = a;
  for (std::size_t i = 0; i < c.data.size(); ++i) c.data[i] += b.data[i];
  return c;
}

Mat operator-(const Mat& a, const Mat& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw ShapeMismatchError("Mat-: shapes differ");
  Mat c = a;
  for (std::size_t i = 0; i < c.data.size(); ++i) c.data[i] -= b.data[i];
  return c;
}

Mat operator*(double s, const Mat& a) {
  Mat c = a;
  for (double& v : c.data) v *= s;
  return c;
}

Mat add_ridge(const Mat& a, double s) {
  Mat c = a;
  for (std::size_t i = 0; i < c.rows && i < c.cols; ++i) c(i, i) += s;
  return c;
}

Mat outer(const RVec& a, const RVec& b) {
  Mat c(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c(i, j) = a[i] * b[j];
  return c;
}

RVec matvec(const Mat& a, const RVec& x) {
  if (a.cols != x.size()) throw ShapeMismatchError("matvec: dimensions differ");
  RVec y(a.rows, 0.0);
  for (std::size_t i = 0; i < a.rows; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols; ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

double dot(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) throw ShapeMismatchError("dot: lengths differ");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const RVec& a) { return std::sqrt(dot(a, a)); }

RVec operator+(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) throw ShapeMismatchError("RVec+: lengths differ");
  RVec c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

RVec operator-(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) throw ShapeMismatchError("RVec-: lengths differ");
  RVec c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
  return c;
}

RVec operator*(double s, const RVec& a) {
  RVec c = a;
  for (double& v : c) v *= s;
  return c;
}

double max_abs(const Mat& a) {
  double m = 0.0;
  for (double v : a.data) m = std::max(m, std::abs(v));
  return m;
}

double trace(const Mat& a) {
  if (a.rows != a.cols) throw ShapeMismatchError("trace: matrix not square");
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows; ++i) s += a(i, i);
  return s;
}

EigPairs sym_eig(const Mat& a) {
  if (a.rows != a.cols) throw NonSymmetricError("sym_eig: matrix not square");
  const std::size_t n = a.rows;
  const double scale = max_abs(a);
  const double sym_tol = 1e-9 * std::max(scale, 1.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(a(i, j) - a(j, i)) > sym_tol)
        throw NonSymmetricError("sym_eig: matrix not symmetric at (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");

  // Work on the symmetrized copy so roundoff asymmetry cannot accumulate.
  Mat w = a;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double avg = 0.5 * (w(i, j) + w(j, i));
      w(i, j) = w(j, i) = avg;
    }
  Mat v = Mat::identity(n);

  const double stop = 1e-15 * std::max(scale, 1e-300);
  const int max_sweeps = 100;
  bool converged = false;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(w(p, q)));
    if (off <= stop) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = w(p, q);
        if (std::abs(apq) <= stop) continue;
        const double theta = (w(q, q) - w(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double app = w(p, p), aqq = w(q, q);
        w(p, p) = app - t * apq;
        w(q, q) = aqq + t * apq;
        w(p, q) = w(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = w(k, p), akq = w(k, q);
          w(k, p) = w(p, k) = c * akp - s * akq;
          w(k, q) = w(q, k) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  if (!converged) {
    // Final check: the last sweep may have finished the job.
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(w(p, q)));
    if (off > stop) throw NoConvergenceError("sym_eig: Jacobi sweep budget exhausted");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return w(i, i) > w(j, j); });

  EigPairs out;
  out.values.resize(n);
  out.vectors = Mat(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = w(order[j], order[j]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
  }
  return out;
}

namespace {

// Lower Cholesky factor; throws on non-positive pivots.
Mat cholesky_lower(const Mat& a) {
  if (a.rows != a.cols) throw ShapeMismatchError("cholesky: matrix not square");
  const std::size_t n = a.rows;
  Mat l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = a(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (d <= 0.0)
      throw NotPositiveDefiniteError("cholesky: pivot " + std::to_string(j) +
                                     " is not positive");
    l(j, j) = std::sqrt(d);
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / l(j, j);
    }
  }
  return l;
}

}  // namespace

Mat solve_spd(const Mat& a, const Mat& b) {
  if (a.rows != b.rows) throw ShapeMismatchError("solve_spd: rhs rows differ");
  const Mat l = cholesky_lower(a);
  const std::size_t n = a.rows;
  Mat x(b.rows, b.cols);
  RVec y(n);
  for (std::size_t col = 0; col < b.cols; ++col) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = b(i, col);
      for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * y[k];
      y[i] = s / l(i, i);
    }
    for (std::size_t ii = n; ii-- > 0;) {
      double s = y[ii];
      for (std::size_t k = ii + 1; k < n; ++k) s -= l(k, ii) * x(k, col);
      x(ii, col) = s / l(ii, ii);
    }
  }
  return x;
}

RVec solve_spd(const Mat& a, const RVec& b) {
  Mat rhs(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  const Mat x = solve_spd(a, rhs);
  RVec out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = x(i, 0);
  return out;
}

Mat spd_inverse(const Mat& a) { return solve_spd(a, Mat::identity(a.rows)); }

}  // namespace ddakit
