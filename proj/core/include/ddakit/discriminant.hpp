#pragma once

#include <cstddef>
#include <vector>

#include "ddakit/numerics.hpp"

namespace ddakit {

/// Normalization convention for covariance-like statistics.  Biased divides
/// by the sample count (n_k, n); Unbiased divides by one less (n_k-1, n-1).
/// Only the Biased convention makes the mixture scatter decompose exactly
/// into within- plus between-class scatter.
enum class Convention { Biased, Unbiased };

/// Labeled feature vectors partitioned into num_classes classes.
struct SampleSet {
  std::vector<RVec> features;  // all share one dimension
  std::vector<int> labels;     // each in [0, num_classes)
  int num_classes = 0;

  std::size_t size() const { return features.size(); }
  std::size_t dim() const { return features.empty() ? 0 : features[0].size(); }
  std::vector<std::size_t> class_counts() const;
};

/// Throws ShapeMismatchError on inconsistent dimensions or out-of-range labels.
void validate(const SampleSet& s);

struct ClassStats {
  std::vector<RVec> means;
  std::vector<Mat> covariances;
  Convention convention = Convention::Biased;
};

struct ScatterSet {
  std::vector<RVec> class_means;
  RVec mixture_mean;
  Mat s_b;  // between-class scatter
  Mat s_w;  // within-class scatter
  Mat s_m;  // mixture (total) scatter
  Convention convention = Convention::Biased;
};

/// Affine one-dimensional projection y = w.x + w0 with unit-norm w.
struct LinearDiscriminant {
  RVec w;
  double w0 = 0.0;
};

/// Per-class mean and covariance.  Unbiased requires every class to hold at
/// least two samples; empty classes are rejected under both conventions.
ClassStats class_stats(const SampleSet& s, Convention convention);

double project(const LinearDiscriminant& d, const RVec& x);

struct ProjectedStats {
  double mean = 0.0;      // w.mu + w0
  double variance = 0.0;  // w.Sigma.w
};

std::vector<ProjectedStats> projected_class_stats(const LinearDiscriminant& d,
                                                  const ClassStats& stats);

/// Two-class separation of projected statistics: (m1-m2)^2 / (s1^2+s2^2).
/// Throws ZeroWithinScatterError when the summed variance is <= 1e-12.
double fisher_criterion(double m1, double m2, double s1_sq, double s2_sq);

/// Prior-weighted scatter-around-zero variant:
/// (p1 m1^2 + p2 m2^2) / (p1 s1^2 + p2 s2^2).  Not invariant to a common
/// bias added to the projections.
double fukunaga_criterion(double p1, double p2, double m1, double m2,
                          double s1_sq, double s2_sq);

/// Class means, mixture mean, and the S_B / S_W / S_M scatter matrices with
/// class scatters weighted by n_k/n.
ScatterSet scatter_matrices(const SampleSet& s, Convention convention);

enum class ScatterPair { BW, WM, BM };

struct TraceCriterion {
  double j = 0.0;               // tr{(S2 + ridge I)^-1 S1}
  std::vector<double> eigvals;  // spectrum of the same product, descending
};

/// Separability as the trace of (S2 + ridge I)^-1 S1 for the selected scatter
/// pair; the eigenvalues come from the symmetric congruence
/// S2^-1/2 S1 S2^-1/2 and sum to j.
TraceCriterion trace_criterion(const ScatterSet& ss, ScatterPair pair, double ridge);

/// Scale-aware default ridge: 1e-8 * tr(S_W) / dim.
double default_ridge(const Mat& s_w);

/// Closed-form two-class discriminant: w proportional to
/// (S_W + ridge I)^-1 (mu_1 - mu_2), unit norm, oriented so class 0 projects
/// positive; w0 places the projected decision threshold at 0 (midpoint of the
/// projected class means).
LinearDiscriminant fit_lda(const SampleSet& s, double ridge);

/// Predicted class index under the fitted threshold: 0 when projection >= 0.
int predict(const LinearDiscriminant& d, const RVec& x);

double accuracy(const LinearDiscriminant& d, const SampleSet& s);

}  // namespace ddakit
