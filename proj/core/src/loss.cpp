#include "ddakit/loss.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ddakit/errors.hpp"

namespace ddakit {

double sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

namespace {

void check_binary_batch(const std::vector<double>& scores,
                        const std::vector<int>& labels) {
  if (scores.size() != labels.size())
    throw ShapeMismatchError("binary batch: scores/labels length mismatch");
  for (int t : labels)
    if (t != 0 && t != 1)
      throw NotTwoClassError("binary batch: label " + std::to_string(t));
}

}  // namespace

LossEval dda_binary(const ScoreBatch& b, BinaryDdaVariant variant, double eps) {
  check_binary_batch(b.scores, b.labels);
  const std::size_t n_total = b.scores.size();

  LossEval out;
  out.grads.assign(n_total, 0.0);

  double n1 = 0.0, n2 = 0.0;
  for (int t : b.labels) (t == 0 ? n1 : n2) += 1.0;
  if (n1 == 0.0 || n2 == 0.0) {
    out.skipped = true;
    return out;
  }
  if (variant == BinaryDdaVariant::LiteralEq14 && (n1 < 2.0 || n2 < 2.0)) {
    out.skipped = true;  // unbiased class variance needs two samples
    return out;
  }

  double m1 = 0.0, m2 = 0.0;
  for (std::size_t i = 0; i < n_total; ++i)
    (b.labels[i] == 0 ? m1 : m2) += b.scores[i];
  m1 /= n1;
  m2 /= n2;
  const double gap = m1 - m2;

  double ss1 = 0.0, ss2 = 0.0;  // sums of squared deviations
  for (std::size_t i = 0; i < n_total; ++i) {
    const double dev = b.scores[i] - (b.labels[i] == 0 ? m1 : m2);
    (b.labels[i] == 0 ? ss1 : ss2) += dev * dev;
  }

  double numer_scale, denom, dev_weight1, dev_weight2;
  if (variant == BinaryDdaVariant::EigNormalized) {
    numer_scale = n1 * n2 / (n1 + n2);
    denom = ss1 + ss2 + eps;
    dev_weight1 = dev_weight2 = 1.0;
  } else {
    numer_scale = n1 * n2;
    dev_weight1 = n1 / (n1 - 1.0);
    dev_weight2 = n2 / (n2 - 1.0);
    denom = dev_weight1 * ss1 + dev_weight2 * ss2 + eps;
  }

  if (denom <= 0.0) {
    // Zero within-class spread with eps = 0: either every score is equal
    // (a well-defined zero) or the criterion is unbounded; skip the latter.
    if (gap != 0.0) out.skipped = true;
    return out;
  }

  out.value = -numer_scale * gap * gap / denom;
  const double inv_d2 = 1.0 / (denom * denom);
  for (std::size_t i = 0; i < n_total; ++i) {
    const bool first = b.labels[i] == 0;
    const double d_gap = first ? 1.0 / n1 : -1.0 / n2;
    const double dev = b.scores[i] - (first ? m1 : m2);
    const double d_denom = 2.0 * dev * (first ? dev_weight1 : dev_weight2);
    out.grads[i] =
        -numer_scale * (2.0 * gap * d_gap * denom - gap * gap * d_denom) * inv_d2;
  }
  return out;
}

VecLossEval dda_multiclass(const VecScoreBatch& b, double ridge) {
  if (b.scores.size() != b.labels.size())
    throw ShapeMismatchError("vec batch: scores/labels length mismatch");
  if (b.num_classes < 2) throw NotTwoClassError("vec batch: num_classes < 2");
  const std::size_t dim = static_cast<std::size_t>(b.num_classes - 1);
  for (const RVec& y : b.scores)
    if (y.size() != dim)
      throw ShapeMismatchError("vec batch: score dimension must be num_classes-1");
  for (int lbl : b.labels)
    if (lbl < 0 || lbl >= b.num_classes)
      throw ShapeMismatchError("vec batch: label out of range");

  const std::size_t n_total = b.scores.size();
  VecLossEval out;
  out.grads.assign(n_total, RVec(dim, 0.0));

  std::vector<double> counts(static_cast<std::size_t>(b.num_classes), 0.0);
  for (int lbl : b.labels) counts[static_cast<std::size_t>(lbl)] += 1.0;
  int present = 0;
  for (double c : counts)
    if (c > 0.0) present++;
  if (present < 2) {
    out.skipped = true;
    return out;
  }

  const double n = static_cast<double>(n_total);
  std::vector<RVec> means(counts.size(), RVec(dim, 0.0));
  RVec mixture(dim, 0.0);
  for (std::size_t i = 0; i < n_total; ++i) {
    const auto k = static_cast<std::size_t>(b.labels[i]);
    for (std::size_t j = 0; j < dim; ++j) {
      means[k][j] += b.scores[i][j];
      mixture[j] += b.scores[i][j];
    }
  }
  for (std::size_t k = 0; k < counts.size(); ++k)
    if (counts[k] > 0.0)
      for (double& v : means[k]) v /= counts[k];
  for (double& v : mixture) v /= n;

  Mat s_b(dim, dim), s_w(dim, dim);
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] == 0.0) continue;
    const RVec dev = means[k] - mixture;
    const double wk = counts[k] / n;
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) s_b(r, c) += wk * dev[r] * dev[c];
  }
  for (std::size_t i = 0; i < n_total; ++i) {
    const auto k = static_cast<std::size_t>(b.labels[i]);
    const RVec dev = b.scores[i] - means[k];
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) s_w(r, c) += dev[r] * dev[c] / n;
  }

  const Mat p = spd_inverse(add_ridge(s_w, ridge));
  const Mat q = matmul(matmul(p, s_b), p);
  out.value = -trace(matmul(p, s_b));

  // d(-J)/dy_i = -(2/n) [ P (m_k - m0) - Q (y_i - m_k) ]
  std::vector<RVec> between_term(counts.size(), RVec(dim, 0.0));
  for (std::size_t k = 0; k < counts.size(); ++k)
    if (counts[k] > 0.0) between_term[k] = matvec(p, means[k] - mixture);
  const double scale = 2.0 / n;
  for (std::size_t i = 0; i < n_total; ++i) {
    const auto k = static_cast<std::size_t>(b.labels[i]);
    const RVec within = matvec(q, b.scores[i] - means[k]);
    for (std::size_t j = 0; j < dim; ++j)
      out.grads[i][j] = -scale * (between_term[k][j] - within[j]);
  }
  return out;
}

LossEval bce(const std::vector<double>& scores, const std::vector<int>& targets) {
  check_binary_batch(scores, targets);
  const std::size_t n = scores.size();
  LossEval out;
  out.grads.assign(n, 0.0);
  if (n == 0) return out;

  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double p = std::clamp(sigmoid(scores[i]), 1e-7, 1.0 - 1e-7);
    const double t = static_cast<double>(targets[i]);
    sum += -(t * std::log(p) + (1.0 - t) * std::log(1.0 - p));
    out.grads[i] = (sigmoid(scores[i]) - t) / static_cast<double>(n);
  }
  out.value = sum / static_cast<double>(n);
  return out;
}

LossEval dice(const std::vector<double>& scores, const std::vector<int>& targets) {
  check_binary_batch(scores, targets);
  const std::size_t n = scores.size();
  const double smoothing = 1.0;
  LossEval out;
  out.grads.assign(n, 0.0);
  if (n == 0) return out;

  double sum_p = 0.0, sum_t = 0.0, sum_pt = 0.0;
  std::vector<double> probs(n);
  for (std::size_t i = 0; i < n; ++i) {
    probs[i] = sigmoid(scores[i]);
    sum_p += probs[i];
    sum_t += static_cast<double>(targets[i]);
    sum_pt += probs[i] * static_cast<double>(targets[i]);
  }
  const double denom = sum_p + sum_t + smoothing;
  const double numer = 2.0 * sum_pt + smoothing;
  out.value = 1.0 - numer / denom;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(targets[i]);
    const double d_by_p = -(2.0 * t * denom - numer) / (denom * denom);
    out.grads[i] = d_by_p * probs[i] * (1.0 - probs[i]);
  }
  return out;
}

}  // namespace ddakit
