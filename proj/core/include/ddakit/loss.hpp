#pragma once

#include <vector>

#include "ddakit/numerics.hpp"

namespace ddakit {

/// Scalar loss value plus per-sample gradient with respect to the raw scores.
/// A degenerate batch (see each loss) sets skipped, zero value, zero grads.
struct LossEval {
  double value = 0.0;
  std::vector<double> grads;
  bool skipped = false;
};

/// Multi-class counterpart: one gradient vector per sample.
struct VecLossEval {
  double value = 0.0;
  std::vector<RVec> grads;
  bool skipped = false;
};

/// One raw score per sample with its binary class label.
struct ScoreBatch {
  std::vector<double> scores;
  std::vector<int> labels;  // 0 or 1
};

/// (L-1)-dimensional score vectors with class labels in [0, num_classes).
struct VecScoreBatch {
  std::vector<RVec> scores;
  std::vector<int> labels;
  int num_classes = 0;
};

/// Scaling of the closed-form binary objective.
///  - EigNormalized: -(n1 n2 / n) (m1-m2)^2 / (SS1 + SS2 + eps), the leading
///    generalized eigenvalue of the 1-D biased scatter pair, negated.
///    Batch-size independent.
///  - LiteralEq14: -n1 n2 (m1-m2)^2 / (n1 s1^2 + n2 s2^2 + eps) with
///    unbiased class variances (n times the eigenvalue).
enum class BinaryDdaVariant { EigNormalized, LiteralEq14 };

/// Closed-form binary discriminant loss with analytic per-score gradients.
/// Value is always <= 0 and equals 0 exactly when the class means coincide.
/// With eps = 0 the value is invariant under any affine map of the scores.
/// Batches holding a single class are skipped (zero loss, zero grads), as are
/// LiteralEq14 batches with a one-sample class (its unbiased variance is
/// undefined) and batches whose within-class spread and eps are both zero.
LossEval dda_binary(const ScoreBatch& b, BinaryDdaVariant variant, double eps);

/// Multi-class discriminant loss -tr{(S_W + ridge I)^-1 S_B} over biased
/// batch scatter, with analytic gradients through both scatter matrices.
/// For num_classes = 2 and 1-D scores this reduces to
/// dda_binary(EigNormalized) under the mapping eps = ridge * n.
/// Skipped when fewer than two classes are present in the batch.
VecLossEval dda_multiclass(const VecScoreBatch& b, double ridge);

/// Mean binary cross-entropy over sigmoid(score) with probabilities clamped
/// to [1e-7, 1-1e-7]; gradients are (p - t)/n in the raw scores.
LossEval bce(const std::vector<double>& scores, const std::vector<int>& targets);

/// Soft Dice loss 1 - (2 sum(p t) + 1)/(sum p + sum t + 1) over
/// p = sigmoid(score).
LossEval dice(const std::vector<double>& scores, const std::vector<int>& targets);

double sigmoid(double x);

}  // namespace ddakit
