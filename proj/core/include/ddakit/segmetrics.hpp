#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ddakit {

/// Binary mask, row-major, entries 0/1.
struct MaskImage {
  int height = 0;
  int width = 0;
  std::vector<std::uint8_t> pixels;

  MaskImage() = default;
  MaskImage(int h, int w) : height(h), width(w), pixels(static_cast<std::size_t>(h) * w, 0) {}
  std::uint8_t& at(int r, int c) { return pixels[static_cast<std::size_t>(r) * width + c]; }
  std::uint8_t at(int r, int c) const { return pixels[static_cast<std::size_t>(r) * width + c]; }
};

/// Real-valued per-pixel predictions, row-major.
struct ScoreMap {
  int height = 0;
  int width = 0;
  std::vector<double> scores;

  ScoreMap() = default;
  ScoreMap(int h, int w) : height(h), width(w), scores(static_cast<std::size_t>(h) * w, 0.0) {}
  double& at(int r, int c) { return scores[static_cast<std::size_t>(r) * width + c]; }
  double at(int r, int c) const { return scores[static_cast<std::size_t>(r) * width + c]; }
};

/// Resolution-adaptive erosion depth: round(0.02 sqrt(H^2+W^2)), at least 1,
/// half-up rounding.
int boundary_iterations(int height, int width);

/// Morphological erosion with the full 3x3 structuring element, iterated;
/// pixels outside the image count as background.
MaskImage erode(const MaskImage& m, int iterations);

/// Boundary band: the mask minus its d-fold erosion, d from
/// boundary_iterations of the mask's own size.
MaskImage boundary_mask(const MaskImage& m);

struct RegionScores {
  double iou = 0.0;
  double f1 = 0.0;
  double f_beta = 0.0;
};

/// Overlap metrics from TP/FP/FN pixel counts.  Both masks empty counts as a
/// perfect match (all three metrics 1); exactly one empty scores 0.
RegionScores region_metrics(const MaskImage& pred, const MaskImage& gt, double beta_sq);

/// Area under the ROC curve as the tie-aware rank statistic: the probability
/// that a random foreground score exceeds a random background score, ties
/// counted one half.  Throws OneClassOnlyError when gt is single-class.
double auc(const ScoreMap& scores, const MaskImage& gt);

enum class SweepObjective { IoU, F1, FBeta };

struct SweepResult {
  double theta_star = 0.5;
  std::vector<std::pair<double, double>> curve;  // (theta, objective)
  bool degenerate = false;                       // constant score map
};

/// Min-max normalize the scores to [0,1] and sweep a uniform threshold grid;
/// theta_star is the lowest theta attaining the maximum objective.  A pixel
/// is predicted foreground when its normalized score >= theta.
SweepResult threshold_sweep(const ScoreMap& scores, const MaskImage& gt,
                            SweepObjective objective, int grid = 256);

struct HistogramReport {
  std::vector<double> fg_counts;
  std::vector<double> bg_counts;
  double fg_mean = 0.0, bg_mean = 0.0;
  double fg_var = 0.0, bg_var = 0.0;  // biased (population) variances
  double overlap = 0.0;               // sum over bins of min class densities
};

/// Class-conditional histograms of the min-max normalized scores over [0,1],
/// plus per-class mean/variance of the normalized scores and the histogram
/// overlap coefficient.  An absent class yields zero counts and stats.
HistogramReport score_histogram(const ScoreMap& scores, const MaskImage& gt, int bins);

struct MetricReport {
  double iou = 0.0, f1 = 0.0, f_beta = 0.0, auc = 0.0;
  double b_iou = 0.0, b_f1 = 0.0, b_f_beta = 0.0;
  double threshold_used = 0.5;
  int boundary_iters = 1;
};

/// Full per-image evaluation: optimal-threshold (F_beta objective) region
/// metrics, their boundary-mask counterparts, and AUC.
MetricReport evaluate(const ScoreMap& scores, const MaskImage& gt,
                      double beta_sq = 0.3, int grid = 256);

/// Scores min-max normalized to [0,1]; a constant map normalizes to all 0.5.
ScoreMap normalize_minmax(const ScoreMap& s);

MaskImage binarize(const ScoreMap& normalized, double theta);

/// CSV rows `name,iou,f1,fbeta,auc,biou,bf1,bfbeta,theta,d` plus a MEAN row.
void write_metric_csv(const std::string& path, const std::vector<std::string>& names,
                      const std::vector<MetricReport>& reports);

}  // namespace ddakit
