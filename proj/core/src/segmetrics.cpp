#include "ddakit/segmetrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>

#include "ddakit/errors.hpp"

namespace ddakit {

namespace {

void check_shapes(int h1, int w1, int h2, int w2, const char* who) {
  if (h1 != h2 || w1 != w2)
    throw ShapeMismatchError(std::string(who) + ": image shapes differ");
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

int boundary_iterations(int height, int width) {
  const double diag = std::sqrt(static_cast<double>(height) * height +
                                static_cast<double>(width) * width);
  const int d = static_cast<int>(std::floor(0.02 * diag + 0.5));
  return std::max(d, 1);
}

MaskImage erode(const MaskImage& m, int iterations) {
  MaskImage cur = m;
  for (int it = 0; it < iterations; ++it) {
    MaskImage next(cur.height, cur.width);
    for (int r = 0; r < cur.height; ++r) {
      for (int c = 0; c < cur.width; ++c) {
        if (!cur.at(r, c)) continue;
        bool keep = true;
        for (int dr = -1; dr <= 1 && keep; ++dr) {
          for (int dc = -1; dc <= 1; ++dc) {
            const int rr = r + dr, cc = c + dc;
            if (rr < 0 || rr >= cur.height || cc < 0 || cc >= cur.width ||
                !cur.at(rr, cc)) {
              keep = false;
              break;
            }
          }
        }
        next.at(r, c) = keep ? 1 : 0;
      }
    }
    cur = std::move(next);
  }
  return cur;
}

MaskImage boundary_mask(const MaskImage& m) {
  const int d = boundary_iterations(m.height, m.width);
  const MaskImage eroded = erode(m, d);
  MaskImage out(m.height, m.width);
  for (std::size_t i = 0; i < m.pixels.size(); ++i)
    out.pixels[i] = (m.pixels[i] && !eroded.pixels[i]) ? 1 : 0;
  return out;
}

RegionScores region_metrics(const MaskImage& pred, const MaskImage& gt, double beta_sq) {
  check_shapes(pred.height, pred.width, gt.height, gt.width, "region_metrics");
  std::size_t tp = 0, fp = 0, fn = 0;
  for (std::size_t i = 0; i < pred.pixels.size(); ++i) {
    const bool p = pred.pixels[i] != 0;
    const bool g = gt.pixels[i] != 0;
    if (p && g) tp++;
    else if (p) fp++;
    else if (g) fn++;
  }

  RegionScores out;
  if (tp + fp + fn == 0) {  // both masks empty
    out.iou = out.f1 = out.f_beta = 1.0;
    return out;
  }
  const double tpd = static_cast<double>(tp);
  const double fpd = static_cast<double>(fp);
  const double fnd = static_cast<double>(fn);
  out.iou = tpd / (tpd + fpd + fnd);
  out.f1 = 2.0 * tpd / (2.0 * tpd + fpd + fnd);
  out.f_beta = (1.0 + beta_sq) * tpd / ((1.0 + beta_sq) * tpd + beta_sq * fnd + fpd);
  return out;
}

double auc(const ScoreMap& scores, const MaskImage& gt) {
  check_shapes(scores.height, scores.width, gt.height, gt.width, "auc");
  const std::size_t n = scores.scores.size();
  std::size_t n_fg = 0;
  for (auto p : gt.pixels) n_fg += p ? 1 : 0;
  const std::size_t n_bg = n - n_fg;
  if (n_fg == 0 || n_bg == 0)
    throw OneClassOnlyError("auc: ground truth holds a single class");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores.scores[a] < scores.scores[b];
  });

  // Average ranks across ties, then the Mann-Whitney statistic.
  double rank_sum_fg = 0.0;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && scores.scores[order[j + 1]] == scores.scores[order[i]]) ++j;
    const double avg_rank = 0.5 * static_cast<double>(i + 1 + j + 1);
    for (std::size_t k = i; k <= j; ++k)
      if (gt.pixels[order[k]]) rank_sum_fg += avg_rank;
    i = j + 1;
  }
  const double n1 = static_cast<double>(n_fg);
  const double u = rank_sum_fg - n1 * (n1 + 1.0) / 2.0;
  return u / (n1 * static_cast<double>(n_bg));
}

ScoreMap normalize_minmax(const ScoreMap& s) {
  ScoreMap out = s;
  if (s.scores.empty()) return out;
  const auto [lo_it, hi_it] = std::minmax_element(s.scores.begin(), s.scores.end());
  const double lo = *lo_it, hi = *hi_it;
  if (hi <= lo) {
    std::fill(out.scores.begin(), out.scores.end(), 0.5);
    return out;
  }
  const double inv = 1.0 / (hi - lo);
  for (double& v : out.scores) v = (v - lo) * inv;
  return out;
}

MaskImage binarize(const ScoreMap& normalized, double theta) {
  MaskImage m(normalized.height, normalized.width);
  for (std::size_t i = 0; i < normalized.scores.size(); ++i)
    m.pixels[i] = normalized.scores[i] >= theta ? 1 : 0;
  return m;
}

SweepResult threshold_sweep(const ScoreMap& scores, const MaskImage& gt,
                            SweepObjective objective, int grid) {
  check_shapes(scores.height, scores.width, gt.height, gt.width, "threshold_sweep");
  if (grid < 2) throw ShapeMismatchError("threshold_sweep: grid must be >= 2");

  SweepResult out;
  const auto [lo_it, hi_it] =
      std::minmax_element(scores.scores.begin(), scores.scores.end());
  out.degenerate = scores.scores.empty() || *hi_it <= *lo_it;
  const ScoreMap normalized = normalize_minmax(scores);

  double best = -1.0;
  double best_theta = 0.5;
  out.curve.reserve(static_cast<std::size_t>(grid));
  for (int g = 0; g < grid; ++g) {
    const double theta = static_cast<double>(g) / static_cast<double>(grid - 1);
    const RegionScores rs = region_metrics(binarize(normalized, theta), gt, 0.3);
    const double value = objective == SweepObjective::IoU  ? rs.iou
                         : objective == SweepObjective::F1 ? rs.f1
                                                           : rs.f_beta;
    out.curve.emplace_back(theta, value);
    if (value > best) {
      best = value;
      best_theta = theta;
    }
  }
  out.theta_star = out.degenerate ? 0.5 : best_theta;
  return out;
}

HistogramReport score_histogram(const ScoreMap& scores, const MaskImage& gt, int bins) {
  check_shapes(scores.height, scores.width, gt.height, gt.width, "score_histogram");
  if (bins < 2) throw ShapeMismatchError("score_histogram: bins must be >= 2");

  const ScoreMap normalized = normalize_minmax(scores);
  HistogramReport out;
  out.fg_counts.assign(static_cast<std::size_t>(bins), 0.0);
  out.bg_counts.assign(static_cast<std::size_t>(bins), 0.0);

  double n_fg = 0.0, n_bg = 0.0;
  double sum_fg = 0.0, sum_bg = 0.0;
  for (std::size_t i = 0; i < normalized.scores.size(); ++i) {
    const double v = normalized.scores[i];
    const int bin = std::min(bins - 1, static_cast<int>(v * bins));
    if (gt.pixels[i]) {
      out.fg_counts[static_cast<std::size_t>(bin)] += 1.0;
      n_fg += 1.0;
      sum_fg += v;
    } else {
      out.bg_counts[static_cast<std::size_t>(bin)] += 1.0;
      n_bg += 1.0;
      sum_bg += v;
    }
  }
  out.fg_mean = n_fg > 0.0 ? sum_fg / n_fg : 0.0;
  out.bg_mean = n_bg > 0.0 ? sum_bg / n_bg : 0.0;
  double ss_fg = 0.0, ss_bg = 0.0;
  for (std::size_t i = 0; i < normalized.scores.size(); ++i) {
    const double v = normalized.scores[i];
    if (gt.pixels[i]) ss_fg += (v - out.fg_mean) * (v - out.fg_mean);
    else ss_bg += (v - out.bg_mean) * (v - out.bg_mean);
  }
  out.fg_var = n_fg > 0.0 ? ss_fg / n_fg : 0.0;
  out.bg_var = n_bg > 0.0 ? ss_bg / n_bg : 0.0;

  if (n_fg > 0.0 && n_bg > 0.0) {
    for (int bin = 0; bin < bins; ++bin)
      out.overlap += std::min(out.fg_counts[static_cast<std::size_t>(bin)] / n_fg,
                              out.bg_counts[static_cast<std::size_t>(bin)] / n_bg);
  }
  return out;
}

MetricReport evaluate(const ScoreMap& scores, const MaskImage& gt, double beta_sq,
                      int grid) {
  MetricReport out;
  const SweepResult sweep = threshold_sweep(scores, gt, SweepObjective::FBeta, grid);
  out.threshold_used = sweep.theta_star;
  const MaskImage pred = binarize(normalize_minmax(scores), sweep.theta_star);

  const RegionScores region = region_metrics(pred, gt, beta_sq);
  out.iou = region.iou;
  out.f1 = region.f1;
  out.f_beta = region.f_beta;

  out.boundary_iters = boundary_iterations(gt.height, gt.width);
  const RegionScores boundary =
      region_metrics(boundary_mask(pred), boundary_mask(gt), beta_sq);
  out.b_iou = boundary.iou;
  out.b_f1 = boundary.f1;
  out.b_f_beta = boundary.f_beta;

  out.auc = auc(scores, gt);
  return out;
}

void write_metric_csv(const std::string& path, const std::vector<std::string>& names,
                      const std::vector<MetricReport>& reports) {
  if (names.size() != reports.size())
    throw ShapeMismatchError("write_metric_csv: names/reports length mismatch");
  std::ofstream f(path);
  if (!f) throw std::runtime_error("write_metric_csv: cannot open " + path);
  f << "name,iou,f1,fbeta,auc,biou,bf1,bfbeta,theta,d\n";

  MetricReport mean;
  double mean_d = 0.0;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const MetricReport& r = reports[i];
    f << names[i] << ',' << fmt(r.iou) << ',' << fmt(r.f1) << ',' << fmt(r.f_beta)
      << ',' << fmt(r.auc) << ',' << fmt(r.b_iou) << ',' << fmt(r.b_f1) << ','
      << fmt(r.b_f_beta) << ',' << fmt(r.threshold_used) << ',' << r.boundary_iters
      << '\n';
    mean.iou += r.iou;
    mean.f1 += r.f1;
    mean.f_beta += r.f_beta;
    mean.auc += r.auc;
    mean.b_iou += r.b_iou;
    mean.b_f1 += r.b_f1;
    mean.b_f_beta += r.b_f_beta;
    mean.threshold_used += r.threshold_used;
    mean_d += r.boundary_iters;
  }
  if (!reports.empty()) {
    const double n = static_cast<double>(reports.size());
    f << "MEAN," << fmt(mean.iou / n) << ',' << fmt(mean.f1 / n) << ','
      << fmt(mean.f_beta / n) << ',' << fmt(mean.auc / n) << ',' << fmt(mean.b_iou / n)
      << ',' << fmt(mean.b_f1 / n) << ',' << fmt(mean.b_f_beta / n) << ','
      << fmt(mean.threshold_used / n) << ',' << fmt(mean_d / n) << '\n';
  }
}

}  // namespace ddakit
