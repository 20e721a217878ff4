#include "ddakit/discriminant.hpp"

#include <cmath>
#include <string>

#include "ddakit/errors.hpp"

namespace ddakit {

std::vector<std::size_t> SampleSet::class_counts() const {
  std::vector<std::size_t> counts(static_cast<std::size_t>(num_classes), 0);
  for (int lbl : labels) counts[static_cast<std::size_t>(lbl)]++;
  return counts;
}

void validate(const SampleSet& s) {
  if (s.features.size() != s.labels.size())
    throw ShapeMismatchError("SampleSet: features/labels length mismatch");
  if (s.num_classes <= 0) throw ShapeMismatchError("SampleSet: num_classes <= 0");
  const std::size_t d = s.dim();
  for (const RVec& x : s.features)
    if (x.size() != d) throw ShapeMismatchError("SampleSet: ragged feature dims");
  for (int lbl : s.labels)
    if (lbl < 0 || lbl >= s.num_classes)
      throw ShapeMismatchError("SampleSet: label out of range");
}

namespace {

void require_counts(const std::vector<std::size_t>& counts, Convention conv) {
  const std::size_t need = conv == Convention::Unbiased ? 2 : 1;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] < need)
      throw DegenerateClassError("class " + std::to_string(k) + " has " +
                                 std::to_string(counts[k]) + " samples, needs " +
                                 std::to_string(need));
  }
}

std::vector<RVec> class_means(const SampleSet& s,
                              const std::vector<std::size_t>& counts) {
  std::vector<RVec> means(counts.size(), RVec(s.dim(), 0.0));
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto k = static_cast<std::size_t>(s.labels[i]);
    for (std::size_t j = 0; j < s.dim(); ++j) means[k][j] += s.features[i][j];
  }
  for (std::size_t k = 0; k < counts.size(); ++k)
    for (double& v : means[k]) v /= static_cast<double>(counts[k]);
  return means;
}

}  // namespace

ClassStats class_stats(const SampleSet& s, Convention convention) {
  validate(s);
  const auto counts = s.class_counts();
  require_counts(counts, convention);
  const std::size_t d = s.dim();

  ClassStats out;
  out.convention = convention;
  out.means = class_means(s, counts);
  out.covariances.assign(counts.size(), Mat(d, d));
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto k = static_cast<std::size_t>(s.labels[i]);
    const RVec dev = s.features[i] - out.means[k];
    Mat& cov = out.covariances[k];
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) cov(r, c) += dev[r] * dev[c];
  }
  for (std::size_t k = 0; k < counts.size(); ++k) {
    const double divisor = convention == Convention::Unbiased
                               ? static_cast<double>(counts[k] - 1)
                               : static_cast<double>(counts[k]);
    for (double& v : out.covariances[k].data) v /= divisor;
  }
  return out;
}

double project(const LinearDiscriminant& d, const RVec& x) {
  return dot(d.w, x) + d.w0;
}

std::vector<ProjectedStats> projected_class_stats(const LinearDiscriminant& d,
                                                  const ClassStats& stats) {
  std::vector<ProjectedStats> out(stats.means.size());
  for (std::size_t k = 0; k < stats.means.size(); ++k) {
    out[k].mean = dot(d.w, stats.means[k]) + d.w0;
    out[k].variance = dot(d.w, matvec(stats.covariances[k], d.w));
  }
  return out;
}

double fisher_criterion(double m1, double m2, double s1_sq, double s2_sq) {
  const double denom = s1_sq + s2_sq;
  if (denom <= 1e-12)
    throw ZeroWithinScatterError("fisher_criterion: projected scatter vanishes");
  const double gap = m1 - m2;
  return gap * gap / denom;
}

double fukunaga_criterion(double p1, double p2, double m1, double m2,
                          double s1_sq, double s2_sq) {
  if (p1 < 0.0 || p2 < 0.0 || p1 + p2 <= 0.0)
    throw ZeroWithinScatterError("fukunaga_criterion: invalid priors");
  const double denom = p1 * s1_sq + p2 * s2_sq;
  if (denom <= 0.0)
    throw ZeroWithinScatterError("fukunaga_criterion: weighted scatter vanishes");
  return (p1 * m1 * m1 + p2 * m2 * m2) / denom;
}

ScatterSet scatter_matrices(const SampleSet& s, Convention convention) {
  validate(s);
  if (s.size() < 2) throw DegenerateClassError("scatter_matrices: fewer than 2 samples");
  const auto counts = s.class_counts();
  require_counts(counts, convention);
  const std::size_t d = s.dim();
  const double n = static_cast<double>(s.size());

  ScatterSet out;
  out.convention = convention;
  out.class_means = class_means(s, counts);

  out.mixture_mean.assign(d, 0.0);
  for (std::size_t k = 0; k < counts.size(); ++k) {
    const double wk = static_cast<double>(counts[k]) / n;
    for (std::size_t j = 0; j < d; ++j) out.mixture_mean[j] += wk * out.class_means[k][j];
  }

  out.s_b = Mat(d, d);
  for (std::size_t k = 0; k < counts.size(); ++k) {
    const double wk = static_cast<double>(counts[k]) / n;
    const RVec dev = out.class_means[k] - out.mixture_mean;
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) out.s_b(r, c) += wk * dev[r] * dev[c];
  }

  // Per-class scatters, each weighted by its prior n_k/n.
  out.s_w = Mat(d, d);
  std::vector<Mat> class_scatter(counts.size(), Mat(d, d));
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto k = static_cast<std::size_t>(s.labels[i]);
    const RVec dev = s.features[i] - out.class_means[k];
    Mat& sc = class_scatter[k];
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) sc(r, c) += dev[r] * dev[c];
  }
  for (std::size_t k = 0; k < counts.size(); ++k) {
    const double divisor = convention == Convention::Unbiased
                               ? static_cast<double>(counts[k] - 1)
                               : static_cast<double>(counts[k]);
    const double wk = static_cast<double>(counts[k]) / n;
    for (std::size_t idx = 0; idx < out.s_w.data.size(); ++idx)
      out.s_w.data[idx] += wk * class_scatter[k].data[idx] / divisor;
  }

  out.s_m = Mat(d, d);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const RVec dev = s.features[i] - out.mixture_mean;
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) out.s_m(r, c) += dev[r] * dev[c];
  }
  const double m_div = convention == Convention::Unbiased ? n - 1.0 : n;
  for (double& v : out.s_m.data) v /= m_div;

  return out;
}

TraceCriterion trace_criterion(const ScatterSet& ss, ScatterPair pair, double ridge) {
  const Mat* s1 = nullptr;
  const Mat* s2 = nullptr;
  switch (pair) {
    case ScatterPair::BW: s1 = &ss.s_b; s2 = &ss.s_w; break;
    case ScatterPair::WM: s1 = &ss.s_w; s2 = &ss.s_m; break;
    case ScatterPair::BM: s1 = &ss.s_b; s2 = &ss.s_m; break;
  }
  const Mat s2r = add_ridge(*s2, ridge);

  TraceCriterion out;
  out.j = trace(solve_spd(s2r, *s1));

  // Spectrum via the symmetric congruence S2^-1/2 S1 S2^-1/2, which shares
  // the eigenvalues of S2^-1 S1.
  const EigPairs e2 = sym_eig(s2r);
  for (double lam : e2.values)
    if (lam <= 0.0)
      throw NotPositiveDefiniteError("trace_criterion: scatter not positive definite");
  const std::size_t d = s2r.rows;
  Mat inv_sqrt(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < d; ++k)
        s += e2.vectors(i, k) * e2.vectors(j, k) / std::sqrt(e2.values[k]);
      inv_sqrt(i, j) = s;
    }
  Mat congruent = matmul(matmul(inv_sqrt, *s1), inv_sqrt);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const double avg = 0.5 * (congruent(i, j) + congruent(j, i));
      congruent(i, j) = congruent(j, i) = avg;
    }
  out.eigvals = sym_eig(congruent).values;
  return out;
}

double default_ridge(const Mat& s_w) {
  if (s_w.rows == 0) return 0.0;
  return 1e-8 * trace(s_w) / static_cast<double>(s_w.rows);
}

LinearDiscriminant fit_lda(const SampleSet& s, double ridge) {
  if (s.num_classes != 2)
    throw NotTwoClassError("fit_lda: expected exactly 2 classes, got " +
                           std::to_string(s.num_classes));
  const ScatterSet ss = scatter_matrices(s, Convention::Biased);
  const RVec diff = ss.class_means[0] - ss.class_means[1];
  if (norm2(diff) == 0.0)
    throw DegenerateClassError("fit_lda: class means coincide");

  LinearDiscriminant d;
  d.w = solve_spd(add_ridge(ss.s_w, ridge), diff);
  const double nrm = norm2(d.w);
  if (nrm == 0.0) throw DegenerateClassError("fit_lda: null direction");
  for (double& v : d.w) v /= nrm;
  if (dot(d.w, diff) < 0.0)
    for (double& v : d.w) v = -v;

  const RVec mid = 0.5 * (ss.class_means[0] + ss.class_means[1]);
  d.w0 = -dot(d.w, mid);
  return d;
}

int predict(const LinearDiscriminant& d, const RVec& x) {
  return project(d, x) >= 0.0 ? 0 : 1;
}

double accuracy(const LinearDiscriminant& d, const SampleSet& s) {
  if (s.size() == 0) return 0.0;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (predict(d, s.features[i]) == s.labels[i]) hits++;
  return static_cast<double>(hits) / static_cast<double>(s.size());
}

}  // namespace ddakit
