#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ddakit/loss.hpp"
#include "ddakit/numerics.hpp"
#include "ddakit/segmetrics.hpp"

namespace ddakit {

enum class Activation { ReLU, Tanh, Identity };

struct Layer {
  Mat weights;  // out x in
  RVec biases;  // out
  Activation activation = Activation::Identity;
};

/// AdamW first/second moment accumulators, shaped like the parameters.
struct AdamWState {
  std::vector<Mat> m_w, v_w;
  std::vector<RVec> m_b, v_b;
  long step = 0;
};

struct NetState {
  std::vector<Layer> layers;
  AdamWState opt;

  std::size_t input_dim() const { return layers.empty() ? 0 : layers.front().weights.cols; }
  std::size_t output_dim() const { return layers.empty() ? 0 : layers.front().weights.rows; }
};

enum class LossKind { DDA, BCE, Dice };

struct TrainConfig {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double weight_decay = 0.01;
  double eps = 1e-8;  // AdamW epsilon
  int epochs = 100;
  std::size_t batch_size = 64;
  std::uint64_t seed = 0;
  LossKind loss_kind = LossKind::DDA;
  BinaryDdaVariant dda_variant = BinaryDdaVariant::EigNormalized;
  double dda_eps = 1e-6;  // denominator stabilizer of the DDA objective
  int patience = 20;      // early stopping on validation loss
};

/// Fully connected net with the given layer widths; weights drawn uniformly
/// in +-sqrt(6/(fan_in+fan_out)) from a seeded generator, biases zero.
NetState make_net(const std::vector<std::size_t>& dims,
                  const std::vector<Activation>& activations, std::uint64_t seed);

struct ForwardCache {
  std::vector<std::vector<RVec>> activations;      // [0..L] layer outputs, [0] = inputs
  std::vector<std::vector<RVec>> pre_activations;  // [0..L-1] affine outputs per layer
};

struct ForwardResult {
  std::vector<RVec> outputs;
  ForwardCache cache;
};

ForwardResult forward(const NetState& net, const std::vector<RVec>& inputs);

/// Outputs flattened to scalars; requires a single-output final layer.
std::vector<double> forward_scalar(const NetState& net, const std::vector<RVec>& inputs);

struct ParamGrads {
  std::vector<Mat> w;
  std::vector<RVec> b;
};

/// Chain rule from per-sample output gradients back to every parameter.
/// Accumulation runs in fixed sample order.
ParamGrads backward(const NetState& net, const ForwardCache& cache,
                    const std::vector<RVec>& upstream);

/// One decoupled-weight-decay Adam step with bias-corrected moments:
/// theta <- theta - lr * mhat/(sqrt(vhat)+eps) - lr * weight_decay * theta.
void adamw_step(NetState& net, const ParamGrads& grads, const TrainConfig& cfg);

struct TrainResult {
  NetState net;
  std::vector<double> train_loss;  // one entry per epoch run
  std::vector<double> val_loss;    // empty when no validation set given
  int epochs_run = 0;
  bool flipped = false;  // sign fix applied to the final layer (DDA only)
};

/// Mini-batch training with deterministic shuffling and early stopping on
/// validation loss (patience epochs without improvement).  With the DDA loss,
/// single-class batches are skipped; if no batch ever held both classes the
/// run fails with AllBatchesSkippedError.  Because the DDA objective is
/// sign-blind, training ends by orienting the final layer so foreground
/// (label 1) scores lie above background; the flip leaves the loss unchanged.
TrainResult train(NetState net, const std::vector<RVec>& x, const std::vector<int>& y,
                  const std::vector<RVec>& x_val, const std::vector<int>& y_val,
                  const TrainConfig& cfg);

/// Loss of the configured kind on a full batch of scalar scores.
LossEval eval_loss(const std::vector<double>& scores, const std::vector<int>& labels,
                   const TrainConfig& cfg);

/// Versioned text dump of shapes, parameters, optimizer moments, and step
/// counter; values round-trip exactly (17 significant digits).
void save_checkpoint(const std::string& path, const NetState& net);
NetState load_checkpoint(const std::string& path);

/// Per-pixel descriptor for dense scoring with a plain MLP: normalized row,
/// normalized column, and the 3x3 intensity neighborhood (clamped at the
/// image border) - 11 features.
std::vector<RVec> pixel_features(const ScoreMap& image);
std::vector<int> pixel_labels(const MaskImage& mask);

}  // namespace ddakit
