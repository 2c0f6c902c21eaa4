#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hvkit/dataset.hpp"
#include "hvkit/nn.hpp"
#include "hvkit/solution_set.hpp"

namespace hvkit {

/// DeepSets hypervolume regressor: each point of a set is embedded by phi,
/// the embeddings are summed in stored order, and rho maps the pooled vector
/// to a scalar in (0, 1). Inputs live in [0,1]^m with the implicit unit
/// reference point.
struct HvNetModel {
  Mlp phi;  ///< m -> width x3 hidden (relu) -> width (relu)
  Mlp rho;  ///< width -> width x3 hidden (relu) -> 1 (sigmoid)
  std::size_t objective_dim = 0;
  std::size_t width = 0;
  std::uint64_t init_seed = 0;
  std::string train_digest;  ///< set by train(); empty for a fresh model
};

/// Freshly initialized model (Glorot-uniform weights, zero biases).
HvNetModel make_hvnet(std::size_t objective_dim, std::size_t width, std::uint64_t seed);

/// rho(sum_i phi(s_i)). Every coordinate must lie in [0,1] and the set
/// dimension must match the model.
double predict(const HvNetModel& model, const SolutionSet& s);

// Loss functions. pred and target are scalars; batch means are taken by the
// training loop.
double loss_log_mse(double pred, double target);  ///< (ln pred - ln target)^2; both > 0
double loss_mse(double pred, double target);      ///< (pred - target)^2
double loss_mape(double pred, double target);     ///< |pred - target| / |target|; target != 0

enum class LossKind { log_mse, mse, mape };

const char* loss_name(LossKind kind);
LossKind loss_from_name(std::string_view name);

double loss_value(LossKind kind, double pred, double target);
/// d loss / d pred at (pred, target).
double loss_grad(LossKind kind, double pred, double target);

struct HvNetGradients {
  MlpGradients phi;
  MlpGradients rho;
};

/// Mean loss over a batch of labeled sets and, when grads is non-null, its
/// gradients with respect to every phi and rho parameter. The sets may have
/// different cardinalities.
double hvnet_loss_and_gradients(const HvNetModel& model, std::span<const LabeledSet> batch,
                                LossKind kind, HvNetGradients* grads);

struct TrainConfig {
  LossKind loss = LossKind::log_mse;
  double learning_rate = 1e-4;
  std::size_t batch_size = 100;
  std::size_t epochs = 100;
  std::size_t width = 128;
  std::uint64_t seed = 0;
};

struct TrainResult {
  HvNetModel model;
  std::vector<double> epoch_mean_loss;  ///< one entry per epoch
};

/// Minibatch Adam on the chosen loss. Batches group sets of equal
/// cardinality; batch order and within-group assignment are reshuffled each
/// epoch from the run seed, so identical (config, data) reproduce identical
/// parameters. A non-finite batch loss aborts with TrainingError.
TrainResult train(const TrainConfig& cfg, std::span<const LabeledSet> data,
                  const std::function<void(std::size_t epoch, double mean_loss)>& on_epoch = {});

/// Versioned JSON model file; numbers round-trip bit-exactly, so
/// predict(load(save(m)), s) == predict(m, s) to the last bit.
void save_model(const HvNetModel& model, const std::filesystem::path& path);
HvNetModel load_model(const std::filesystem::path& path);

}  // namespace hvkit
