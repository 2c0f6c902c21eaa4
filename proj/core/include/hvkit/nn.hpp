#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace hvkit {

enum class Activation { relu, sigmoid, identity };

const char* activation_name(Activation a);
Activation activation_from_name(std::string_view name);

/// Fully connected layer: y = act(W x + b), weights stored out x in.
struct DenseLayer {
  Eigen::MatrixXd weights;
  Eigen::VectorXd biases;
  Activation activation = Activation::identity;

  std::size_t input_dim() const { return static_cast<std::size_t>(weights.cols()); }
  std::size_t output_dim() const { return static_cast<std::size_t>(weights.rows()); }
};

/// A chain of dense layers with matching dimensions.
class Mlp {
 public:
  Mlp() = default;
  explicit Mlp(std::vector<DenseLayer> layers);

  std::size_t input_dim() const { return layers_.front().input_dim(); }
  std::size_t output_dim() const { return layers_.back().output_dim(); }
  std::size_t depth() const noexcept { return layers_.size(); }
  std::size_t parameter_count() const;

  const std::vector<DenseLayer>& layers() const noexcept { return layers_; }
  std::vector<DenseLayer>& layers() noexcept { return layers_; }

 private:
  std::vector<DenseLayer> layers_;
};

/// Everything backward needs from a forward pass: the network input and the
/// per-layer pre-activations (activations are recomputed elementwise).
struct ForwardCache {
  Eigen::MatrixXd input;
  std::vector<Eigen::MatrixXd> pre_activations;
};

/// Forward pass; columns of x are independent samples. Fills cache when
/// given. Throws on input dimension mismatch.
Eigen::MatrixXd forward(const Mlp& mlp, const Eigen::MatrixXd& x, ForwardCache* cache = nullptr);

struct LayerGradients {
  Eigen::MatrixXd weights;
  Eigen::VectorXd biases;
};

struct MlpGradients {
  std::vector<LayerGradients> layers;
};

/// Reverse-mode gradients of the forward map. output_grad is dLoss/dOutput
/// with the same shape as the forward result; cache must come from the
/// matching forward call, otherwise an error is thrown. Optionally also
/// yields dLoss/dInput.
MlpGradients backward(const Mlp& mlp, const ForwardCache& cache, const Eigen::MatrixXd& output_grad,
                      Eigen::MatrixXd* input_grad = nullptr);

struct AdamConfig {
  double learning_rate = 1e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

/// Adam optimizer state (bias-corrected first/second moments) shaped after
/// one Mlp.
class AdamState {
 public:
  explicit AdamState(const Mlp& model, AdamConfig cfg = {});

  /// One Adam update of model in place; increments the timestep.
  void step(Mlp& model, const MlpGradients& grads);

  std::int64_t timestep() const noexcept { return timestep_; }
  const AdamConfig& config() const noexcept { return cfg_; }

 private:
  AdamConfig cfg_;
  std::int64_t timestep_ = 0;
  std::vector<LayerGradients> first_moment_;
  std::vector<LayerGradients> second_moment_;
};

struct LayerSpec {
  std::size_t output_dim;
  Activation activation;
};

/// Glorot-uniform weights (bound sqrt(6/(fan_in+fan_out))), zero biases.
/// Weights are drawn row-major, layer by layer; deterministic per seed.
Mlp init_mlp(std::size_t input_dim, std::span<const LayerSpec> layers, std::uint64_t seed);

}  // namespace hvkit
