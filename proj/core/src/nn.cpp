#include "hvkit/nn.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "hvkit/errors.hpp"
#include "hvkit/rng.hpp"

namespace hvkit {

namespace {

// Numerically stable logistic, clamped into the open interval (0, 1).
double sigmoid_scalar(double z) {
  double a;
  if (z >= 0.0) {
    a = 1.0 / (1.0 + std::exp(-z));
  } else {
    const double e = std::exp(z);
    a = e / (1.0 + e);
  }
  constexpr double lo = std::numeric_limits<double>::denorm_min();
  constexpr double hi = 1.0 - std::numeric_limits<double>::epsilon() / 2.0;
  return std::min(std::max(a, lo), hi);
}

Eigen::MatrixXd apply_activation(Activation act, const Eigen::MatrixXd& z) {
  switch (act) {
    case Activation::relu:
      return z.cwiseMax(0.0);
    case Activation::sigmoid:
      return z.unaryExpr([](double v) { return sigmoid_scalar(v); });
    case Activation::identity:
      return z;
  }
  throw InvalidArgumentError("unknown activation");
}

Eigen::MatrixXd activation_derivative(Activation act, const Eigen::MatrixXd& z) {
  switch (act) {
    case Activation::relu:
      return z.unaryExpr([](double v) { return v > 0.0 ? 1.0 : 0.0; });
    case Activation::sigmoid:
      return z.unaryExpr([](double v) {
        const double a = sigmoid_scalar(v);
        return a * (1.0 - a);
      });
    case Activation::identity:
      return Eigen::MatrixXd::Ones(z.rows(), z.cols());
  }
  throw InvalidArgumentError("unknown activation");
}

}  // namespace

const char* activation_name(Activation a) {
  switch (a) {
    case Activation::relu:
      return "relu";
    case Activation::sigmoid:
      return "sigmoid";
    case Activation::identity:
      return "identity";
  }
  throw InvalidArgumentError("unknown activation");
}

Activation activation_from_name(std::string_view name) {
  if (name == "relu") return Activation::relu;
  if (name == "sigmoid") return Activation::sigmoid;
  if (name == "identity") return Activation::identity;
  throw InvalidArgumentError("unknown activation name: " + std::string(name));
}

Mlp::Mlp(std::vector<DenseLayer> layers) : layers_(std::move(layers)) {
  if (layers_.empty()) {
    throw InvalidArgumentError("Mlp: at least one layer required");
  }
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    const DenseLayer& layer = layers_[l];
    if (layer.weights.rows() == 0 || layer.weights.cols() == 0) {
      throw InvalidArgumentError("Mlp: layer " + std::to_string(l) + " has empty weights");
    }
    if (layer.biases.size() != layer.weights.rows()) {
      throw DimensionMismatchError("Mlp: layer " + std::to_string(l) +
                                   " bias length does not match output dimension");
    }
    if (!layer.weights.allFinite() || !layer.biases.allFinite()) {
      throw InvalidArgumentError("Mlp: layer " + std::to_string(l) + " has non-finite parameters");
    }
    if (l > 0 && layer.input_dim() != layers_[l - 1].output_dim()) {
      throw DimensionMismatchError("Mlp: layer " + std::to_string(l) + " expects input " +
                                   std::to_string(layer.input_dim()) + ", previous layer outputs " +
                                   std::to_string(layers_[l - 1].output_dim()));
    }
  }
}

std::size_t Mlp::parameter_count() const {
  std::size_t count = 0;
  for (const DenseLayer& layer : layers_) {
    count += static_cast<std::size_t>(layer.weights.size()) +
             static_cast<std::size_t>(layer.biases.size());
  }
  return count;
}

Eigen::MatrixXd forward(const Mlp& mlp, const Eigen::MatrixXd& x, ForwardCache* cache) {
  if (static_cast<std::size_t>(x.rows()) != mlp.input_dim()) {
    throw DimensionMismatchError("forward: input has " + std::to_string(x.rows()) +
                                 " rows, network expects " + std::to_string(mlp.input_dim()));
  }
  if (cache != nullptr) {
    cache->input = x;
    cache->pre_activations.clear();
    cache->pre_activations.reserve(mlp.depth());
  }
  Eigen::MatrixXd a = x;
  for (const DenseLayer& layer : mlp.layers()) {
    Eigen::MatrixXd z = (layer.weights * a).colwise() + layer.biases;
    if (cache != nullptr) {
      cache->pre_activations.push_back(z);
    }
    a = apply_activation(layer.activation, z);
  }
  return a;
}

MlpGradients backward(const Mlp& mlp, const ForwardCache& cache, const Eigen::MatrixXd& output_grad,
                      Eigen::MatrixXd* input_grad) {
  const std::size_t depth = mlp.depth();
  if (cache.pre_activations.size() != depth) {
    throw InvalidArgumentError("backward: cache does not match network depth");
  }
  if (static_cast<std::size_t>(cache.input.rows()) != mlp.input_dim() ||
      output_grad.rows() != cache.pre_activations.back().rows() ||
      output_grad.cols() != cache.input.cols()) {
    throw DimensionMismatchError("backward: cache/gradient shapes do not match the network");
  }

  MlpGradients grads;
  grads.layers.resize(depth);
  Eigen::MatrixXd da = output_grad;
  for (std::size_t l = depth; l-- > 0;) {
    const DenseLayer& layer = mlp.layers()[l];
    const Eigen::MatrixXd& z = cache.pre_activations[l];
    const Eigen::MatrixXd dz = da.cwiseProduct(activation_derivative(layer.activation, z));
    const Eigen::MatrixXd prev =
        (l == 0) ? cache.input
                 : apply_activation(mlp.layers()[l - 1].activation, cache.pre_activations[l - 1]);
    grads.layers[l].weights = dz * prev.transpose();
    grads.layers[l].biases = dz.rowwise().sum();
    if (l > 0 || input_grad != nullptr) {
      da = layer.weights.transpose() * dz;
    }
  }
  if (input_grad != nullptr) {
    *input_grad = da;
  }
  return grads;
}

AdamState::AdamState(const Mlp& model, AdamConfig cfg) : cfg_(cfg) {
  first_moment_.reserve(model.depth());
  second_moment_.reserve(model.depth());
  for (const DenseLayer& layer : model.layers()) {
    LayerGradients zero{Eigen::MatrixXd::Zero(layer.weights.rows(), layer.weights.cols()),
                        Eigen::VectorXd::Zero(layer.biases.size())};
    first_moment_.push_back(zero);
    second_moment_.push_back(zero);
  }
}

void AdamState::step(Mlp& model, const MlpGradients& grads) {
  if (grads.layers.size() != model.depth() || first_moment_.size() != model.depth()) {
    throw DimensionMismatchError("AdamState::step: gradient/model layer count mismatch");
  }
  ++timestep_;
  const double bias1 = 1.0 - std::pow(cfg_.beta1, static_cast<double>(timestep_));
  const double bias2 = 1.0 - std::pow(cfg_.beta2, static_cast<double>(timestep_));

  for (std::size_t l = 0; l < model.depth(); ++l) {
    DenseLayer& layer = model.layers()[l];
    const LayerGradients& g = grads.layers[l];
    if (g.weights.rows() != layer.weights.rows() || g.weights.cols() != layer.weights.cols() ||
        g.biases.size() != layer.biases.size()) {
      throw DimensionMismatchError("AdamState::step: gradient shape mismatch at layer " +
                                   std::to_string(l));
    }
    auto update = [&]<typename T>(T& m, T& v, const T& grad, T& param) {
      m = cfg_.beta1 * m + (1.0 - cfg_.beta1) * grad;
      v = cfg_.beta2 * v + (1.0 - cfg_.beta2) * grad.cwiseProduct(grad);
      param.array() -= cfg_.learning_rate * (m.array() / bias1) /
                       ((v.array() / bias2).sqrt() + cfg_.epsilon);
    };
    update(first_moment_[l].weights, second_moment_[l].weights, g.weights, layer.weights);
    update(first_moment_[l].biases, second_moment_[l].biases, g.biases, layer.biases);
  }
}

Mlp init_mlp(std::size_t input_dim, std::span<const LayerSpec> layers, std::uint64_t seed) {
  if (input_dim == 0 || layers.empty()) {
    throw InvalidArgumentError("init_mlp: empty layer specification");
  }
  Rng rng(seed);
  std::vector<DenseLayer> built;
  built.reserve(layers.size());
  std::size_t fan_in = input_dim;
  for (const LayerSpec& spec : layers) {
    if (spec.output_dim == 0) {
      throw InvalidArgumentError("init_mlp: zero-width layer");
    }
    const std::size_t fan_out = spec.output_dim;
    const double bound = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
    Eigen::MatrixXd w(fan_out, fan_in);
    for (Eigen::Index r = 0; r < w.rows(); ++r) {
      for (Eigen::Index c = 0; c < w.cols(); ++c) {
        w(r, c) = rng.uniform(-bound, bound);
      }
    }
    built.push_back(DenseLayer{std::move(w), Eigen::VectorXd::Zero(fan_out), spec.activation});
    fan_in = fan_out;
  }
  return Mlp(std::move(built));
}

}  // namespace hvkit
