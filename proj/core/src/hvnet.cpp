#include "hvkit/hvnet.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <string>
#include <utility>

#include "hvkit/errors.hpp"
#include "hvkit/rng.hpp"

namespace hvkit {

namespace {

using nlohmann::json;

constexpr int kModelVersion = 1;

std::uint64_t fnv1a(std::span<const std::uint64_t> words) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::uint64_t w : words) {
    for (int b = 0; b < 8; ++b) {
      h ^= (w >> (8 * b)) & 0xffULL;
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return std::string(buf);
}

// Points of all sets side by side, one column per point.
Eigen::MatrixXd stack_points(std::span<const LabeledSet> batch, std::size_t m) {
  std::size_t total = 0;
  for (const LabeledSet& rec : batch) {
    total += rec.set.size();
  }
  Eigen::MatrixXd x(m, total);
  Eigen::Index col = 0;
  for (const LabeledSet& rec : batch) {
    for (const Point& p : rec.set) {
      for (std::size_t j = 0; j < m; ++j) {
        x(static_cast<Eigen::Index>(j), col) = p[j];
      }
      ++col;
    }
  }
  return x;
}

Eigen::MatrixXd set_to_matrix(const SolutionSet& s) {
  Eigen::MatrixXd x(s.dim(), s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.dim(); ++j) {
      x(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = s[i][j];
    }
  }
  return x;
}

void check_unit_box(const SolutionSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.dim(); ++j) {
      const double v = s[i][j];
      if (v < 0.0 || v > 1.0) {
        throw InvalidArgumentError("predict: coordinate " + std::to_string(j) + " of point " +
                                   std::to_string(i) + " is outside [0,1]");
      }
    }
  }
}

json mlp_to_json(const Mlp& mlp) {
  json layers = json::array();
  for (const DenseLayer& layer : mlp.layers()) {
    json l;
    l["in"] = layer.input_dim();
    l["out"] = layer.output_dim();
    l["activation"] = activation_name(layer.activation);
    std::vector<double> w;
    w.reserve(static_cast<std::size_t>(layer.weights.size()));
    for (Eigen::Index r = 0; r < layer.weights.rows(); ++r) {
      for (Eigen::Index c = 0; c < layer.weights.cols(); ++c) {
        w.push_back(layer.weights(r, c));
      }
    }
    l["weights"] = std::move(w);
    l["biases"] = std::vector<double>(layer.biases.data(), layer.biases.data() + layer.biases.size());
    layers.push_back(std::move(l));
  }
  return json{{"layers", std::move(layers)}};
}

Mlp mlp_from_json(const json& j, const std::string& which) {
  if (!j.is_object() || !j.contains("layers") || !j.at("layers").is_array() ||
      j.at("layers").empty()) {
    throw ParseError("model file: " + which + " has no layers");
  }
  std::vector<DenseLayer> layers;
  for (const json& l : j.at("layers")) {
    const std::size_t in = l.at("in").get<std::size_t>();
    const std::size_t out = l.at("out").get<std::size_t>();
    const auto w = l.at("weights").get<std::vector<double>>();
    const auto b = l.at("biases").get<std::vector<double>>();
    if (w.size() != in * out || b.size() != out) {
      throw ParseError("model file: " + which + " layer has inconsistent shapes");
    }
    DenseLayer layer;
    layer.weights = Eigen::MatrixXd(out, in);
    std::size_t k = 0;
    for (std::size_t r = 0; r < out; ++r) {
      for (std::size_t c = 0; c < in; ++c) {
        layer.weights(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = w[k++];
      }
    }
    layer.biases = Eigen::Map<const Eigen::VectorXd>(b.data(), static_cast<Eigen::Index>(b.size()));
    layer.activation = activation_from_name(l.at("activation").get<std::string>());
    layers.push_back(std::move(layer));
  }
  try {
    return Mlp(std::move(layers));
  } catch (const Error& e) {
    throw ParseError("model file: " + which + ": " + e.what());
  }
}

}  // namespace

HvNetModel make_hvnet(std::size_t objective_dim, std::size_t width, std::uint64_t seed) {
  if (objective_dim < 2) {
    throw InvalidArgumentError("make_hvnet: objective_dim must be >= 2");
  }
  if (width == 0) {
    throw InvalidArgumentError("make_hvnet: width must be positive");
  }
  const LayerSpec hidden{width, Activation::relu};
  const std::vector<LayerSpec> phi_spec{hidden, hidden, hidden, {width, Activation::relu}};
  const std::vector<LayerSpec> rho_spec{hidden, hidden, hidden, {1, Activation::sigmoid}};
  HvNetModel model;
  model.phi = init_mlp(objective_dim, phi_spec, derive_seed(seed, 0));
  model.rho = init_mlp(width, rho_spec, derive_seed(seed, 1));
  model.objective_dim = objective_dim;
  model.width = width;
  model.init_seed = seed;
  return model;
}

double predict(const HvNetModel& model, const SolutionSet& s) {
  if (s.dim() != model.objective_dim) {
    throw DimensionMismatchError("predict: set dimension " + std::to_string(s.dim()) +
                                 ", model expects " + std::to_string(model.objective_dim));
  }
  check_unit_box(s);
  const Eigen::MatrixXd x = set_to_matrix(s);
  const Eigen::MatrixXd embedded = forward(model.phi, x);
  // Sum pooling in stored point order.
  Eigen::MatrixXd pooled = Eigen::MatrixXd::Zero(embedded.rows(), 1);
  for (Eigen::Index c = 0; c < embedded.cols(); ++c) {
    pooled.col(0) += embedded.col(c);
  }
  const Eigen::MatrixXd out = forward(model.rho, pooled);
  return out(0, 0);
}

double loss_log_mse(double pred, double target) {
  if (!(pred > 0.0) || !(target > 0.0)) {
    throw InvalidArgumentError("loss_log_mse: pred and target must be positive");
  }
  const double d = std::log(pred) - std::log(target);
  return d * d;
}

double loss_mse(double pred, double target) {
  const double d = pred - target;
  return d * d;
}

double loss_mape(double pred, double target) {
  if (target == 0.0) {
    throw InvalidArgumentError("loss_mape: target must be nonzero");
  }
  return std::abs(pred - target) / std::abs(target);
}

const char* loss_name(LossKind kind) {
  switch (kind) {
    case LossKind::log_mse:
      return "log_mse";
    case LossKind::mse:
      return "mse";
    case LossKind::mape:
      return "mape";
  }
  throw InvalidArgumentError("unknown loss kind");
}

LossKind loss_from_name(std::string_view name) {
  if (name == "log_mse") return LossKind::log_mse;
  if (name == "mse") return LossKind::mse;
  if (name == "mape") return LossKind::mape;
  throw InvalidArgumentError("unknown loss name: " + std::string(name));
}

double loss_value(LossKind kind, double pred, double target) {
  switch (kind) {
    case LossKind::log_mse:
      return loss_log_mse(pred, target);
    case LossKind::mse:
      return loss_mse(pred, target);
    case LossKind::mape:
      return loss_mape(pred, target);
  }
  throw InvalidArgumentError("unknown loss kind");
}

double loss_grad(LossKind kind, double pred, double target) {
  switch (kind) {
    case LossKind::log_mse:
      if (!(pred > 0.0) || !(target > 0.0)) {
        throw InvalidArgumentError("loss_log_mse: pred and target must be positive");
      }
      return 2.0 * (std::log(pred) - std::log(target)) / pred;
    case LossKind::mse:
      return 2.0 * (pred - target);
    case LossKind::mape: {
      if (target == 0.0) {
        throw InvalidArgumentError("loss_mape: target must be nonzero");
      }
      const double d = pred - target;
      const double sign = (d > 0.0) ? 1.0 : (d < 0.0 ? -1.0 : 0.0);
      return sign / std::abs(target);
    }
  }
  throw InvalidArgumentError("unknown loss kind");
}

double hvnet_loss_and_gradients(const HvNetModel& model, std::span<const LabeledSet> batch,
                                LossKind kind, HvNetGradients* grads) {
  if (batch.empty()) {
    throw InvalidArgumentError("hvnet_loss_and_gradients: empty batch");
  }
  const std::size_t m = model.objective_dim;
  for (const LabeledSet& rec : batch) {
    if (rec.set.dim() != m) {
      throw DimensionMismatchError("hvnet_loss_and_gradients: set dimension mismatch");
    }
  }
  const std::size_t b = batch.size();

  const Eigen::MatrixXd x = stack_points(batch, m);
  ForwardCache phi_cache;
  const Eigen::MatrixXd embedded =
      forward(model.phi, x, grads != nullptr ? &phi_cache : nullptr);

  // Per-set sum pooling over contiguous column blocks.
  Eigen::MatrixXd pooled = Eigen::MatrixXd::Zero(embedded.rows(), static_cast<Eigen::Index>(b));
  {
    Eigen::Index col = 0;
    for (std::size_t i = 0; i < b; ++i) {
      for (std::size_t k = 0; k < batch[i].set.size(); ++k) {
        pooled.col(static_cast<Eigen::Index>(i)) += embedded.col(col++);
      }
    }
  }

  ForwardCache rho_cache;
  const Eigen::MatrixXd preds =
      forward(model.rho, pooled, grads != nullptr ? &rho_cache : nullptr);

  double mean_loss = 0.0;
  Eigen::MatrixXd dpred(1, static_cast<Eigen::Index>(b));
  for (std::size_t i = 0; i < b; ++i) {
    const double pred = preds(0, static_cast<Eigen::Index>(i));
    mean_loss += loss_value(kind, pred, batch[i].hv);
    if (grads != nullptr) {
      dpred(0, static_cast<Eigen::Index>(i)) =
          loss_grad(kind, pred, batch[i].hv) / static_cast<double>(b);
    }
  }
  mean_loss /= static_cast<double>(b);

  if (grads != nullptr) {
    Eigen::MatrixXd dpooled;
    grads->rho = backward(model.rho, rho_cache, dpred, &dpooled);
    // The pooling Jacobian broadcasts each set's pooled gradient to its points.
    Eigen::MatrixXd dembedded(embedded.rows(), embedded.cols());
    Eigen::Index col = 0;
    for (std::size_t i = 0; i < b; ++i) {
      for (std::size_t k = 0; k < batch[i].set.size(); ++k) {
        dembedded.col(col++) = dpooled.col(static_cast<Eigen::Index>(i));
      }
    }
    grads->phi = backward(model.phi, phi_cache, dembedded);
  }
  return mean_loss;
}

TrainResult train(const TrainConfig& cfg, std::span<const LabeledSet> data,
                  const std::function<void(std::size_t, double)>& on_epoch) {
  if (data.empty()) {
    throw InvalidArgumentError("train: empty dataset");
  }
  if (cfg.batch_size < 1 || cfg.epochs < 1) {
    throw InvalidArgumentError("train: batch_size and epochs must be >= 1");
  }
  const std::size_t m = data.front().set.dim();
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (data[i].set.dim() != m) {
      throw DimensionMismatchError("train: set " + std::to_string(i) + " dimension mismatch");
    }
    if (!(data[i].hv > 0.0)) {
      throw InvalidArgumentError("train: set " + std::to_string(i) + " has non-positive target");
    }
  }

  HvNetModel model = make_hvnet(m, cfg.width, cfg.seed);
  const AdamConfig adam_cfg{cfg.learning_rate, 0.9, 0.999, 1e-8};
  AdamState phi_opt(model.phi, adam_cfg);
  AdamState rho_opt(model.rho, adam_cfg);

  // Indices grouped by set cardinality; batches never mix sizes.
  std::map<std::size_t, std::vector<std::size_t>> by_size;
  for (std::size_t i = 0; i < data.size(); ++i) {
    by_size[data[i].set.size()].push_back(i);
  }

  TrainResult result;
  result.epoch_mean_loss.reserve(cfg.epochs);

  std::vector<LabeledSet> batch;
  for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    Rng rng(derive_seed(cfg.seed, 1 + epoch));
    std::vector<std::vector<std::size_t>> batches;
    for (auto& [size, indices] : by_size) {
      for (std::size_t i = indices.size(); i > 1; --i) {
        std::swap(indices[i - 1], indices[rng.below(i)]);
      }
      for (std::size_t start = 0; start < indices.size(); start += cfg.batch_size) {
        const std::size_t stop = std::min(start + cfg.batch_size, indices.size());
        batches.emplace_back(indices.begin() + static_cast<std::ptrdiff_t>(start),
                             indices.begin() + static_cast<std::ptrdiff_t>(stop));
      }
    }
    for (std::size_t i = batches.size(); i > 1; --i) {
      std::swap(batches[i - 1], batches[rng.below(i)]);
    }

    double loss_sum = 0.0;
    std::size_t seen = 0;
    for (std::size_t bi = 0; bi < batches.size(); ++bi) {
      batch.clear();
      for (std::size_t idx : batches[bi]) {
        batch.push_back(data[idx]);
      }
      HvNetGradients grads;
      const double batch_loss = hvnet_loss_and_gradients(model, batch, cfg.loss, &grads);
      if (!std::isfinite(batch_loss)) {
        throw TrainingError("train: non-finite loss at epoch " + std::to_string(epoch) +
                            ", batch " + std::to_string(bi));
      }
      phi_opt.step(model.phi, grads.phi);
      rho_opt.step(model.rho, grads.rho);
      loss_sum += batch_loss * static_cast<double>(batch.size());
      seen += batch.size();
    }
    const double epoch_mean = loss_sum / static_cast<double>(seen);
    result.epoch_mean_loss.push_back(epoch_mean);
    if (on_epoch) {
      on_epoch(epoch, epoch_mean);
    }
  }

  const std::uint64_t digest_words[] = {static_cast<std::uint64_t>(cfg.loss),
                                        std::bit_cast<std::uint64_t>(cfg.learning_rate),
                                        cfg.batch_size,
                                        cfg.epochs,
                                        cfg.width,
                                        cfg.seed,
                                        data.size(),
                                        m};
  model.train_digest = hex64(fnv1a(digest_words));
  result.model = std::move(model);
  return result;
}

void save_model(const HvNetModel& model, const std::filesystem::path& path) {
  json j;
  j["format"] = "hvnet-model";
  j["version"] = kModelVersion;
  j["objective_dim"] = model.objective_dim;
  j["width"] = model.width;
  j["init_seed"] = model.init_seed;
  j["train_digest"] = model.train_digest;
  j["phi"] = mlp_to_json(model.phi);
  j["rho"] = mlp_to_json(model.rho);
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  out << j.dump(2) << '\n';
  if (!out) {
    throw IoError("write failed for " + path.string());
  }
}

HvNetModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  if (!j.is_object() || j.value("format", "") != "hvnet-model") {
    throw ParseError(path.string() + ": not an hvnet model file");
  }
  if (j.value("version", -1) != kModelVersion) {
    throw ParseError(path.string() + ": unsupported model version");
  }
  HvNetModel model;
  model.objective_dim = j.at("objective_dim").get<std::size_t>();
  model.width = j.at("width").get<std::size_t>();
  model.init_seed = j.value("init_seed", std::uint64_t{0});
  model.train_digest = j.value("train_digest", "");
  model.phi = mlp_from_json(j.at("phi"), "phi");
  model.rho = mlp_from_json(j.at("rho"), "rho");
  if (model.phi.input_dim() != model.objective_dim) {
    throw ParseError(path.string() + ": declared objective_dim " +
                     std::to_string(model.objective_dim) + " does not match phi input " +
                     std::to_string(model.phi.input_dim()));
  }
  if (model.rho.input_dim() != model.phi.output_dim() || model.rho.output_dim() != 1) {
    throw ParseError(path.string() + ": phi/rho dimensions are inconsistent");
  }
  return model;
}

}  // namespace hvkit
