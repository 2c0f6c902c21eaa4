// hvkit command line tool: exact hypervolume, the three approximators,
// dataset generation, HV-Net training/evaluation, and the error-vs-runtime
// benchmark harness.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hvkit/approx_line.hpp"
#include "hvkit/approx_mc.hpp"
#include "hvkit/bench.hpp"
#include "hvkit/dataset.hpp"
#include "hvkit/errors.hpp"
#include "hvkit/exact.hpp"
#include "hvkit/hvnet.hpp"
#include "hvkit/rng.hpp"
#include "hvkit/transform.hpp"

namespace {

using namespace hvkit;

std::string g9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return std::string(buf);
}

std::vector<double> parse_doubles(const std::string& csv) {
  std::vector<double> values;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) {
      continue;
    }
    std::size_t pos = 0;
    const double v = std::stod(item, &pos);
    if (pos != item.size()) {
      throw InvalidArgumentError("cannot parse number: " + item);
    }
    values.push_back(v);
  }
  if (values.empty()) {
    throw InvalidArgumentError("empty numeric list: " + csv);
  }
  return values;
}

ReferencePoint ref_or_unit(const std::string& ref_csv, std::size_t m) {
  if (ref_csv.empty()) {
    return ReferencePoint::unit(m);
  }
  return ReferencePoint(parse_doubles(ref_csv));
}

Orientation parse_orientation(const std::string& s) {
  if (s == "min" || s == "minimize") {
    return Orientation::minimize;
  }
  if (s == "max" || s == "maximize") {
    return Orientation::maximize;
  }
  throw InvalidArgumentError("orientation must be min or max, got: " + s);
}

// Point/line methods assume minimization; flip the frame for maximization.
std::pair<SolutionSet, ReferencePoint> oriented(const SolutionSet& s, const ReferencePoint& r,
                                                Orientation orientation) {
  if (orientation == Orientation::minimize) {
    return {s, r};
  }
  std::vector<Point> flipped;
  flipped.reserve(s.size());
  for (const Point& p : s) {
    std::vector<double> c = p.coords();
    for (double& v : c) {
      v = -v;
    }
    flipped.emplace_back(std::move(c));
  }
  std::vector<double> rc = r.coords();
  for (double& v : rc) {
    v = -v;
  }
  return {SolutionSet(std::move(flipped)), ReferencePoint(std::move(rc))};
}

struct HvArgs {
  std::string in;
  std::string ref;
};

void run_hv(const HvArgs& args) {
  for (const SolutionSet& s : read_sets(args.in)) {
    std::cout << g9(hv_exact(s, ref_or_unit(args.ref, s.dim()))) << '\n';
  }
}

struct ApproxArgs {
  std::string method;
  std::string in;
  std::string ref;
  std::string model_path;
  std::string orientation = "min";
  std::int64_t k = 1000;
  std::size_t n = 100;
  std::uint64_t seed = 0;
};

void run_approx(const ApproxArgs& args) {
  const Orientation orientation = parse_orientation(args.orientation);
  const std::vector<SolutionSet> sets = read_sets(args.in);

  std::optional<HvNetModel> model;
  if (args.method == "hvnet") {
    if (args.model_path.empty()) {
      throw InvalidArgumentError("approx --method hvnet requires --model");
    }
    model = load_model(args.model_path);
  }

  std::map<std::size_t, DirectionSet> directions;  // per dimension, seed-derived
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const SolutionSet& s = sets[i];
    const ReferencePoint r = ref_or_unit(args.ref, s.dim());
    double estimate = 0.0;
    if (args.method == "point") {
      const auto [fs, fr] = oriented(s, r, orientation);
      estimate = hv_mc(fs, fr, McConfig{args.k, derive_seed(args.seed, i)});
    } else if (args.method == "line") {
      const auto [fs, fr] = oriented(s, r, orientation);
      auto it = directions.find(s.dim());
      if (it == directions.end()) {
        it = directions
                 .emplace(s.dim(),
                          generate_unv_directions(args.n, s.dim(), derive_seed(args.seed, s.dim())))
                 .first;
      }
      estimate = hv_line(fs, fr, it->second);
    } else if (args.method == "hvnet") {
      estimate = approx_hv_any(*model, s, r, orientation);
    } else {
      throw InvalidArgumentError("unknown method: " + args.method);
    }
    std::cout << g9(estimate) << '\n';
  }
}

struct GenDataArgs {
  std::size_t m = 3;
  std::size_t count = 1000;
  std::size_t max_size = 100;
  std::size_t pool = 1000;
  std::uint64_t seed = 0;
  std::string out;
};

void run_gen_data(const GenDataArgs& args) {
  GenConfig cfg;
  cfg.objective_dim = args.m;
  cfg.num_sets = args.count;
  cfg.max_set_size = args.max_size;
  cfg.candidate_pool = args.pool;
  cfg.seed = args.seed;
  write_dataset(args.out, generate_labeled_dataset(cfg));
  std::cerr << "wrote " << args.count << " records to " << args.out << '\n';
}

struct TrainArgs {
  std::string data;
  std::string out;
  std::string trace;
  std::string loss = "log_mse";
  double lr = 1e-4;
  std::size_t batch = 100;
  std::size_t epochs = 100;
  std::size_t width = 128;
  std::uint64_t seed = 0;
};

void run_train(const TrainArgs& args) {
  const std::vector<LabeledSet> data = read_dataset(args.data);
  TrainConfig cfg;
  cfg.loss = loss_from_name(args.loss);
  cfg.learning_rate = args.lr;
  cfg.batch_size = args.batch;
  cfg.epochs = args.epochs;
  cfg.width = args.width;
  cfg.seed = args.seed;
  const TrainResult result = train(cfg, data, [](std::size_t epoch, double loss) {
    std::cerr << "epoch " << (epoch + 1) << " loss " << g9(loss) << '\n';
  });
  save_model(result.model, args.out);
  if (!args.trace.empty()) {
    std::ofstream out(args.trace);
    if (!out) {
      throw IoError("cannot open " + args.trace + " for writing");
    }
    out << "epoch,mean_loss\n";
    for (std::size_t e = 0; e < result.epoch_mean_loss.size(); ++e) {
      out << (e + 1) << ',' << g9(result.epoch_mean_loss[e]) << '\n';
    }
  }
}

struct EvalArgs {
  std::string model;
  std::string data;
  std::string out;
};

void run_eval(const EvalArgs& args) {
  const HvNetModel model = load_model(args.model);
  const std::vector<LabeledSet> data = read_dataset(args.data);
  std::ostringstream csv;
  csv << "index,prediction,exact,error\n";
  double error_sum = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const double pred = predict(model, data[i].set);
    const double err = approximation_error(pred, data[i].hv);
    error_sum += err;
    csv << i << ',' << g9(pred) << ',' << g9(data[i].hv) << ',' << g9(err) << '\n';
  }
  const double mean_error = error_sum / static_cast<double>(data.size());
  if (args.out.empty()) {
    std::cout << csv.str();
    std::cerr << "mean_error " << g9(mean_error) << '\n';
  } else {
    std::ofstream out(args.out);
    if (!out) {
      throw IoError("cannot open " + args.out + " for writing");
    }
    out << csv.str();
    std::cout << "mean_error " << g9(mean_error) << '\n';
  }
}

struct BenchArgs {
  std::string methods = "point,line";
  std::string m_list = "3,5";
  std::size_t groups = 2;
  std::size_t sets_per_group = 1000;
  std::size_t max_size = 100;
  std::size_t pool = 1000;
  std::vector<std::string> data_files;
  std::string k_grid;
  std::string n_grid;
  std::vector<std::string> models;  // entries "m=path"
  std::uint64_t seed = 0;
  std::string out;
  std::string summary;
};

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> items;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) {
      items.push_back(item);
    }
  }
  return items;
}

std::vector<std::int64_t> parse_grid(const std::string& csv, std::int64_t from, std::int64_t to,
                                     std::int64_t step) {
  std::vector<std::int64_t> grid;
  if (csv.empty()) {
    for (std::int64_t v = from; v <= to; v += step) {
      grid.push_back(v);
    }
  } else {
    for (double v : parse_doubles(csv)) {
      grid.push_back(static_cast<std::int64_t>(v));
    }
  }
  return grid;
}

void run_bench(const BenchArgs& args) {
  const std::vector<std::string> method_names = split_csv(args.methods);
  const std::vector<std::int64_t> k_grid = parse_grid(args.k_grid, 100, 2000, 100);
  const std::vector<std::int64_t> n_grid = parse_grid(args.n_grid, 10, 200, 10);

  std::map<std::size_t, std::string> model_paths;
  for (const std::string& entry : args.models) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos) {
      throw InvalidArgumentError("--model expects m=path, got: " + entry);
    }
    model_paths[static_cast<std::size_t>(std::stoul(entry.substr(0, eq)))] = entry.substr(eq + 1);
  }

  // Testing groups, keyed by objective dimension.
  std::map<std::size_t, std::vector<TestGroup>> groups_by_m;
  if (!args.data_files.empty()) {
    std::map<std::size_t, std::size_t> next_group_id;
    for (const std::string& file : args.data_files) {
      std::vector<LabeledSet> sets = read_dataset(file);
      const std::size_t m = sets.front().set.dim();
      for (const LabeledSet& rec : sets) {
        if (rec.set.dim() != m) {
          throw InvalidArgumentError(file + ": mixed objective dimensions in one group");
        }
      }
      groups_by_m[m].push_back(TestGroup{m, next_group_id[m]++, std::move(sets)});
    }
  } else {
    for (double mv : parse_doubles(args.m_list)) {
      const std::size_t m = static_cast<std::size_t>(mv);
      for (std::size_t g = 0; g < args.groups; ++g) {
        GenConfig cfg;
        cfg.objective_dim = m;
        cfg.num_sets = args.sets_per_group;
        cfg.max_set_size = args.max_size;
        cfg.candidate_pool = args.pool;
        cfg.seed = derive_seed(derive_seed(args.seed, m), g);
        groups_by_m[m].push_back(TestGroup{m, g, generate_labeled_dataset(cfg)});
        std::cerr << "generated group " << g << " for m=" << m << '\n';
      }
    }
  }

  std::vector<BenchRecord> all_records;
  for (const auto& [m, groups] : groups_by_m) {
    std::vector<BenchMethod> methods;
    for (const std::string& name : method_names) {
      if (name == "point") {
        for (std::int64_t k : k_grid) {
          methods.push_back(make_point_method(k, derive_seed(args.seed, 10000 + k)));
        }
      } else if (name == "line") {
        for (std::int64_t n : n_grid) {
          methods.push_back(make_line_method(static_cast<std::size_t>(n), m,
                                             derive_seed(args.seed, 20000 + n)));
        }
      } else if (name == "hvnet") {
        const auto it = model_paths.find(m);
        if (it == model_paths.end()) {
          throw InvalidArgumentError("bench: no --model entry for m=" + std::to_string(m));
        }
        auto model = std::make_shared<const HvNetModel>(load_model(it->second));
        if (model->objective_dim != m) {
          throw InvalidArgumentError("bench: model " + it->second + " expects m=" +
                                     std::to_string(model->objective_dim));
        }
        methods.push_back(make_hvnet_method(std::move(model),
                                            "model=" + std::filesystem::path(it->second)
                                                           .filename()
                                                           .string()));
      } else {
        throw InvalidArgumentError("unknown method: " + name);
      }
    }
    std::cerr << "benchmarking m=" << m << " (" << methods.size() << " configurations, "
              << groups.size() << " groups)\n";
    const auto records = run_benchmark(methods, groups);
    all_records.insert(all_records.end(), records.begin(), records.end());
  }

  write_bench_csv(args.out, all_records);
  if (!args.summary.empty()) {
    write_bench_summary_json(args.summary, all_records);
  }
  std::cerr << "wrote " << all_records.size() << " records to " << args.out << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hypervolume computation and approximation toolkit"};
  app.require_subcommand(1);

  HvArgs hv_args;
  CLI::App* hv_cmd = app.add_subcommand("hv", "exact hypervolume of each set in a file");
  hv_cmd->add_option("--in", hv_args.in, "input set file (one JSON record per line)")->required();
  hv_cmd->add_option("--ref", hv_args.ref, "reference point, comma separated (default: all ones)");
  hv_cmd->callback([&] { run_hv(hv_args); });

  ApproxArgs approx_args;
  CLI::App* approx_cmd = app.add_subcommand("approx", "approximate hypervolume of each set");
  approx_cmd->add_option("--method", approx_args.method, "point, line, or hvnet")->required();
  approx_cmd->add_option("--in", approx_args.in, "input set file")->required();
  approx_cmd->add_option("--ref", approx_args.ref, "reference point (default: all ones)");
  approx_cmd->add_option("--k", approx_args.k, "sample count for the point method");
  approx_cmd->add_option("--n", approx_args.n, "direction count for the line method");
  approx_cmd->add_option("--model", approx_args.model_path, "HV-Net model file");
  approx_cmd->add_option("--orientation", approx_args.orientation, "min or max");
  approx_cmd->add_option("--seed", approx_args.seed, "random seed");
  approx_cmd->callback([&] { run_approx(approx_args); });

  GenDataArgs gen_args;
  CLI::App* gen_cmd = app.add_subcommand("gen-data", "generate a labeled dataset");
  gen_cmd->add_option("--m", gen_args.m, "objective dimension")->required();
  gen_cmd->add_option("--count", gen_args.count, "number of solution sets")->required();
  gen_cmd->add_option("--out", gen_args.out, "output dataset file")->required();
  gen_cmd->add_option("--max-size", gen_args.max_size, "largest set cardinality");
  gen_cmd->add_option("--pool", gen_args.pool, "candidate pool size per set");
  gen_cmd->add_option("--seed", gen_args.seed, "random seed");
  gen_cmd->callback([&] { run_gen_data(gen_args); });

  TrainArgs train_args;
  CLI::App* train_cmd = app.add_subcommand("train", "train an HV-Net model");
  train_cmd->add_option("--data", train_args.data, "training dataset")->required();
  train_cmd->add_option("--out", train_args.out, "output model file")->required();
  train_cmd->add_option("--loss", train_args.loss, "log_mse, mse, or mape");
  train_cmd->add_option("--lr", train_args.lr, "learning rate");
  train_cmd->add_option("--batch", train_args.batch, "batch size");
  train_cmd->add_option("--epochs", train_args.epochs, "training epochs");
  train_cmd->add_option("--width", train_args.width, "hidden layer width");
  train_cmd->add_option("--seed", train_args.seed, "random seed");
  train_cmd->add_option("--trace", train_args.trace, "loss trace CSV (epoch,mean_loss)");
  train_cmd->callback([&] { run_train(train_args); });

  EvalArgs eval_args;
  CLI::App* eval_cmd = app.add_subcommand("eval", "per-set predictions and errors of a model");
  eval_cmd->add_option("--model", eval_args.model, "HV-Net model file")->required();
  eval_cmd->add_option("--data", eval_args.data, "labeled dataset")->required();
  eval_cmd->add_option("--out", eval_args.out, "per-set CSV output (default: stdout)");
  eval_cmd->callback([&] { run_eval(eval_args); });

  BenchArgs bench_args;
  CLI::App* bench_cmd = app.add_subcommand("bench", "error-vs-runtime benchmark harness");
  bench_cmd->add_option("--methods", bench_args.methods, "comma list of point,line,hvnet");
  bench_cmd->add_option("--m", bench_args.m_list, "objective dimensions, comma separated");
  bench_cmd->add_option("--groups", bench_args.groups, "testing groups per dimension");
  bench_cmd->add_option("--sets-per-group", bench_args.sets_per_group, "sets per group");
  bench_cmd->add_option("--max-size", bench_args.max_size, "largest set cardinality");
  bench_cmd->add_option("--pool", bench_args.pool, "candidate pool size per set");
  bench_cmd->add_option("--data", bench_args.data_files, "pre-generated group files");
  bench_cmd->add_option("--k-grid", bench_args.k_grid, "point-method sample grid");
  bench_cmd->add_option("--n-grid", bench_args.n_grid, "line-method direction grid");
  bench_cmd->add_option("--model", bench_args.models, "HV-Net model per dimension, m=path");
  bench_cmd->add_option("--seed", bench_args.seed, "random seed");
  bench_cmd->add_option("--out", bench_args.out, "results CSV")->required();
  bench_cmd->add_option("--summary", bench_args.summary, "aggregate JSON summary");
  bench_cmd->callback([&] { run_bench(bench_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
