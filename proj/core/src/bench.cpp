#include "hvkit/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <utility>

#include "hvkit/approx_line.hpp"
#include "hvkit/approx_mc.hpp"
#include "hvkit/errors.hpp"
#include "hvkit/rng.hpp"

namespace hvkit {

namespace {

std::string format_g9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return std::string(buf);
}

std::uint64_t cell_seed(std::uint64_t seed, std::size_t group_id, std::size_t set_index) {
  return derive_seed(derive_seed(seed, group_id), set_index);
}

}  // namespace

double approximation_error(double approx, double exact) {
  if (!(exact > 0.0)) {
    throw InvalidArgumentError("approximation_error: exact value must be positive");
  }
  return loss_mape(approx, exact);
}

BenchMethod make_point_method(std::int64_t k, std::uint64_t seed) {
  BenchMethod method;
  method.method = "point";
  method.config = "k=" + std::to_string(k);
  method.prepare = [] {};
  method.estimate = [k, seed](const SolutionSet& s, std::size_t group_id, std::size_t set_index) {
    const McConfig cfg{k, cell_seed(seed, group_id, set_index)};
    return hv_mc(s, ReferencePoint::unit(s.dim()), cfg);
  };
  return method;
}

BenchMethod make_line_method(std::size_t n, std::size_t m, std::uint64_t seed) {
  BenchMethod method;
  method.method = "line";
  method.config = "n=" + std::to_string(n);
  auto dirs = std::make_shared<std::unique_ptr<DirectionSet>>();
  method.prepare = [dirs, n, m, seed] {
    *dirs = std::make_unique<DirectionSet>(generate_unv_directions(n, m, seed));
  };
  method.estimate = [dirs](const SolutionSet& s, std::size_t, std::size_t) {
    return hv_line(s, ReferencePoint::unit(s.dim()), **dirs);
  };
  return method;
}

BenchMethod make_hvnet_method(std::shared_ptr<const HvNetModel> model, std::string label) {
  BenchMethod method;
  method.method = "hvnet";
  method.config = std::move(label);
  method.prepare = [] {};
  method.estimate = [model = std::move(model)](const SolutionSet& s, std::size_t, std::size_t) {
    return predict(*model, s);
  };
  return method;
}

std::vector<BenchRecord> run_benchmark(std::span<const BenchMethod> methods,
                                       std::span<const TestGroup> groups) {
  if (methods.empty() || groups.empty()) {
    throw InvalidArgumentError("run_benchmark: methods and groups must be non-empty");
  }
  const std::size_t m = groups.front().objective_dim;
  for (const TestGroup& g : groups) {
    if (g.objective_dim != m) {
      throw InvalidArgumentError("run_benchmark: groups mix objective dimensions");
    }
    if (g.sets.empty()) {
      throw InvalidArgumentError("run_benchmark: group " + std::to_string(g.group_id) +
                                 " is empty");
    }
  }

  using Clock = std::chrono::steady_clock;
  std::vector<BenchRecord> records;
  records.reserve(methods.size() * groups.size());
  std::vector<double> estimates;

  for (const BenchMethod& method : methods) {
    for (const TestGroup& group : groups) {
      // Warm-up pass, identical work, results discarded.
      method.prepare();
      for (std::size_t i = 0; i < group.sets.size(); ++i) {
        (void)method.estimate(group.sets[i].set, group.group_id, i);
      }

      estimates.clear();
      estimates.reserve(group.sets.size());
      const auto t0 = Clock::now();
      method.prepare();
      for (std::size_t i = 0; i < group.sets.size(); ++i) {
        estimates.push_back(method.estimate(group.sets[i].set, group.group_id, i));
      }
      const auto t1 = Clock::now();

      double error_sum = 0.0;
      for (std::size_t i = 0; i < group.sets.size(); ++i) {
        error_sum += approximation_error(estimates[i], group.sets[i].hv);
      }
      BenchRecord rec;
      rec.method = method.method;
      rec.config = method.config;
      rec.m = m;
      rec.group = group.group_id;
      rec.mean_error = error_sum / static_cast<double>(group.sets.size());
      rec.runtime_s = std::chrono::duration<double>(t1 - t0).count();
      records.push_back(std::move(rec));
    }
  }
  return records;
}

void write_bench_csv(const std::filesystem::path& path, std::span<const BenchRecord> records) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  out << "method,config,m,group,mean_error,runtime_s\n";
  for (const BenchRecord& rec : records) {
    out << rec.method << ',' << rec.config << ',' << rec.m << ',' << rec.group << ','
        << format_g9(rec.mean_error) << ',' << format_g9(rec.runtime_s) << '\n';
  }
  if (!out) {
    throw IoError("write failed for " + path.string());
  }
}

void write_bench_summary_json(const std::filesystem::path& path,
                              std::span<const BenchRecord> records) {
  std::map<std::string, std::vector<double>> by_method;
  for (const BenchRecord& rec : records) {
    by_method[rec.method].push_back(rec.mean_error);
  }
  nlohmann::json methods;
  for (const auto& [name, errors] : by_method) {
    double mean = 0.0;
    for (double e : errors) {
      mean += e;
    }
    mean /= static_cast<double>(errors.size());
    double var = 0.0;
    for (double e : errors) {
      var += (e - mean) * (e - mean);
    }
    const double stddev = errors.size() > 1
                              ? std::sqrt(var / static_cast<double>(errors.size() - 1))
                              : 0.0;
    methods[name] = {{"mean_error_mean", mean},
                     {"mean_error_std", stddev},
                     {"records", errors.size()}};
  }
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  out << nlohmann::json{{"methods", methods}}.dump(2) << '\n';
  if (!out) {
    throw IoError("write failed for " + path.string());
  }
}

}  // namespace hvkit
