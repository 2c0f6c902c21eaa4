#include "hvkit/dataset.hpp"

#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>
#include <string>
#include <utility>

#include "hvkit/errors.hpp"
#include "hvkit/exact.hpp"

namespace hvkit {

namespace {

using nlohmann::json;

void check_gen_config(const GenConfig& cfg) {
  if (cfg.objective_dim < 2) {
    throw InvalidArgumentError("GenConfig: objective_dim must be >= 2");
  }
  if (cfg.max_set_size == 0 || cfg.candidate_pool == 0 || cfg.max_pool_retries == 0) {
    throw InvalidArgumentError("GenConfig: sizes and retry cap must be positive");
  }
  if (cfg.max_set_size > cfg.candidate_pool) {
    throw InvalidArgumentError("GenConfig: max_set_size exceeds candidate_pool");
  }
}

SolutionSet parse_record_set(const json& rec, std::size_t line_no, bool require_unit_box) {
  if (!rec.is_object() || !rec.contains("m") || !rec.contains("points")) {
    throw ParseError("line " + std::to_string(line_no) + ": record must contain m and points");
  }
  const std::size_t m = rec.at("m").get<std::size_t>();
  const json& pts = rec.at("points");
  if (!pts.is_array() || pts.empty()) {
    throw ParseError("line " + std::to_string(line_no) + ": points must be a non-empty array");
  }
  std::vector<Point> points;
  points.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const json& row = pts.at(i);
    if (!row.is_array() || row.size() != m) {
      throw ParseError("line " + std::to_string(line_no) + ": point " + std::to_string(i) +
                       " does not have " + std::to_string(m) + " coordinates");
    }
    std::vector<double> coords;
    coords.reserve(m);
    for (const json& c : row) {
      if (!c.is_number()) {
        throw ParseError("line " + std::to_string(line_no) + ": non-numeric coordinate in point " +
                         std::to_string(i));
      }
      const double v = c.get<double>();
      if (require_unit_box && (v < 0.0 || v > 1.0)) {
        throw ParseError("line " + std::to_string(line_no) + ": coordinate " + std::to_string(v) +
                         " of point " + std::to_string(i) + " is outside [0,1]");
      }
      coords.push_back(v);
    }
    points.emplace_back(std::move(coords));
  }
  try {
    return SolutionSet(std::move(points));
  } catch (const DominatedPairError& e) {
    throw DominatedPairError("line " + std::to_string(line_no) + ": " + e.what());
  } catch (const DuplicatePointError& e) {
    throw DuplicatePointError("line " + std::to_string(line_no) + ": " + e.what());
  } catch (const DimensionMismatchError& e) {
    throw DimensionMismatchError("line " + std::to_string(line_no) + ": " + e.what());
  } catch (const InvalidPointError& e) {
    throw InvalidPointError("line " + std::to_string(line_no) + ": " + e.what());
  }
}

json parse_line(const std::string& line, std::size_t line_no) {
  try {
    return json::parse(line);
  } catch (const json::exception& e) {
    throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
  }
}

template <typename Fn>
void for_each_record_line(const std::filesystem::path& path, Fn&& fn) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) {
      continue;
    }
    fn(line, line_no);
  }
}

}  // namespace

SolutionSet generate_solution_set(const GenConfig& cfg, Rng& rng) {
  check_gen_config(cfg);
  const std::size_t m = cfg.objective_dim;
  const std::size_t num = 1 + static_cast<std::size_t>(rng.below(cfg.max_set_size));

  for (std::size_t attempt = 0; attempt < cfg.max_pool_retries; ++attempt) {
    std::vector<Point> pool;
    pool.reserve(cfg.candidate_pool);
    for (std::size_t i = 0; i < cfg.candidate_pool; ++i) {
      std::vector<double> coords(m);
      for (std::size_t j = 0; j < m; ++j) {
        coords[j] = rng.uniform01();
      }
      pool.emplace_back(std::move(coords));
    }
    const auto fronts = non_dominated_sort(pool);
    for (const auto& front : fronts) {
      if (front.size() < num) {
        continue;
      }
      // Partial Fisher-Yates: the first num slots are a uniform sample
      // without replacement.
      std::vector<std::size_t> idx(front.size());
      for (std::size_t i = 0; i < idx.size(); ++i) {
        idx[i] = i;
      }
      std::vector<Point> chosen;
      chosen.reserve(num);
      for (std::size_t i = 0; i < num; ++i) {
        const std::size_t pick = i + static_cast<std::size_t>(rng.below(idx.size() - i));
        std::swap(idx[i], idx[pick]);
        chosen.push_back(front[idx[i]]);
      }
      return SolutionSet(std::move(chosen));
    }
  }
  throw Error("generate_solution_set: no front with " + std::to_string(num) + " points in " +
              std::to_string(cfg.max_pool_retries) + " candidate pools (m=" + std::to_string(m) +
              ", pool=" + std::to_string(cfg.candidate_pool) + ")");
}

std::vector<LabeledSet> generate_labeled_dataset(const GenConfig& cfg) {
  check_gen_config(cfg);
  const ReferencePoint ref = ReferencePoint::unit(cfg.objective_dim);
  std::vector<LabeledSet> data;
  data.reserve(cfg.num_sets);
  for (std::size_t i = 0; i < cfg.num_sets; ++i) {
    Rng rng(derive_seed(cfg.seed, i));
    SolutionSet set = generate_solution_set(cfg, rng);
    const double hv = hv_exact(set, ref);
    if (set.size() <= 12) {
      const double oracle = hv_oracle_incl_excl(set, ref);
      if (std::abs(hv - oracle) > 1e-9 * std::max(1.0, std::abs(oracle))) {
        throw Error("generate_labeled_dataset: label self-check failed at set " +
                    std::to_string(i));
      }
    }
    data.push_back(LabeledSet{std::move(set), hv});
  }
  return data;
}

void write_dataset(const std::filesystem::path& path, std::span<const LabeledSet> data) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  for (const LabeledSet& rec : data) {
    json j;
    j["m"] = rec.set.dim();
    json pts = json::array();
    for (const Point& p : rec.set) {
      pts.push_back(p.coords());
    }
    j["points"] = std::move(pts);
    j["hv"] = rec.hv;
    out << j.dump() << '\n';
  }
  if (!out) {
    throw IoError("write failed for " + path.string());
  }
}

std::vector<LabeledSet> read_dataset(const std::filesystem::path& path) {
  std::vector<LabeledSet> data;
  for_each_record_line(path, [&](const std::string& line, std::size_t line_no) {
    const json rec = parse_line(line, line_no);
    SolutionSet set = parse_record_set(rec, line_no, /*require_unit_box=*/true);
    if (!rec.contains("hv") || !rec.at("hv").is_number()) {
      throw ParseError("line " + std::to_string(line_no) + ": missing numeric hv field");
    }
    const double hv = rec.at("hv").get<double>();
    if (!(hv > 0.0) || hv > 1.0) {
      throw ParseError("line " + std::to_string(line_no) + ": hv " + std::to_string(hv) +
                       " is outside (0, 1]");
    }
    data.push_back(LabeledSet{std::move(set), hv});
  });
  if (data.empty()) {
    throw ParseError(path.string() + ": no records");
  }
  return data;
}

std::vector<SolutionSet> read_sets(const std::filesystem::path& path) {
  std::vector<SolutionSet> sets;
  for_each_record_line(path, [&](const std::string& line, std::size_t line_no) {
    const json rec = parse_line(line, line_no);
    sets.push_back(parse_record_set(rec, line_no, /*require_unit_box=*/false));
  });
  if (sets.empty()) {
    throw ParseError(path.string() + ": no records");
  }
  return sets;
}

}  // namespace hvkit
