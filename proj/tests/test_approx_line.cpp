#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hvkit/approx_line.hpp"
#include "hvkit/errors.hpp"
#include "hvkit/exact.hpp"
#include "hvkit/rng.hpp"
#include "test_util.hpp"

using namespace hvkit;

TEST_CASE("gamma on the half-integer grid") {
  CHECK(gamma_half_integer(1.0) == 1.0);
  CHECK(gamma_half_integer(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-15));
  CHECK(gamma_half_integer(1.5) ==
        doctest::Approx(std::sqrt(std::numbers::pi) / 2.0).epsilon(1e-15));
  CHECK(gamma_half_integer(4.0) == 6.0);
  CHECK(gamma_half_integer(2.5) == doctest::Approx(1.5 * 0.5 * std::sqrt(std::numbers::pi)));
  CHECK_THROWS_AS(gamma_half_integer(0.75), InvalidArgumentError);
  CHECK_THROWS_AS(gamma_half_integer(-0.5), InvalidArgumentError);
  CHECK_THROWS_AS(gamma_half_integer(0.0), InvalidArgumentError);
}

TEST_CASE("unv_direction normalizes absolute values") {
  const std::vector<double> z{3.0, 4.0};
  CHECK(unv_direction(z) == std::vector<double>{0.6, 0.8});
  const std::vector<double> zn{-3.0, 4.0};
  CHECK(unv_direction(zn) == std::vector<double>{0.6, 0.8});
  CHECK_THROWS_AS(unv_direction(std::vector<double>{0.0, 0.0}), InvalidArgumentError);
}

TEST_CASE("generated directions are unit-norm, non-negative, uniform in angle") {
  const DirectionSet dirs = generate_unv_directions(1000, 2, 99);
  REQUIRE(dirs.size() == 1000);
  double angle_sum = 0.0;
  for (const auto& d : dirs) {
    double norm_sq = 0.0;
    for (double c : d) {
      CHECK(c >= 0.0);
      norm_sq += c * c;
    }
    CHECK(std::abs(std::sqrt(norm_sq) - 1.0) <= 1e-12);
    angle_sum += std::atan2(d[1], d[0]);
  }
  // polar angle uniform on [0, pi/2]: mean pi/4, std (pi/2)/sqrt(12)
  const double mean_angle = angle_sum / 1000.0;
  const double std_err = (std::numbers::pi / 2.0) / std::sqrt(12.0) / std::sqrt(1000.0);
  CHECK(std::abs(mean_angle - std::numbers::pi / 4.0) <= 3.0 * std_err);
}

TEST_CASE("direction generation is deterministic per seed") {
  const DirectionSet a = generate_unv_directions(50, 3, 123);
  const DirectionSet b = generate_unv_directions(50, 3, 123);
  for (std::size_t i = 0; i < 50; ++i) {
    CHECK(a[i] == b[i]);
  }
}

TEST_CASE("DirectionSet validates its vectors") {
  CHECK_THROWS_AS(DirectionSet({{0.5, 0.5}}), InvalidArgumentError);       // not unit norm
  CHECK_THROWS_AS(DirectionSet({{-0.6, 0.8}}), InvalidArgumentError);      // negative component
  CHECK_THROWS_AS(DirectionSet({{1.0, 0.0}, {1.0, 0.0, 0.0}}), DimensionMismatchError);
  CHECK_THROWS_AS(DirectionSet({}), InvalidArgumentError);
  CHECK_NOTHROW(DirectionSet({{0.6, 0.8}, {1.0, 0.0}}));
}

TEST_CASE("line_length: hand-evaluated examples") {
  const ReferencePoint r({1, 1});
  const double s2 = std::sqrt(2.0) / 2.0;
  CHECK(line_length(SolutionSet({Point({0, 0})}), r, std::vector<double>{s2, s2}) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  // zero component drops out of the min
  CHECK(line_length(SolutionSet({Point({0, 0})}), r, std::vector<double>{1.0, 0.0}) == 1.0);
  CHECK(line_length(SolutionSet({Point({0.5, 0.5}), Point({0.2, 0.9})}), r,
                    std::vector<double>{0.6, 0.8}) == doctest::Approx(0.625).epsilon(1e-15));
  CHECK_THROWS_AS(line_length(SolutionSet({Point({0, 0})}), r, std::vector<double>{0.0, 0.0}),
                  InvalidArgumentError);
  CHECK_THROWS_AS(line_length(SolutionSet({Point({0, 0})}), r, std::vector<double>{1.0, 0.0, 0.0}),
                  DimensionMismatchError);
}

TEST_CASE("hv_line: single diagonal direction in 2-D gives pi/2") {
  const SolutionSet s({Point({0, 0})});
  const ReferencePoint r({1, 1});
  const double s2 = std::sqrt(2.0) / 2.0;
  const DirectionSet dirs({{s2, s2}});
  // coefficient pi/(4n) at m=2, length sqrt(2): (pi/4) * 2
  CHECK(hv_line(s, r, dirs) == doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-12));
}

TEST_CASE("hv_line converges on the unit box in 2-D") {
  const SolutionSet s({Point({0, 0})});
  const ReferencePoint r({1, 1});
  const DirectionSet dirs = generate_unv_directions(2000, 2, 4);
  CHECK(std::abs(hv_line(s, r, dirs) - 1.0) <= 0.02);
}

TEST_CASE("hv_line scale consistency: alpha^m scaling") {
  Rng rng(31);
  const SolutionSet s = testutil::random_front(3, 40, 8, rng);
  const ReferencePoint r({1.5, 1.2, 1.75});
  const DirectionSet dirs = generate_unv_directions(64, 3, 17);
  const double base = hv_line(s, r, dirs);
  const double alpha = 2.5;
  std::vector<Point> scaled;
  for (const Point& p : s) {
    std::vector<double> c = p.coords();
    for (double& v : c) {
      v *= alpha;
    }
    scaled.emplace_back(std::move(c));
  }
  std::vector<double> rs = r.coords();
  for (double& v : rs) {
    v *= alpha;
  }
  const double scaled_hv = hv_line(SolutionSet(std::move(scaled)), ReferencePoint(rs), dirs);
  CHECK(scaled_hv == doctest::Approx(std::pow(alpha, 3) * base).epsilon(1e-12));
}

TEST_CASE("hv_line never decreases when a point joins the set") {
  Rng rng(37);
  const SolutionSet full = testutil::random_front(3, 50, 9, rng);
  if (full.size() >= 2) {
    const std::vector<Point> subset(full.points().begin(), full.points().end() - 1);
    const ReferencePoint r = ReferencePoint::unit(3);
    const DirectionSet dirs = generate_unv_directions(128, 3, 5);
    CHECK(hv_line(full, r, dirs) >= hv_line(SolutionSet(subset), r, dirs) - 1e-12);
  }
}

TEST_CASE("mean line-based error shrinks from n=10 to n=200") {
  Rng rng(41);
  double err_small = 0.0, err_large = 0.0;
  const int trials = 20;
  for (int t = 0; t < trials; ++t) {
    const std::size_t m = (t % 2 == 0) ? 2 : 3;
    const SolutionSet s = testutil::random_front(m, 40, 10, rng);
    const ReferencePoint r = ReferencePoint::unit(m);
    const double exact = hv_exact(s, r);
    const DirectionSet d10 = generate_unv_directions(10, m, 1000 + t);
    const DirectionSet d200 = generate_unv_directions(200, m, 2000 + t);
    err_small += std::abs(hv_line(s, r, d10) - exact);
    err_large += std::abs(hv_line(s, r, d200) - exact);
  }
  CHECK(err_large < err_small);
}
