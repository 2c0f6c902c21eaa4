#include <cmath>

#include "doctest.h"
#include "hvkit/errors.hpp"
#include "hvkit/exact.hpp"
#include "hvkit/rng.hpp"
#include "test_util.hpp"

using namespace hvkit;

namespace {

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("hv_exact: frozen examples") {
  CHECK(hv_exact(SolutionSet({Point({0.5, 0.5})}), ReferencePoint({1, 1})) ==
        doctest::Approx(0.25).epsilon(1e-12));
  // inclusion-exclusion by hand: 0.75*0.25 + 0.25*0.75 - 0.25^2
  CHECK(hv_exact(SolutionSet({Point({0.25, 0.75}), Point({0.75, 0.25})}), ReferencePoint({1, 1})) ==
        doctest::Approx(0.3125).epsilon(1e-12));
  // 2-D sweep by hand: 3*2 + 3*6 + 1*8
  CHECK(hv_exact(SolutionSet({Point({10, 1}), Point({7, 3}), Point({4, 7})}),
                 ReferencePoint({11, 9})) == doctest::Approx(32.0).epsilon(1e-12));
}

TEST_CASE("hv_exact in three dimensions against hand arithmetic") {
  // two boxes from (0.2,0.2,0.2) and (0.5,0.1,0.6), overlap (0.5,0.2,0.6)
  const SolutionSet s({Point({0.2, 0.2, 0.2}), Point({0.5, 0.1, 0.6})});
  const ReferencePoint r({1, 1, 1});
  const double expected = 0.8 * 0.8 * 0.8 + 0.5 * 0.9 * 0.4 - 0.5 * 0.8 * 0.4;
  CHECK(hv_exact(s, r) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("hv_exact_2d: frozen examples and dimension guard") {
  CHECK(hv_exact_2d(SolutionSet({Point({10, 1}), Point({7, 3}), Point({4, 7})}),
                    ReferencePoint({11, 9})) == doctest::Approx(32.0).epsilon(1e-12));
  CHECK(hv_exact_2d(SolutionSet({Point({0.5, 0.5})}), ReferencePoint({1, 1})) ==
        doctest::Approx(0.25).epsilon(1e-12));
  // canonical frame of the three-point sweep example: 32 / 56 = 4/7
  const SolutionSet canonical(
      {Point({6.0 / 7.0, 0.0}), Point({3.0 / 7.0, 2.0 / 8.0}), Point({0.0, 6.0 / 8.0})});
  CHECK(hv_exact_2d(canonical, ReferencePoint({1, 1})) ==
        doctest::Approx(4.0 / 7.0).epsilon(1e-12));
  CHECK_THROWS_AS(hv_exact_2d(SolutionSet({Point({0.5, 0.5, 0.5})}), ReferencePoint({1, 1, 1})),
                  DimensionMismatchError);
}

TEST_CASE("hv_oracle_incl_excl: frozen examples") {
  CHECK(hv_oracle_incl_excl(SolutionSet({Point({0.5, 0.5})}), ReferencePoint({1, 1})) ==
        doctest::Approx(0.25).epsilon(1e-12));
  CHECK(hv_oracle_incl_excl(SolutionSet({Point({0.25, 0.75}), Point({0.75, 0.25})}),
                            ReferencePoint({1, 1})) == doctest::Approx(0.3125).epsilon(1e-12));
  // dominated pairs are fine for the raw oracle: (0,0) covers the unit box
  const std::vector<Point> dominated{Point({0, 0}), Point({0.5, 0.5})};
  CHECK(hv_oracle_incl_excl(std::span<const Point>(dominated), ReferencePoint({1, 1})) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hv_oracle_incl_excl rejects oversized input") {
  Rng rng(3);
  std::vector<Point> many;
  for (int i = 0; i < 21; ++i) {
    many.push_back(Point({rng.uniform01(), rng.uniform01()}));
  }
  CHECK_THROWS_AS(hv_oracle_incl_excl(std::span<const Point>(many), ReferencePoint({2, 2})),
                  InvalidArgumentError);
}

TEST_CASE("reference point must be strictly dominated") {
  const SolutionSet s({Point({0.5, 0.5})});
  CHECK_THROWS_AS(hv_exact(s, ReferencePoint({0.5, 1})), ReferencePointError);
  CHECK_THROWS_AS(hv_exact(s, ReferencePoint({0.4, 1})), ReferencePointError);
  CHECK_THROWS_AS(hv_exact_2d(s, ReferencePoint({1, 0.2})), ReferencePointError);
  CHECK_THROWS_AS(hv_oracle_incl_excl(s, ReferencePoint({1, 0.5})), ReferencePointError);
  CHECK_THROWS_AS(hv_exact(s, ReferencePoint({1, 1, 1})), DimensionMismatchError);
}

TEST_CASE("hv_exact agrees with the inclusion-exclusion oracle") {
  Rng rng(17);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t m = 2 + rng.below(4);
    const SolutionSet s = testutil::random_front(m, 40, 12, rng);
    const ReferencePoint r = ReferencePoint::unit(m);
    const double exact = hv_exact(s, r);
    const double oracle = hv_oracle_incl_excl(s, r);
    CHECK(rel_diff(exact, oracle) <= 1e-9);
    if (m == 2) {
      CHECK(rel_diff(hv_exact_2d(s, r), oracle) <= 1e-9);
    }
  }
}

TEST_CASE("hypervolume is monotone under adding a non-dominated point") {
  Rng rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = 2 + rng.below(3);
    const SolutionSet full = testutil::random_front(m, 60, 10, rng);
    if (full.size() < 2) {
      continue;
    }
    std::vector<Point> subset(full.points().begin(), full.points().end() - 1);
    const ReferencePoint r = ReferencePoint::unit(m);
    const double hv_subset = hv_exact(SolutionSet(subset), r);
    const double hv_full = hv_exact(full, r);
    CHECK(hv_full >= hv_subset - 1e-12);
  }
}

TEST_CASE("hypervolume lies in (0, prod(r - ideal)]") {
  Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = 2 + rng.below(3);
    const SolutionSet s = testutil::random_front(m, 50, 15, rng);
    const ReferencePoint r = ReferencePoint::unit(m);
    const double hv = hv_exact(s, r);
    double bound = 1.0;
    const auto ideal = s.ideal_point();
    for (std::size_t j = 0; j < m; ++j) {
      bound *= r[j] - ideal[j];
    }
    CHECK(hv > 0.0);
    CHECK(hv <= bound + 1e-12);
  }
}
