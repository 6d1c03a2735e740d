#include <cmath>
#include <random>

#include "regmod/closed_set.hpp"
#include "regmod/nearest_zero.hpp"
#include "test_support.hpp"

using namespace regmod;

namespace {

Residual circle(double radius) {
  return [radius](const Point& q) { return std::abs(norm(q) - radius); };
}

}  // namespace

TEST(NearestZero, CircleFromInsideAndOutside) {
  const Ball region(Point{0.0, 0.0}, 3.0);
  ZeroSearchOptions opts;
  for (double r : {0.3, 1.0, 2.0}) {
    for (const Point c : {Point{0.1, 0.0}, Point{0.0, 2.5}, Point{-0.4, 0.3}}) {
      const auto hit = nearest_zero(circle(r), c, region, opts);
      ASSERT_TRUE(hit.witness);
      const double oracle = std::abs(norm(c) - r);
      EXPECT_NEAR(hit.distance, oracle, 1e-3 * std::max(oracle, 1.0)) << "r=" << r;
      EXPECT_NEAR(distance(c, *hit.witness), hit.distance, 1e-12);
      EXPECT_LE(circle(r)(*hit.witness), 1e-9);
    }
  }
}

TEST(NearestZero, LineOracleOnRandomCentres) {
  // zero set: x + 2 y = 1, distance |x + 2 y - 1| / sqrt 5
  const Residual line = [](const Point& q) { return std::abs(q[0] + 2 * q[1] - 1.0); };
  const Ball region(Point{0.0, 0.0}, 4.0);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int i = 0; i < 40; ++i) {
    const Point c{u(rng), u(rng)};
    const double oracle = std::abs(c[0] + 2 * c[1] - 1.0) / std::sqrt(5.0);
    const auto hit = nearest_zero(line, c, region, {});
    EXPECT_NEAR(hit.distance, oracle, 1e-3 * std::max(oracle, 0.1));
    EXPECT_GE(hit.distance, oracle - 1e-9);
  }
}

TEST(NearestZero, CentreOnTheSetGivesZero) {
  const auto hit = nearest_zero(circle(1.0), Point{1.0, 0.0}, Ball(Point{0.0, 0.0}, 2.0), {});
  EXPECT_EQ(hit.distance, 0.0);
}

TEST(NearestZero, EmptyZeroSetIsInfiniteAndClipped) {
  const Residual never = [](const Point&) { return 1.0; };
  const auto hit = nearest_zero(never, Point{0.0}, Ball(Point{0.0}, 1.0), {});
  EXPECT_EQ(hit.distance, kInfinity);
  EXPECT_TRUE(is_infinite(hit.distance));
  EXPECT_FALSE(hit.witness);
  EXPECT_TRUE(hit.clipped);
}

TEST(NearestZero, FindZeroInBallRespectsTheBall) {
  const Ball region(Point{0.0, 0.0}, 3.0);
  EXPECT_FALSE(find_zero_in_ball(circle(2.0), Ball(Point{0.0, 0.0}, 1.0), region, {}));
  const auto z = find_zero_in_ball(circle(1.0), Ball(Point{0.9, 0.0}, 0.2), region, {});
  ASSERT_TRUE(z);
  EXPECT_LE(distance(*z, Point{0.9, 0.0}), 0.2 + 1e-12);
}

TEST(ClosedSet, DistanceToEmptySetIsInfinity) {
  ClosedSetOracle empty;
  empty.membership = [](const Point&, double) { return false; };
  empty.search_region = Ball(Point{0.0}, 1.0);
  GridSpec g = regmod::testing::grid(33);
  g.region = empty.search_region;
  EXPECT_EQ(distance_to_set(Point{0.3}, empty, g), kInfinity);
  EXPECT_FALSE(enlargement_contains(Point{0.3}, empty, 10.0, g));
  regmod::testing::expect_code(ErrorCode::EmptySetInRegion,
                               [&] { project_onto_set(Point{0.3}, empty, g); });
}

TEST(ClosedSet, GridBackedDistanceMatchesInterval) {
  ClosedSetOracle interval;  // [0.2, 0.6]
  interval.membership = [](const Point& q, double tol) {
    return q[0] >= 0.2 - tol && q[0] <= 0.6 + tol;
  };
  interval.search_region = Ball(Point{0.0}, 1.0);
  GridSpec g = regmod::testing::grid(201);
  g.region = interval.search_region;
  EXPECT_NEAR(distance_to_set(Point{-0.5}, interval, g), 0.7, g.step());
  EXPECT_NEAR(distance_to_set(Point{0.4}, interval, g), 0.0, 1e-12);
  EXPECT_TRUE(enlargement_contains(Point{0.8}, interval, 0.25, g));
  EXPECT_FALSE(enlargement_contains(Point{0.9}, interval, 0.25, g));
  interval.distance = [](const Point& q) {
    return std::max({0.2 - q[0], q[0] - 0.6, 0.0});
  };
  EXPECT_DOUBLE_EQ(distance_to_set(Point{-0.5}, interval, g), 0.7);
}
