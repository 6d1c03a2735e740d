#include <cmath>
#include <random>

#include "regmod/catalog.hpp"
#include "regmod/closed_set.hpp"
#include "regmod/inclusion.hpp"
#include "regmod/set_valued.hpp"
#include "test_support.hpp"

using namespace regmod;
using regmod::testing::expect_code;
using regmod::testing::grid;

namespace {

ClosedSetOracle nonpositive_halfline() {
  ClosedSetOracle s;
  s.membership = [](const Point& q, double tol) { return q[0] <= tol; };
  s.distance = [](const Point& q) { return std::max(q[0], 0.0); };
  s.search_region = Ball(Point{0.0}, 2.0);
  return s;
}

ClosedSetOracle axes_cross() {
  ClosedSetOracle s;
  s.membership = [](const Point& q, double tol) {
    return std::min(std::abs(q[0]), std::abs(q[1])) <= tol;
  };
  s.search_region = Ball(Point{0.0, 0.0}, 1.0);
  return s;
}

GridSpec over(const ClosedSetOracle& s, int density) {
  GridSpec g = grid(density);
  g.region = s.search_region;
  return g;
}

}  // namespace

TEST(DistanceToSet, HalflineAndAxes) {
  const auto h = nonpositive_halfline();
  EXPECT_DOUBLE_EQ(distance_to_set(Point{0.3}, h, over(h, 65)), 0.3);
  const auto a = axes_cross();
  const auto g = over(a, 201);
  const double d = distance_to_set(Point{0.5, 0.2}, a, g);
  EXPECT_GE(d, 0.2 - g.step() / 2);
  EXPECT_NEAR(d, 0.2, g.step());
  EXPECT_TRUE(enlargement_contains(Point{0.5, 0.2}, a, 0.25, g));
  EXPECT_TRUE(enlargement_contains(Point{0.3}, h, 0.3, over(h, 65)));
  EXPECT_FALSE(enlargement_contains(Point{0.3}, h, 0.1, over(h, 65)));
}

TEST(ProjectOntoSet, HalflineLineAndIdempotence) {
  const auto h = nonpositive_halfline();
  EXPECT_NEAR(project_onto_set(Point{0.3}, h, over(h, 201))[0], 0.0, 0.02);
  ClosedSetOracle line;
  line.membership = [](const Point& q, double tol) {
    return std::abs(q[0] + 2 * q[1]) / std::sqrt(5.0) <= tol;
  };
  line.search_region = Ball(Point{0.0, 0.0}, 2.0);
  const auto g = over(line, 161);
  const Point proj = project_onto_set(Point{1.0, 1.0}, line, g);
  // least-squares oracle: q - ((q1 + 2 q2) / 5) (1, 2)
  EXPECT_NEAR(proj[0], 0.4, 2 * g.step());
  EXPECT_NEAR(proj[1], -0.2, 2 * g.step());
  EXPECT_EQ(project_onto_set(Point{-0.5}, h, over(h, 65)), Point{-0.5});
}

TEST(DistanceToSet, OneLipschitzAndMonotoneEnlargement) {
  const auto a = axes_cross();
  const auto g = over(a, 81);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  for (int i = 0; i < 60; ++i) {
    const Point q1{u(rng), u(rng)}, q2{u(rng), u(rng)};
    const double d1 = distance_to_set(q1, a, g), d2 = distance_to_set(q2, a, g);
    EXPECT_LE(std::abs(d1 - d2), distance(q1, q2) + 2 * g.step());
    EXPECT_GE(d1, std::min(std::abs(q1[0]), std::abs(q1[1])) - g.step() / 2);
    const double r1 = std::abs(u(rng)), r2 = r1 + std::abs(u(rng));
    if (enlargement_contains(q1, a, r1, g)) EXPECT_TRUE(enlargement_contains(q1, a, r2, g));
  }
}

TEST(FiberDistance, CatalogValues) {
  EXPECT_NEAR(fiber_distance(ex22_hyperbola(), Point{0.0}, Point{0.5, 0.2}), 0.2, 1e-12);
  const auto ex21 = ex21_branch_parabola();
  for (double xi : {0.05, 0.1, 0.3}) {
    EXPECT_NEAR(fiber_distance(ex21, Point{0.0, xi}, Point{0.0}), xi * xi, 1e-12);
  }
  for (const auto& m : {ex21, ex22_hyperbola(), linear_onto(), cubic_map(), halfline_map()}) {
    EXPECT_EQ(fiber_distance(m, m.ref_p, m.ref_x), 0.0) << m.name;
  }
}

TEST(FiberDistance, OutOfRegionIsAnError) {
  const auto m = ex22_hyperbola();
  expect_code(ErrorCode::OutOfRegion, [&] { fiber_distance(m, Point{5.0}, Point{0.0, 0.0}); });
  expect_code(ErrorCode::OutOfRegion, [&] { fiber_distance(m, Point{0.0}, Point{3.0, 0.0}); });
}

TEST(HyperbolaDistance, MatchesBruteForceParametrisation) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int i = 0; i < 100; ++i) {
    const double p = 0.8 * u(rng);
    const Point x{u(rng), u(rng)};
    double brute = kInfinity;
    if (p == 0.0) {
      brute = std::min(std::abs(x[0]), std::abs(x[1]));
    } else {
      // points (t, p / t), t on a fine log grid over both signs
      for (int s : {-1, 1}) {
        for (int k = -60000; k <= 60000; ++k) {
          const double t = s * std::exp(k * 1e-4);
          brute = std::min(brute, std::hypot(x[0] - t, x[1] - p / t));
        }
      }
    }
    const double d = hyperbola_distance(p, x);
    EXPECT_LE(d, brute + 1e-9) << "p=" << p << " x=" << x.to_string();
    EXPECT_NEAR(d, brute, 1e-4) << "p=" << p << " x=" << x.to_string();
  }
}

TEST(InverseDistance, CatalogValues) {
  const auto ex22 = ex22_hyperbola();
  const auto g22 = grid(64);
  const double step = g22.over(ex22.domain_region).step();
  EXPECT_NEAR(inverse_distance(ex22, Point{0.5, 0.2}, Point{0.0}, g22), 0.1, step);
  const auto ex21 = ex21_branch_parabola();
  EXPECT_NEAR(inverse_distance(ex21, Point{0.0}, Point{0.0, 0.1}, grid(64)), 0.1, 1e-3);
  EXPECT_EQ(inverse_distance(ex21, ex21.ref_x, ex21.ref_p, grid(64)), 0.0);
}

TEST(InverseDistance, GraphSymmetry) {
  const auto m = ex22_hyperbola();
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-0.8, 0.8);
  for (int i = 0; i < 30; ++i) {
    const Point x{u(rng), u(rng)};
    const Point p{x[0] * x[1]};
    ASSERT_LE(fiber_distance(m, p, x), m.eta_mem);
    const auto hit = inverse_search(m, x, p, grid(32));
    EXPECT_EQ(hit.distance, 0.0);
  }
}

TEST(InverseView, DoubleInverseReproducesTheGraph) {
  const auto m = ex21_branch_parabola();
  const auto g = grid(32);
  const auto inv = inverse_view(m, g);
  EXPECT_EQ(inv.ref_p, m.ref_x);
  EXPECT_EQ(inv.ref_x, m.ref_p);
  const auto back = inverse_view(inv, g);
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(-0.9, 0.9);
  for (int i = 0; i < 40; ++i) {
    const Point p{u(rng), u(rng)};
    const Point x{u(rng)};
    EXPECT_EQ(back.graph_residual(p, x) <= kEtaMem, m.graph_residual(p, x) <= kEtaMem);
    EXPECT_EQ(inv.graph_residual(x, p), m.graph_residual(p, x));
  }
}

TEST(Displacement, Examples) {
  const auto inc = affine_inclusion(1.0);
  EXPECT_NEAR(displacement(inc, Point{0.4}, Point{0.1}), 0.3, 1e-15);
  EXPECT_EQ(displacement(inc, inc.ref_p, inc.ref_x), 0.0);
  const auto sq = sqrt_constraint(2.0);
  EXPECT_NEAR(displacement(sq, Point{0.1}, Point{0.02}), 0.01, 1e-15);
  expect_code(ErrorCode::OutOfRegion, [&] { displacement(inc, Point{4.0}, Point{0.0}); });
}

TEST(Displacement, NonnegativeAndSolutionMapConsistent) {
  const auto g = grid(64);
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-0.9, 0.9);
  for (const auto& inc : {affine_inclusion(2.0), cubic_inclusion(), shift_inclusion(),
                          sqrt_constraint(1.5), quadratic_inclusion()}) {
    const auto r = solution_map(inc, g);
    for (int i = 0; i < 25; ++i) {
      const Point p{u(rng)}, x{u(rng)};
      const double d = displacement(inc, p, x);
      EXPECT_GE(d, 0.0);
      EXPECT_EQ(d <= inc.eta_mem, r.fiber(p, x) <= r.eta_mem) << inc.name;
    }
  }
}

TEST(LscProbe, StepMappings) {
  const auto g = grid(33);
  const RadiusLadder lad{0.5, 0.5, 8};
  const auto cont = affine_inclusion(1.0);
  for (double p : {-0.5, 0.0, 0.3}) {
    EXPECT_FALSE(lsc_probe(cont, Point{0.1}, Point{p}, lad, g).violation);
  }
  const auto up = lsc_probe(step_up_inclusion(), Point{0.0}, Point{0.0}, lad, g);
  EXPECT_FALSE(up.violation);
  EXPECT_EQ(up.value_at_center, 0.0);
  for (double m : up.min_over_ball) EXPECT_EQ(m, 0.0);
  const auto down = lsc_probe(step_down_inclusion(), Point{0.0}, Point{0.0}, lad, g);
  EXPECT_EQ(down.value_at_center, 1.0);
  EXPECT_EQ(down.min_over_ball.back(), 0.0);
  ASSERT_TRUE(down.violation);
  EXPECT_GT((*down.violation)[0], 0.0);
}
