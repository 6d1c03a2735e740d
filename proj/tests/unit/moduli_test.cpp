#include <cmath>

#include "regmod/catalog.hpp"
#include "regmod/moduli.hpp"
#include "test_support.hpp"

using namespace regmod;
using regmod::testing::grid;
using regmod::testing::ladder;

namespace {

ModulusEstimate synthetic(std::vector<double> values, const RadiusLadder& lad) {
  ModulusEstimate e;
  const auto radii = lad.radii();
  for (std::size_t i = 0; i < values.size(); ++i) {
    RungRecord r;
    r.radius = radii[i];
    r.scale_value = values[i];
    e.per_rung.push_back(r);
  }
  return e;
}

void expect_nonincreasing(const ModulusEstimate& e) {
  for (std::size_t i = 1; i < e.per_rung.size(); ++i) {
    EXPECT_LE(e.per_rung[i].supremum_value, e.per_rung[i - 1].supremum_value) << e.quantity;
    EXPECT_LT(e.per_rung[i].radius, e.per_rung[i - 1].radius);
  }
}

}  // namespace

TEST(FinalizeEstimate, ConstantLadderIsFinite) {
  const auto lad = ladder(0.5, 5);
  auto e = synthetic({2.0, 1.5, 1.2, 1.0, 1.01}, lad);
  finalize_estimate(e, lad, {});
  EXPECT_EQ(e.verdict, Verdict::Finite);
  EXPECT_DOUBLE_EQ(e.limiting_value, 1.01);
  EXPECT_DOUBLE_EQ(e.per_rung[0].supremum_value, 2.0);
  expect_nonincreasing(e);
}

TEST(FinalizeEstimate, CumulativeSupremumCoversFinerRungs) {
  const auto lad = ladder(0.5, 5);
  auto e = synthetic({1.0, 3.0, 0.5, 2.0, 2.0}, lad);
  finalize_estimate(e, lad, {});
  EXPECT_DOUBLE_EQ(e.per_rung[0].supremum_value, 3.0);
  EXPECT_DOUBLE_EQ(e.per_rung[2].supremum_value, 2.0);
  EXPECT_DOUBLE_EQ(e.per_rung[4].supremum_value, 2.0);
  expect_nonincreasing(e);
}

TEST(FinalizeEstimate, GrowthAndInfinityAreDivergent) {
  const auto lad = ladder(0.5, 5);
  auto grow = synthetic({1.0, 1.5, 2.1, 3.0, 4.2}, lad);
  finalize_estimate(grow, lad, {});
  EXPECT_EQ(grow.verdict, Verdict::Divergent);
  EXPECT_EQ(grow.limiting_value, kInfinity);

  auto inf = synthetic({1.0, 1.0, kInfinity, 1.0, 1.0}, lad);
  finalize_estimate(inf, lad, {});
  EXPECT_EQ(inf.verdict, Verdict::Divergent);
}

TEST(FinalizeEstimate, SquareRootDecayIsFiniteZero) {
  const auto lad = ladder(0.5, 6);
  std::vector<double> v;
  for (double r : lad.radii()) v.push_back(r);
  auto e = synthetic(v, lad);
  finalize_estimate(e, lad, {});
  EXPECT_EQ(e.verdict, Verdict::Finite);
  EXPECT_EQ(e.limiting_value, 0.0);
}

TEST(FinalizeEstimate, OscillationIsInconclusive) {
  const auto lad = ladder(0.5, 5);
  auto e = synthetic({1.0, 2.0, 1.0, 2.0, 1.0}, lad);
  finalize_estimate(e, lad, {});
  EXPECT_EQ(e.verdict, Verdict::Inconclusive);
}

TEST(Hemiregularity, BranchParabolaConvergesToOne) {
  const auto e = hemiregularity_estimate(ex21_branch_parabola(), ladder(), grid(64));
  EXPECT_EQ(e.verdict, Verdict::Finite);
  EXPECT_NEAR(e.limiting_value, 1.0, 0.05);
  expect_nonincreasing(e);
}

TEST(Hemiregularity, CubeIsDivergentIdentityIsOne) {
  EXPECT_EQ(hemiregularity_estimate(cubic_map(), ladder(), grid(64)).verdict, Verdict::Divergent);
  const auto id = hemiregularity_estimate(identity_map(), ladder(), grid(64));
  EXPECT_EQ(id.verdict, Verdict::Finite);
  EXPECT_NEAR(id.limiting_value, 1.0, 0.05);
}

TEST(UniformHemiregularity, HyperbolaRatioBoundedByRadius) {
  const auto e = uniform_hemiregularity_estimate(ex22_hyperbola(), ladder(), grid(64));
  for (const auto& r : e.per_rung) EXPECT_LE(r.supremum_value, r.radius + 0.02);
  EXPECT_LE(e.limiting_value, 0.05);
  EXPECT_EQ(e.verdict, Verdict::Finite);
  expect_nonincreasing(e);
}

TEST(UniformHemiregularity, LinearOntoMatchesMinimumNorm) {
  const auto e = uniform_hemiregularity_estimate(linear_onto(), ladder(), grid(64));
  EXPECT_EQ(e.verdict, Verdict::Finite);
  EXPECT_NEAR(e.limiting_value, 1.0 / std::sqrt(5.0), 0.05 / std::sqrt(5.0));
}

TEST(UniformLipschitzLsc, InverseOfHyperbolaAgreesWithDirect) {
  const auto m = ex22_hyperbola();
  const auto g = grid(64);
  const auto direct = uniform_hemiregularity_estimate(m, ladder(), g);
  const auto dual = uniform_lipschitz_lsc_estimate(inverse_view(m, g), ladder(), g);
  const double tol = grid_tolerance(direct, g, {}) + grid_tolerance(dual, g, {});
  EXPECT_LE(std::abs(direct.limiting_value - dual.limiting_value), 2 * tol);
}

TEST(UniformLipschitzLsc, ConstantMappingIsZero) {
  SetValuedMap phi;  // X ⇉ P, Phi(x) = {0}
  phi.name = "constant";
  phi.fiber = [](const Point& x, const Point& p) { (void)x; return std::abs(p[0]); };
  phi.domain_region = Ball(Point{0.0}, 2.0);
  phi.range_region = Ball(Point{0.0}, 2.0);
  phi.ref_p = Point{0.0};
  phi.ref_x = Point{0.0};
  const auto e = uniform_lipschitz_lsc_estimate(phi, ladder(), grid(64));
  EXPECT_EQ(e.limiting_value, 0.0);
}

TEST(MetricRegularityWitness, BranchParabolaViolatesEveryKappa) {
  const auto m = ex21_branch_parabola();
  for (double kappa : {1.0, 10.0, 100.0}) {
    const auto w = metric_regularity_witness_search(m, kappa, ladder(), grid(64));
    ASSERT_TRUE(w) << "kappa=" << kappa;
    EXPECT_LE(norm(w->p), 0.1);
    EXPECT_LE(norm(w->x), 0.1);
    EXPECT_GT(w->inverse_dist, w->kappa_fiber_dist);
  }
}

TEST(MetricRegularityWitness, IdentityHasNone) {
  EXPECT_FALSE(metric_regularity_witness_search(identity_map(), 2.0, ladder(), grid(64)));
}

TEST(MetricRegularityWitness, HyperbolaUniformFormViolated) {
  const auto w = metric_regularity_witness_search(ex22_hyperbola(), 1.0, ladder(), grid(64),
                                                  RegularityForm::UniformFiber);
  EXPECT_TRUE(w);
}

TEST(ConvexProcessNorm, Examples) {
  EXPECT_NEAR(convex_process_norm(linear_onto(), grid(64)).value, 1.0 / std::sqrt(5.0),
              0.05 / std::sqrt(5.0));
  EXPECT_NEAR(convex_process_norm(identity_map(), grid(64)).value, 1.0, 0.05);
  EXPECT_NEAR(convex_process_norm(cone_pair_map(), grid(64)).value, 1.0, 0.05);
}

TEST(Openness, HyperbolaHoldsCubeFails) {
  EXPECT_TRUE(openness_check(ex22_hyperbola(), 0.5, 0.5, grid(64)).holds);
  EXPECT_TRUE(openness_check(identity_map(), 1.0, 0.5, grid(64)).holds);
  const auto cube = openness_check(cubic_map(), 1.0, 0.5, grid(64));
  EXPECT_FALSE(cube.holds);
  EXPECT_TRUE(cube.violating_x);
}

TEST(MappingCalmness, HalflineIsOne) {
  const auto e = mapping_calmness_estimate(halfline_map(), ladder(), grid(64));
  EXPECT_EQ(e.verdict, Verdict::Finite);
  EXPECT_NEAR(e.limiting_value, 1.0, 0.05);
  expect_nonincreasing(e);
}

TEST(Tolerances, RejectNonpositive) {
  Tolerances t;
  t.tol_conv = 0.0;
  regmod::testing::expect_code(ErrorCode::InvalidArgument, [&] {
    hemiregularity_estimate(identity_map(), ladder(), grid(16), t);
  });
}
