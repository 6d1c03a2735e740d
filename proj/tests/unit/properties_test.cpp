#include <cmath>
#include <random>

#include "regmod/catalog.hpp"
#include "regmod/penalty.hpp"
#include "test_support.hpp"

using namespace regmod;
using regmod::testing::grid;
using regmod::testing::ladder;

namespace {

/// Lambda(p) = a1 p1 + a2 p2 on B(0, 2) x B(0, 2).
SetValuedMap random_linear(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.6, 2.0);
  std::bernoulli_distribution sign(0.5);
  const double a1 = sign(rng) ? u(rng) : -u(rng);
  const double a2 = sign(rng) ? u(rng) : -u(rng);
  SetValuedMap m;
  m.name = "linear";
  m.fiber = [a1, a2](const Point& p, const Point& x) { return std::abs(a1 * p[0] + a2 * p[1] - x[0]); };
  m.domain_region = Ball(Point{0.0, 0.0}, 2.0);
  m.range_region = Ball(Point{0.0}, 2.0);
  m.ref_p = Point{0.0, 0.0};
  m.ref_x = Point{0.0};
  return m;
}

double inverse_norm(const SetValuedMap& m) {
  const double a1 = m.fiber(Point{1.0, 0.0}, Point{0.0});
  const double a2 = m.fiber(Point{0.0, 1.0}, Point{0.0});
  return 1.0 / std::hypot(a1, a2);
}

/// min kappa x subject to x >= 0, R(p) independent of p.
ParamProblem lipschitz_problem(double kappa) {
  ParamProblem prob = shift_halfline();
  prob.name = "lipschitz";
  prob.objective = [kappa](const Point& x) { return kappa * x[0]; };
  prob.constraint.set_distance = [](const Point&, const Point& x, const Point&) {
    return std::max(-x[0], 0.0);
  };
  return prob;
}

}  // namespace

TEST(Property, FinalizedRungsAreMonotone) {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> u(0.0, 5.0);
  const auto lad = ladder(1.0, 10);
  for (int trial = 0; trial < 200; ++trial) {
    ModulusEstimate e;
    for (double r : lad.radii()) {
      RungRecord rec;
      rec.radius = r;
      rec.scale_value = u(rng);
      e.per_rung.push_back(rec);
    }
    finalize_estimate(e, lad, {});
    for (std::size_t i = 1; i < e.per_rung.size(); ++i) {
      ASSERT_LE(e.per_rung[i].supremum_value, e.per_rung[i - 1].supremum_value);
      ASSERT_GE(e.per_rung[i].supremum_value, e.per_rung[i].scale_value);
    }
    if (e.verdict == Verdict::Finite) {
      const auto n = e.per_rung.size();
      const double a = e.per_rung[n - 1].scale_value, b = e.per_rung[n - 2].scale_value;
      EXPECT_TRUE(std::abs(a - b) <= 0.05 * std::max(a, b) + 1e-12 || e.limiting_value == 0.0);
    }
  }
}

TEST(Property, DualityOnRandomLinearMaps) {
  std::mt19937_64 rng(103);
  const auto g = grid(48);
  for (int trial = 0; trial < 3; ++trial) {
    const auto m = random_linear(rng);
    const auto direct = uniform_hemiregularity_estimate(m, ladder(), g);
    const auto dual = uniform_lipschitz_lsc_estimate(inverse_view(m, g), ladder(), g);
    const double tol = grid_tolerance(direct, g, {}) + grid_tolerance(dual, g, {});
    EXPECT_LE(std::abs(direct.limiting_value - dual.limiting_value), 2 * tol);
    EXPECT_NEAR(direct.limiting_value, inverse_norm(m), 0.05 * inverse_norm(m));
  }
}

TEST(Property, SpecializationForSingleValuedMaps) {
  const auto g = grid(64);
  for (const auto& m : {identity_map(), linear_onto()}) {
    const auto basic = hemiregularity_estimate(m, ladder(), g);
    const auto uniform = uniform_hemiregularity_estimate(m, ladder(), g);
    EXPECT_NEAR(basic.limiting_value, uniform.limiting_value,
                grid_tolerance(basic, g, {}) + grid_tolerance(uniform, g, {}))
        << m.name;
  }
}

TEST(Property, GridRefinementKeepsFiniteLimits) {
  for (const auto& m : {identity_map(), linear_onto(), halfline_map()}) {
    const auto coarse = uniform_hemiregularity_estimate(m, ladder(), grid(32));
    const auto fine = uniform_hemiregularity_estimate(m, ladder(), grid(64));
    ASSERT_TRUE(coarse.finite() && fine.finite()) << m.name;
    EXPECT_NEAR(coarse.limiting_value, fine.limiting_value,
                grid_tolerance(coarse, grid(32), {})) << m.name;
  }
}

TEST(Property, OpennessDuality) {
  const auto g = grid(64);
  for (const auto& m : {identity_map(), linear_onto()}) {
    const auto u = uniform_hemiregularity_estimate(m, ladder(), g);
    ASSERT_TRUE(u.finite());
    const double a = 0.9 / (u.limiting_value + 0.05);
    EXPECT_TRUE(openness_check(m, a, 0.5, g).holds) << m.name;
    EXPECT_LE(u.limiting_value, (1.0 / a) * 1.1);
  }
}

TEST(Property, OuterSlopeScalesLinearly) {
  std::mt19937_64 rng(107);
  std::uniform_real_distribution<double> u(0.5, 3.0);
  for (int trial = 0; trial < 3; ++trial) {
    const double c = u(rng);
    const auto s = strict_outer_slope(affine_inclusion(c), ladder(), ladder(), grid(48));
    EXPECT_NEAR(s.value / c, 1.0, 0.05) << "c=" << c;
    for (std::size_t i = 1; i < s.per_epsilon.size(); ++i) {
      if (std::isfinite(s.per_epsilon[i].infimum)) {
        EXPECT_GE(s.per_epsilon[i].infimum, s.per_epsilon[i - 1].infimum);
      }
    }
  }
}

TEST(Property, CertificateSoundness) {
  for (const auto& inc : {shift_inclusion(), quadratic_inclusion(), affine_inclusion(-1.5)}) {
    const auto rep = theorem41_certificate(inc, {ladder(), ladder(), ladder()}, grid(48));
    if (rep.status == CertificateStatus::Issued) {
      EXPECT_LE(rep.direct_usreg_r.limiting_value, rep.bound * 1.1) << inc.name;
      EXPECT_TRUE(rep.bound_respected);
    } else {
      EXPECT_EQ(rep.bound, kInfinity);
    }
  }
}

TEST(Property, PenaltyMonotoneInLevelAndZeroOnFeasibleSet) {
  std::mt19937_64 rng(109);
  std::uniform_real_distribution<double> ux(-0.9, 0.9), ul(0.1, 5.0);
  const auto g = grid(64);
  for (const auto& prob : {shift_halfline(), ex31_sqrt_problem(2.0)}) {
    for (auto form : {PenaltyForm::Geometric, PenaltyForm::Data}) {
      for (int i = 0; i < 30; ++i) {
        const Point p{0.5 * ux(rng)}, x{ux(rng)};
        double l1 = ul(rng), l2 = ul(rng);
        if (l1 > l2) std::swap(l1, l2);
        EXPECT_LE(penalty_value(prob, l1, form, p, x, g), penalty_value(prob, l2, form, p, x, g));
        if (displacement(prob.constraint, p, x) <= kEtaMem) {
          const double term = penalty_value(prob, l2, form, p, x, g) - prob.objective(x);
          EXPECT_LE(term, l2 * kEtaMem);
        }
      }
    }
  }
}

TEST(Property, ExactAboveThresholdOnShiftHalfline) {
  const auto prob = shift_halfline();
  const auto g = grid(64);
  const auto usreg = uniform_hemiregularity_estimate(solution_map(prob.constraint, g), ladder(), g);
  const auto pcalm = problem_calmness_estimate(prob, ladder(), g);
  ASSERT_TRUE(usreg.finite() && pcalm.finite());
  const double t = usreg.limiting_value * pcalm.limiting_value;
  std::mt19937_64 rng(113);
  std::uniform_real_distribution<double> u(1.1, 6.0);
  for (auto form : {PenaltyForm::Geometric, PenaltyForm::Data}) {
    const auto samples = exactness_samples(prob, form, 0.5, g);
    double prev_exact_level = kInfinity;
    for (int i = 0; i < 20; ++i) {
      const double l = u(rng) * t;
      EXPECT_TRUE(exactness_verify(samples, l).exact) << l;
      prev_exact_level = std::min(prev_exact_level, l);
    }
    EXPECT_LE(minimal_exact_level(samples), prev_exact_level);
  }
}

TEST(Property, LipschitzBaseline) {
  std::mt19937_64 rng(127);
  std::uniform_real_distribution<double> uk(0.2, 4.0), ul(1.1, 3.0);
  const auto g = grid(64);
  for (int trial = 0; trial < 5; ++trial) {
    const double kappa = uk(rng);
    const auto prob = lipschitz_problem(kappa);
    const auto samples = exactness_samples(prob, PenaltyForm::Geometric, 0.5, g);
    for (int i = 0; i < 5; ++i) {
      EXPECT_TRUE(exactness_verify(samples, ul(rng) * kappa).exact) << kappa;
    }
    EXPECT_FALSE(exactness_verify(samples, 0.5 * kappa).exact);
  }
}
