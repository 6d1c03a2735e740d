#include "regmod/penalty.hpp"

#include <algorithm>
#include <cmath>

#include "regmod/error.hpp"
#include "regmod/parallel.hpp"

namespace regmod {

std::string_view to_string(PenaltyForm f) {
  return f == PenaltyForm::Geometric ? "geometric" : "data";
}

namespace {

constexpr double kRegionSlack = 1e-9;

std::vector<Point> lattice_in(const GridSpec& grid, const Ball& ball, const Ball& region) {
  std::vector<Point> out;
  for (auto& q : grid.over(ball).generate()) {
    if (region.contains(q, kRegionSlack)) out.push_back(q);
  }
  return out;
}

double checked_objective(const ParamProblem& prob, const Point& x) {
  const double v = prob.objective(x);
  if (std::isnan(v)) throw Error(ErrorCode::InvalidArgument, "objective returned NaN");
  if (v == -kInfinity) {
    throw Error(ErrorCode::DegenerateProblem, "objective is -inf at " + x.to_string());
  }
  return v;
}

double penalty_term(const ParamProblem& prob, const SetValuedMap& r_map, PenaltyForm form,
                    const Point& p, const Point& x) {
  if (form == PenaltyForm::Data) return displacement(prob.constraint, p, x);
  return fiber_distance(r_map, p, x);
}

}  // namespace

void ParamProblem::validate() const {
  constraint.validate();
  if (!objective) throw Error(ErrorCode::InvalidArgument, "problem has no objective");
  if (!(local_opt_radius > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "local_opt_radius must be positive");
  }
  const double v = objective(constraint.ref_x);
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::InvalidArgument, "objective must be finite at the reference point");
  }
}

ParameterizationReport parameterization_validity(const ParamProblem& prob,
                                                 const RadiusLadder& tau_ladder,
                                                 const GridSpec& grid) {
  prob.validate();
  tau_ladder.validate();
  const auto& inc = prob.constraint;
  const auto opts = ZeroSearchOptions::from_grid(grid);
  const Ball target(inc.ref_x, prob.local_opt_radius);
  const GridSpec pgrid = grid.with_density(std::min(grid.density, 16));
  ParameterizationReport rep;
  rep.condition_ii = true;
  for (double tau : tau_ladder.radii()) {
    rep.taus.push_back(tau);
    std::optional<Point> found;
    for (const auto& p : lattice_in(pgrid, Ball(inc.ref_p, tau), inc.p_region)) {
      if (distance(p, inc.ref_p) == 0.0) continue;
      const Residual res = [&](const Point& x) { return displacement_unchecked(inc, p, x); };
      if (find_zero_in_ball(res, target, inc.x_region, opts)) {
        found = p;
        break;
      }
    }
    if (!found) rep.condition_ii = false;
    rep.witnesses.push_back(found);
  }
  return rep;
}

ModulusEstimate problem_calmness_estimate(const ParamProblem& prob, const RadiusLadder& ladder,
                                          const GridSpec& grid, const Tolerances& tol) {
  prob.validate();
  ladder.validate();
  const auto& inc = prob.constraint;
  const SetValuedMap r_map = solution_map(inc, grid);
  const double base = checked_objective(prob, inc.ref_x);

  struct Sample {
    double ratio = -1.0;
    std::vector<Point> witness;
  };
  ModulusEstimate est;
  est.quantity = "problem_calmness";
  bool any_feasible = false;
  for (double r : ladder.radii()) {
    RungRecord rung;
    rung.radius = r;
    if (!inc.p_region.contains_ball(inc.ref_p, r) || !inc.x_region.contains_ball(inc.ref_x, r)) {
      est.boundary_contaminated = true;
    }
    const auto ps = lattice_in(grid, Ball(inc.ref_p, r), inc.p_region);
    const auto results = parallel_map<Sample>(ps.size(), [&](std::size_t i) {
      Sample s;
      const Point& p = ps[i];
      const double d = distance(p, inc.ref_p);
      if (d <= tol.eta_mem) return s;
      for (const auto& x : sample_fiber(r_map, p, Ball(inc.ref_x, r), grid)) {
        const double phi = checked_objective(prob, x);
        if (is_infinite(phi)) continue;
        const double ratio = std::max(0.0, base - phi) / d;
        if (ratio > s.ratio) {
          s.ratio = ratio;
          s.witness = {p, x};
        }
      }
      return s;
    });
    const Sample* best = nullptr;
    for (const auto& s : results) {
      if (s.ratio < 0.0) continue;
      ++rung.samples;
      if (!best || s.ratio > best->ratio) best = &s;
    }
    if (best) {
      any_feasible = true;
      rung.scale_value = best->ratio;
      rung.witness = best->witness;
    }
    est.per_rung.push_back(std::move(rung));
  }
  if (!any_feasible) {
    throw Error(ErrorCode::NoPerturbedFeasiblePoints,
                "no feasible point found for any sampled perturbed parameter");
  }
  finalize_estimate(est, ladder, tol);
  return est;
}

double penalty_value(const ParamProblem& prob, double l, PenaltyForm form, const Point& p,
                     const Point& x, const GridSpec& grid) {
  if (!(l > 0.0)) throw Error(ErrorCode::InvalidArgument, "penalty level must be positive");
  const double phi = prob.objective(x);
  if (is_infinite(phi)) return phi;
  const double t = form == PenaltyForm::Data
                       ? displacement(prob.constraint, p, x)
                       : fiber_distance(solution_map(prob.constraint, grid), p, x);
  if (is_infinite(t)) return kInfinity;
  return phi + l * t;
}

ExactnessSamples exactness_samples(const ParamProblem& prob, PenaltyForm form,
                                   double check_radius, const GridSpec& grid) {
  prob.validate();
  if (!(check_radius > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "check_radius must be positive");
  }
  const auto& inc = prob.constraint;
  const SetValuedMap r_map = solution_map(inc, grid);
  ExactnessSamples s;
  s.form = form;
  s.check_radius = check_radius;
  s.base_objective = checked_objective(prob, inc.ref_x);
  s.base_term = penalty_term(prob, r_map, form, inc.ref_p, inc.ref_x);
  double r = check_radius;
  for (int k = 0; k < 10; ++k, r *= 0.5) {
    const auto pts = lattice_in(grid, Ball(inc.ref_x, r), inc.x_region);
    s.points.insert(s.points.end(), pts.begin(), pts.end());
  }
  s.objective.resize(s.points.size());
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    s.objective[i] = checked_objective(prob, s.points[i]);
  }
  s.term = parallel_map<double>(s.points.size(), [&](std::size_t i) {
    if (is_infinite(s.objective[i])) return 0.0;
    return penalty_term(prob, r_map, form, inc.ref_p, s.points[i]);
  });
  return s;
}

PenaltyVerdict exactness_verify(const ExactnessSamples& samples, double l, double tol_exact) {
  if (!(l > 0.0)) throw Error(ErrorCode::InvalidArgument, "penalty level must be positive");
  PenaltyVerdict v;
  v.level = l;
  v.form = samples.form;
  v.check_radius = samples.check_radius;
  v.base_value = samples.base_objective + l * samples.base_term;
  double lowest = kInfinity;
  for (std::size_t i = 0; i < samples.points.size(); ++i) {
    if (is_infinite(samples.objective[i]) || is_infinite(samples.term[i])) continue;
    const double val = samples.objective[i] + l * samples.term[i];
    if (val < lowest) {
      lowest = val;
      if (val < v.base_value - tol_exact) {
        v.exact = false;
        v.witness = samples.points[i];
        v.witness_value = val;
      }
    }
  }
  return v;
}

PenaltyVerdict exactness_verify(const ParamProblem& prob, double l, PenaltyForm form,
                                double check_radius, const GridSpec& grid, double tol_exact) {
  if (!(l > 0.0)) throw Error(ErrorCode::InvalidArgument, "penalty level must be positive");
  return exactness_verify(exactness_samples(prob, form, check_radius, grid), l, tol_exact);
}

double minimal_exact_level(const ExactnessSamples& samples, double tol_exact) {
  double level = 0.0;
  for (std::size_t i = 0; i < samples.points.size(); ++i) {
    if (is_infinite(samples.objective[i]) || is_infinite(samples.term[i])) continue;
    const double need = samples.base_objective - tol_exact - samples.objective[i];
    const double gain = samples.term[i] - samples.base_term;
    if (gain > 0.0) {
      level = std::max(level, need / gain);
    } else if (need > 0.0) {
      return kInfinity;
    }
  }
  return level;
}

namespace {

std::vector<double> probe_levels(double threshold) {
  if (is_infinite(threshold)) return {1.0, 10.0, 100.0};
  if (threshold <= 0.0) return {0.1};
  return {1.2 * threshold, 0.5 * threshold};
}

}  // namespace

ThresholdReport exact_threshold(const ParamProblem& prob, const ThresholdLadders& ladders,
                                const GridSpec& grid, const Tolerances& tol) {
  prob.validate();
  const auto& inc = prob.constraint;
  ThresholdReport rep;
  rep.usreg_r = uniform_hemiregularity_estimate(solution_map(inc, grid), ladders.modulus, grid, tol);
  rep.pcalm = problem_calmness_estimate(prob, ladders.modulus, grid, tol);
  if (rep.usreg_r.finite() && rep.pcalm.finite()) {
    rep.threshold_t31 = rep.usreg_r.limiting_value * rep.pcalm.limiting_value;
  }

  rep.ullsc_f = uniform_lipschitz_lsc_estimate(partial_map(inc), ladders.modulus, grid, tol);
  rep.lsc_clean = lsc_hypothesis_holds(lsc_hypothesis_probes(inc, grid, tol));
  try {
    rep.outer_slope = strict_outer_slope(inc, ladders.eps, ladders.inner, grid, tol);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::EmptyBand) throw;
  }
  if (rep.lsc_clean && rep.ullsc_f.finite() && rep.pcalm.finite() && rep.outer_slope &&
      rep.outer_slope->stable && rep.outer_slope->value > tol.tol_slope) {
    rep.threshold_c41 =
        rep.ullsc_f.limiting_value * rep.pcalm.limiting_value / rep.outer_slope->value;
  }

  rep.check_radius = std::min(prob.local_opt_radius, 0.5);
  const auto geo = exactness_samples(prob, PenaltyForm::Geometric, rep.check_radius, grid);
  const auto data = exactness_samples(prob, PenaltyForm::Data, rep.check_radius, grid);
  rep.minimal_exact_geometric = minimal_exact_level(geo);
  rep.minimal_exact_data = minimal_exact_level(data);
  for (double l : probe_levels(rep.threshold_t31)) {
    rep.verified_levels.push_back({l, PenaltyForm::Geometric, exactness_verify(geo, l).exact});
  }
  for (double l : probe_levels(rep.threshold_c41)) {
    rep.verified_levels.push_back({l, PenaltyForm::Data, exactness_verify(data, l).exact});
  }
  return rep;
}

CalmnessInferenceReport calmness_inference_check(const ParamProblem& prob, double l,
                                                 const RadiusLadder& ladder, const GridSpec& grid,
                                                 const Tolerances& tol) {
  prob.validate();
  CalmnessInferenceReport rep;
  rep.mapping_calm = mapping_calmness_estimate(solution_map(prob.constraint, grid), ladder, grid, tol);
  rep.exact_at_l = exactness_verify(prob, l, PenaltyForm::Geometric,
                                    std::min(prob.local_opt_radius, 0.5), grid)
                       .exact;
  rep.pcalm_direct = problem_calmness_estimate(prob, ladder, grid, tol);
  rep.consistent = !(rep.mapping_calm.finite() && rep.exact_at_l) || rep.pcalm_direct.finite();
  return rep;
}

}  // namespace regmod
