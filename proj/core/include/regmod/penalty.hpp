#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "regmod/slopes.hpp"

namespace regmod {

/// Objective x -> phi(x), extended valued (may return ±kInfinity).
using Objective = std::function<double(const Point&)>;

/// min phi(x) subject to x ∈ R(p), with R(p) the solution set of the
/// constraint inclusion and R = R(p_ref).
struct ParamProblem {
  std::string name;
  Objective objective;
  ParamInclusion constraint;
  double local_opt_radius = 0.5;

  const Point& ref_p() const { return constraint.ref_p; }
  const Point& ref_x() const { return constraint.ref_x; }
  /// Throws unless the reference point is feasible with finite objective.
  void validate() const;
};

enum class PenaltyForm {
  Geometric,  ///< l dist(x, R(p))
  Data,       ///< l disp(p, x)
};

std::string_view to_string(PenaltyForm f);

struct ParameterizationReport {
  bool condition_i = true;  ///< R(p_ref) is R by construction
  bool condition_ii = false;
  std::vector<double> taus;
  std::vector<std::optional<Point>> witnesses;  ///< p_tau per tau, if found
};

/// Condition (ii): for every sampled tau some p_tau in B(p_ref, tau) \ {p_ref}
/// has R(p_tau) meeting B(x_ref, local_opt_radius).
ParameterizationReport parameterization_validity(const ParamProblem& prob,
                                                 const RadiusLadder& tau_ladder,
                                                 const GridSpec& grid);

/// sup over p in B(p_ref, r) \ {p_ref} and feasible x in R(p) ∩ B(x_ref, r)
/// of (phi(x_ref) - phi(x))^+ / d(p, p_ref).
ModulusEstimate problem_calmness_estimate(const ParamProblem& prob, const RadiusLadder& ladder,
                                          const GridSpec& grid, const Tolerances& tol = {});

/// phi(x) + l * term, term = dist(x, R(p)) or disp(p, x).
double penalty_value(const ParamProblem& prob, double l, PenaltyForm form, const Point& p,
                     const Point& x, const GridSpec& grid);

/// Sampled points of B(x_ref, check_radius) with objective and penalty term
/// at p_ref precomputed, so that many levels can be checked cheaply.
struct ExactnessSamples {
  PenaltyForm form = PenaltyForm::Geometric;
  double check_radius = 0.0;
  double base_objective = 0.0;
  double base_term = 0.0;
  std::vector<Point> points;
  std::vector<double> objective;
  std::vector<double> term;
};

/// Union of lattices over B(x_ref, check_radius * 2^-k), k = 0..9.
ExactnessSamples exactness_samples(const ParamProblem& prob, PenaltyForm form,
                                   double check_radius, const GridSpec& grid);

struct PenaltyVerdict {
  double level = 0.0;
  PenaltyForm form = PenaltyForm::Geometric;
  bool exact = true;
  std::optional<Point> witness;
  double witness_value = 0.0;
  double base_value = 0.0;
  double check_radius = 0.0;
};

PenaltyVerdict exactness_verify(const ExactnessSamples& samples, double l,
                                double tol_exact = kEtaMem);

PenaltyVerdict exactness_verify(const ParamProblem& prob, double l, PenaltyForm form,
                                double check_radius, const GridSpec& grid,
                                double tol_exact = kEtaMem);

/// Smallest l for which exactness holds on the samples; kInfinity when some
/// feasible sample already beats the reference point.
double minimal_exact_level(const ExactnessSamples& samples, double tol_exact = kEtaMem);

struct LevelCheck {
  double level = 0.0;
  PenaltyForm form = PenaltyForm::Geometric;
  bool exact = false;
};

struct ThresholdLadders {
  RadiusLadder modulus;
  RadiusLadder eps;
  RadiusLadder inner;
};

struct ThresholdReport {
  ModulusEstimate usreg_r;
  ModulusEstimate pcalm;
  double threshold_t31 = kInfinity;
  ModulusEstimate ullsc_f;
  std::optional<OuterSlopeEstimate> outer_slope;
  bool lsc_clean = false;
  double threshold_c41 = kInfinity;
  double check_radius = 0.0;
  double minimal_exact_geometric = kInfinity;
  double minimal_exact_data = kInfinity;
  std::vector<LevelCheck> verified_levels;
};

/// Thresholds l > usreg(R) pcalm and l > uLlsc(F) pcalm / outer slope, with
/// exactness checked at 1.2x and 0.5x each finite threshold (at 1, 10, 100
/// when it is infinite).
ThresholdReport exact_threshold(const ParamProblem& prob, const ThresholdLadders& ladders,
                                const GridSpec& grid, const Tolerances& tol = {});

struct CalmnessInferenceReport {
  ModulusEstimate mapping_calm;
  bool exact_at_l = false;
  ModulusEstimate pcalm_direct;
  bool consistent = true;
};

/// (mapping calm and exact at l) implies problem calm, checked on samples.
CalmnessInferenceReport calmness_inference_check(const ParamProblem& prob, double l,
                                                 const RadiusLadder& ladder, const GridSpec& grid,
                                                 const Tolerances& tol = {});

}  // namespace regmod
