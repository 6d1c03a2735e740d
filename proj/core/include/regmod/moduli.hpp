#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "regmod/set_valued.hpp"

namespace regmod {

/// Numerical tolerances shared by every estimator.
struct Tolerances {
  double eta_mem = kEtaMem;  ///< ratio denominators at or below this are 0/0 and skipped
  double tol_conv = 0.05;    ///< relative agreement of the last two rungs
  double cap_value = 1e6;    ///< blow-up cap for divergence
  double tol_cert = 0.10;    ///< slack when comparing stacked estimates
  double tol_lsc = 1e-6;
  double tol_slope = 1e-3;   ///< outer slopes at or below this count as zero
};

enum class Verdict { Finite, Divergent, Inconclusive };

std::string_view to_string(Verdict v);

struct RungRecord {
  double radius = 0.0;
  /// Supremum over every sample taken inside this rung's ball, including
  /// those of the finer rungs; nonincreasing along the ladder.
  double supremum_value = 0.0;
  /// Supremum over this rung's own lattice only. Tracks the ratio at scale
  /// `radius` and drives the verdict.
  double scale_value = 0.0;
  std::vector<Point> witness;
  std::size_t samples = 0;
};

/// Result of a ladder estimation of a local modulus.
struct ModulusEstimate {
  std::string quantity;
  std::vector<RungRecord> per_rung;
  double limiting_value = 0.0;
  Verdict verdict = Verdict::Inconclusive;
  bool boundary_contaminated = false;

  bool finite() const { return verdict == Verdict::Finite; }
};

/// Fills supremum_value from scale_value and classifies the ladder:
///  - any +inf rung, or the last three rungs growing by more than tol_conv
///    each (or sitting above cap_value and increasing): Divergent, +inf;
///  - last two rungs within tol_conv: Finite, limit = smallest-rung supremum;
///  - last three rungs decaying at least like radius^(1/2): Finite, limit 0;
///  - otherwise Inconclusive with the smallest-rung supremum as the limit.
void finalize_estimate(ModulusEstimate& est, const RadiusLadder& ladder, const Tolerances& tol);

/// sup over x in B(x_ref, r) \ {x_ref} of dist(p_ref, Theta^{-1}(x)) / d(x, x_ref).
ModulusEstimate hemiregularity_estimate(const SetValuedMap& map, const RadiusLadder& ladder,
                                        const GridSpec& grid, const Tolerances& tol = {});

/// sup over x in B(x_ref, delta) with x ∉ Theta(p_ref) of
/// dist(p_ref, Theta^{-1}(x)) / dist(x, Theta(p_ref)).
ModulusEstimate uniform_hemiregularity_estimate(const SetValuedMap& map,
                                                const RadiusLadder& ladder, const GridSpec& grid,
                                                const Tolerances& tol = {});

/// For Phi : X ⇉ P with reference pair (x_ref, p_ref): sup over x in
/// B(x_ref, delta) of dist(p_ref, Phi(x)) / dist(x, Phi^{-1}(p_ref)).
ModulusEstimate uniform_lipschitz_lsc_estimate(const SetValuedMap& phi,
                                               const RadiusLadder& ladder, const GridSpec& grid,
                                               const Tolerances& tol = {});

enum class RegularityForm {
  Local,         ///< x ranges over B(x_ref, r)
  UniformFiber,  ///< x ranges over the r-enlargement of Theta(p_ref) in the range region
};

struct RegularityWitness {
  Point p;
  Point x;
  double inverse_dist = 0.0;     ///< dist(p, Theta^{-1}(x))
  double kappa_fiber_dist = 0.0; ///< kappa * dist(x, Theta(p))
  double radius = 0.0;
};

/// Searches a pair violating dist(p, Theta^{-1}(x)) <= kappa dist(x, Theta(p))
/// by more than tol_conv. Rungs are scanned from the smallest radius up; the
/// first violation found is returned.
std::optional<RegularityWitness> metric_regularity_witness_search(
    const SetValuedMap& map, double kappa, const RadiusLadder& ladder, const GridSpec& grid,
    RegularityForm form = RegularityForm::Local, const Tolerances& tol = {});

struct ConvexProcessNorm {
  double value = 0.0;
  Point witness;
};

/// sup over x in the unit ball of X of dist(0, Theta^{-1}(x)). The mapping is
/// assumed to be a closed convex process; this is not checked.
ConvexProcessNorm convex_process_norm(const SetValuedMap& map, const GridSpec& grid);

struct OpennessReport {
  bool holds = true;
  std::optional<Point> violating_x;
  double violating_r = 0.0;
  std::vector<double> radii;
  std::size_t checked = 0;
};

/// Checks Theta(B(p_ref, r)) ⊇ B(Theta(p_ref) ∩ B(x_ref, delta_tilde), a r)
/// for sampled r in (0, delta_tilde).
OpennessReport openness_check(const SetValuedMap& map, double a, double delta_tilde,
                              const GridSpec& grid, const Tolerances& tol = {});

/// sup over p in B(p_ref, r) \ {p_ref} and x in Theta(p) ∩ B(x_ref, r) of
/// dist(x, Theta(p_ref)) / d(p, p_ref).
ModulusEstimate mapping_calmness_estimate(const SetValuedMap& map, const RadiusLadder& ladder,
                                          const GridSpec& grid, const Tolerances& tol = {});

/// Points of Theta(p) ∩ ball: lattice members plus projections onto the fiber
/// of lattice points lying within one lattice step of it.
std::vector<Point> sample_fiber(const SetValuedMap& map, const Point& p, const Ball& ball,
                                const GridSpec& grid);

/// Grid tolerance attached to an estimate when comparing two of them.
double grid_tolerance(const ModulusEstimate& est, const GridSpec& grid, const Tolerances& tol);

}  // namespace regmod
