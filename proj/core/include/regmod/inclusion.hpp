#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "regmod/set_valued.hpp"

namespace regmod {

/// (p, x, y) -> dist(y, F(p, x)).
using SetDistanceFn = std::function<double(const Point& p, const Point& x, const Point& y)>;

/// The parameterized inclusion omega ∈ F(p, x) with F : P x X ⇉ Y.
///
/// Its displacement dist(omega, F(p, x)) measures how far x is from solving the
/// perturbed problem; the solution mapping R(p) is its zero set in x.
struct ParamInclusion {
  std::string name;
  SetDistanceFn set_distance;
  Point omega;
  Ball p_region;
  Ball x_region;
  Ball y_region;
  Point ref_p;
  Point ref_x;
  double eta_mem = kEtaMem;

  /// Throws InvalidArgument unless the reference pair solves the inclusion.
  void validate() const;
};

/// dist(omega, F(p, x)). Throws OutOfRegion outside the product region.
double displacement(const ParamInclusion& inc, const Point& p, const Point& x);

/// Unchecked displacement for inner loops that already restrict to regions.
inline double displacement_unchecked(const ParamInclusion& inc, const Point& p, const Point& x) {
  return inc.set_distance(p, x, inc.omega);
}

/// R(p) = {x : displacement(p, x) = 0}. The fiber distance is computed by
/// search over the x region (grid backed); the residual is the displacement.
SetValuedMap solution_map(const ParamInclusion& inc, const GridSpec& grid);

/// x ⇉ F(p_ref, x) as a mapping X ⇉ Y with reference pair (x_ref, omega).
SetValuedMap partial_map(const ParamInclusion& inc);

struct LscProbeReport {
  std::vector<double> radii;
  std::vector<double> min_over_ball;
  std::vector<Point> argmin;
  double value_at_center = 0.0;
  std::optional<Point> violation;  ///< parameter witnessing the drop, if any
};

/// Probes lower semicontinuity of p -> displacement(p, x) at p_hat: the ball
/// minima must not stay below the centre value as the radius shrinks.
/// Sampled evidence only.
LscProbeReport lsc_probe(const ParamInclusion& inc, const Point& x, const Point& p_hat,
                         const RadiusLadder& ladder, const GridSpec& grid,
                         double tol_lsc = 1e-6);

}  // namespace regmod
