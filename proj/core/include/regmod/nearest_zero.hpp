#pragma once

#include <functional>
#include <optional>

#include "regmod/grid.hpp"

namespace regmod {

/// Nonnegative function whose zero set is the closed set being searched.
using Residual = std::function<double(const Point&)>;

/// Zero tolerance used inside searches. Tighter than kEtaMem so that solution
/// points located at very small radii are not biased by the tolerance itself.
inline constexpr double kZeroTol = 1e-12;

struct ZeroSearchOptions {
  int density = 16;  ///< lattice points per axis for each ball scan
  SamplingScheme scheme = SamplingScheme::UniformLattice;
  std::uint64_t seed = 0;
  double zero_tol = kZeroTol;
  double rel_tol = 1e-3;  ///< final probe covers B(center, (1 - rel_tol) d)
  int refine_starts = 3;
  int refine_budget = 200;  ///< residual evaluations per compass search

  static ZeroSearchOptions from_grid(const GridSpec& grid);
};

struct ZeroHit {
  double distance = kInfinity;  ///< upper bound on the distance to the zero set
  std::optional<Point> witness;  ///< a zero realising `distance`
  bool clipped = false;  ///< search ball left the region (estimate may be biased)
};

/// A zero of `residual` inside ball ∩ region, the one closest to the ball
/// centre among those located; nullopt when none is found. Lattice scan
/// followed by a compass search from the best few lattice points.
std::optional<Point> find_zero_in_ball(const Residual& residual, const Ball& ball,
                                       const Ball& region, const ZeroSearchOptions& opts);

/// Distance from `center` to {q in region : residual(q) <= zero_tol}.
///
/// A zero found by scanning the reachable part of the region is slid along the
/// zero set toward `center`; smaller balls are then probed for a closer
/// component. The returned value is always realised by `witness`. kInfinity
/// when the region holds no zero.
ZeroHit nearest_zero(const Residual& residual, const Point& center, const Ball& region,
                     const ZeroSearchOptions& opts);

}  // namespace regmod
