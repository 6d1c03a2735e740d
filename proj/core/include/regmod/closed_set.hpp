#pragma once

#include <functional>

#include "regmod/grid.hpp"

namespace regmod {

/// Default membership tolerance for analytic oracles.
inline constexpr double kEtaMem = 1e-9;

/// A closed set given by a membership test (with tolerance) and, optionally,
/// an analytic distance function. `search_region` bounds every point of the
/// set that matters to a query.
struct ClosedSetOracle {
  std::function<bool(const Point& q, double tol)> membership;
  std::function<double(const Point& q)> distance;  // may be empty
  Ball search_region;
  double eta_mem = kEtaMem;

  bool has_distance() const { return static_cast<bool>(distance); }
};

/// dist(q, S). Uses the analytic distance when present, otherwise the minimum
/// of d(q, g) over grid members g (membership tolerance: half a grid step).
/// Returns kInfinity when no grid point is a member.
double distance_to_set(const Point& q, const ClosedSetOracle& set, const GridSpec& grid);

/// q lies in the closed r-enlargement of S.
bool enlargement_contains(const Point& q, const ClosedSetOracle& set, double r,
                          const GridSpec& grid);

/// Nearest grid member to q; q itself when q is already a member.
/// Throws EmptySetInRegion when the grid holds no member.
Point project_onto_set(const Point& q, const ClosedSetOracle& set, const GridSpec& grid);

}  // namespace regmod
