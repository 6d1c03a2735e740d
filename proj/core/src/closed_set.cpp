#include "regmod/closed_set.hpp"

#include "regmod/error.hpp"

namespace regmod {

namespace {

struct GridMember {
  double dist = kInfinity;
  std::size_t index = 0;
  Point point;
};

GridMember nearest_member(const Point& q, const ClosedSetOracle& set, const GridSpec& grid) {
  const auto pts = grid.generate();
  require_same_dim(q, pts.front(), "distance_to_set");
  const double tol = 0.5 * grid.step();
  GridMember best;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!set.membership(pts[i], tol)) continue;
    const double d = distance(q, pts[i]);
    if (d < best.dist) {
      best = {d, i, pts[i]};
    }
  }
  return best;
}

}  // namespace

double distance_to_set(const Point& q, const ClosedSetOracle& set, const GridSpec& grid) {
  require_same_dim(q, grid.region.center, "distance_to_set");
  if (set.has_distance()) {
    if (grid.density < 2) throw Error(ErrorCode::EmptyGrid, "grid density must be at least 2");
    return set.distance(q);
  }
  return nearest_member(q, set, grid).dist;
}

bool enlargement_contains(const Point& q, const ClosedSetOracle& set, double r,
                          const GridSpec& grid) {
  if (!(r >= 0.0)) throw Error(ErrorCode::InvalidArgument, "enlargement radius must be >= 0");
  const double eta = set.has_distance() ? set.eta_mem : 0.5 * grid.step();
  return distance_to_set(q, set, grid) <= r + eta;
}

Point project_onto_set(const Point& q, const ClosedSetOracle& set, const GridSpec& grid) {
  require_same_dim(q, grid.region.center, "project_onto_set");
  if (set.membership(q, set.eta_mem)) return q;
  auto best = nearest_member(q, set, grid);
  if (is_infinite(best.dist)) {
    throw Error(ErrorCode::EmptySetInRegion, "no grid point of the region belongs to the set");
  }
  return best.point;
}

}  // namespace regmod
