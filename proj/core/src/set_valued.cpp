#include "regmod/set_valued.hpp"

#include "regmod/error.hpp"

namespace regmod {

void SetValuedMap::validate() const {
  if (!fiber) throw Error(ErrorCode::InvalidArgument, name + ": missing fiber oracle");
  require_same_dim(ref_p, domain_region.center, "reference parameter");
  require_same_dim(ref_x, range_region.center, "reference value");
  if (!(graph_residual(ref_p, ref_x) <= eta_mem)) {
    throw Error(ErrorCode::InvalidArgument, name + ": reference pair is not in the graph");
  }
}

namespace {

void check_regions(const SetValuedMap& map, const Point& p, const Point& x) {
  require_same_dim(p, map.domain_region.center, "fiber_distance parameter");
  require_same_dim(x, map.range_region.center, "fiber_distance value");
  if (!map.domain_region.contains(p, 1e-9)) {
    throw Error(ErrorCode::OutOfRegion, map.name + ": parameter " + p.to_string() +
                                            " outside the domain region");
  }
  if (!map.range_region.contains(x, 1e-9)) {
    throw Error(ErrorCode::OutOfRegion,
                map.name + ": value " + x.to_string() + " outside the range region");
  }
}

}  // namespace

double fiber_distance(const SetValuedMap& map, const Point& p, const Point& x) {
  check_regions(map, p, x);
  return map.fiber(p, x);
}

ZeroHit inverse_search(const SetValuedMap& map, const Point& x, const Point& p,
                       const GridSpec& grid) {
  check_regions(map, p, x);
  const auto opts = ZeroSearchOptions::from_grid(grid);
  return nearest_zero([&](const Point& q) { return map.graph_residual(q, x); }, p,
                      map.domain_region, opts);
}

double inverse_distance(const SetValuedMap& map, const Point& x, const Point& p,
                        const GridSpec& grid) {
  return inverse_search(map, x, p, grid).distance;
}

SetValuedMap inverse_view(const SetValuedMap& map, const GridSpec& grid) {
  SetValuedMap inv;
  inv.name = map.name + "^-1";
  inv.kind = FiberOracleKind::GridBacked;
  inv.domain_region = map.range_region;
  inv.range_region = map.domain_region;
  inv.ref_p = map.ref_x;
  inv.ref_x = map.ref_p;
  inv.eta_mem = map.eta_mem;
  inv.fiber = [map, grid](const Point& x, const Point& p) {
    return inverse_distance(map, x, p, grid);
  };
  inv.residual = [map](const Point& x, const Point& p) { return map.graph_residual(p, x); };
  return inv;
}

}  // namespace regmod
