#include "regmod/inclusion.hpp"

#include "regmod/error.hpp"

namespace regmod {

void ParamInclusion::validate() const {
  if (!set_distance) throw Error(ErrorCode::InvalidArgument, name + ": missing set distance");
  require_same_dim(ref_p, p_region.center, "reference parameter");
  require_same_dim(ref_x, x_region.center, "reference solution");
  require_same_dim(omega, y_region.center, "omega");
  if (!(displacement_unchecked(*this, ref_p, ref_x) <= eta_mem)) {
    throw Error(ErrorCode::InvalidArgument, name + ": reference pair does not solve the inclusion");
  }
}

double displacement(const ParamInclusion& inc, const Point& p, const Point& x) {
  require_same_dim(p, inc.p_region.center, "displacement parameter");
  require_same_dim(x, inc.x_region.center, "displacement point");
  if (!inc.p_region.contains(p, 1e-9) || !inc.x_region.contains(x, 1e-9)) {
    throw Error(ErrorCode::OutOfRegion, inc.name + ": (" + p.to_string() + ", " +
                                            x.to_string() + ") outside the product region");
  }
  return displacement_unchecked(inc, p, x);
}

SetValuedMap solution_map(const ParamInclusion& inc, const GridSpec& grid) {
  SetValuedMap r;
  r.name = "R[" + inc.name + "]";
  r.kind = FiberOracleKind::GridBacked;
  r.domain_region = inc.p_region;
  r.range_region = inc.x_region;
  r.ref_p = inc.ref_p;
  r.ref_x = inc.ref_x;
  r.eta_mem = inc.eta_mem;
  const auto opts = ZeroSearchOptions::from_grid(grid);
  r.fiber = [inc, opts](const Point& p, const Point& x) {
    return nearest_zero([&](const Point& q) { return displacement_unchecked(inc, p, q); }, x,
                        inc.x_region, opts)
        .distance;
  };
  r.residual = [inc](const Point& p, const Point& x) { return displacement_unchecked(inc, p, x); };
  return r;
}

SetValuedMap partial_map(const ParamInclusion& inc) {
  SetValuedMap f;
  f.name = inc.name + "(p_ref, .)";
  f.kind = FiberOracleKind::Analytic;
  f.domain_region = inc.x_region;
  f.range_region = inc.y_region;
  f.ref_p = inc.ref_x;
  f.ref_x = inc.omega;
  f.eta_mem = inc.eta_mem;
  f.fiber = [inc](const Point& x, const Point& y) { return inc.set_distance(inc.ref_p, x, y); };
  return f;
}

namespace {
constexpr double kGapPersistence = 0.95;
}

LscProbeReport lsc_probe(const ParamInclusion& inc, const Point& x, const Point& p_hat,
                         const RadiusLadder& ladder, const GridSpec& grid, double tol_lsc) {
  ladder.validate();
  LscProbeReport rep;
  rep.radii = ladder.radii();
  rep.value_at_center = displacement(inc, p_hat, x);
  for (double r : rep.radii) {
    const auto pts = grid.over(Ball(p_hat, r)).generate();
    double m = kInfinity;
    Point arg = p_hat;
    for (const auto& q : pts) {
      if (!inc.p_region.contains(q)) continue;
      const double v = displacement_unchecked(inc, q, x);
      if (v < m) {
        m = v;
        arg = q;
      }
    }
    rep.min_over_ball.push_back(m);
    rep.argmin.push_back(arg);
  }
  // A continuous displacement closes the gap as the radius shrinks; a jump keeps
  // it. Flag when the gap persists over the last three rungs.
  const std::size_t k = rep.min_over_ball.size();
  auto gap = [&](std::size_t i) { return rep.value_at_center - rep.min_over_ball[i]; };
  bool persists = gap(k - 1) > tol_lsc;
  for (std::size_t i = k - 1; persists && i + 3 > k && i > 0; --i) {
    persists = gap(i) >= kGapPersistence * gap(i - 1);
  }
  if (persists) rep.violation = rep.argmin.back();
  return rep;
}

}  // namespace regmod
