#include "regmod/moduli.hpp"

#include <algorithm>
#include <cmath>

#include "regmod/error.hpp"
#include "regmod/parallel.hpp"

namespace regmod {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Finite: return "finite";
    case Verdict::Divergent: return "divergent";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

namespace {

constexpr double kRegionSlack = 1e-9;

void validate_tolerances(const Tolerances& tol) {
  if (!(tol.eta_mem > 0.0) || !(tol.tol_conv > 0.0) || !(tol.cap_value > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "tolerances must be positive");
  }
}

struct Sample {
  double ratio = -1.0;  // negative: excluded from the supremum
  std::vector<Point> witness;
  bool clipped = false;
};

std::vector<Point> lattice_in(const GridSpec& grid, const Ball& ball, const Ball& region) {
  std::vector<Point> out;
  for (auto& q : grid.over(ball).generate()) {
    if (region.contains(q, kRegionSlack)) out.push_back(q);
  }
  return out;
}

/// Per rung: samples of B(center, r) ∩ region, reduced to the largest ratio,
/// ties going to the lowest index.
template <class Fn>
ModulusEstimate sweep(std::string quantity, const Point& center, const Ball& region,
                      const RadiusLadder& ladder, const GridSpec& grid, const Tolerances& tol,
                      Fn&& fn) {
  ladder.validate();
  validate_tolerances(tol);
  ModulusEstimate est;
  est.quantity = std::move(quantity);
  for (double r : ladder.radii()) {
    RungRecord rung;
    rung.radius = r;
    if (!region.contains_ball(center, r)) est.boundary_contaminated = true;
    const auto pts = lattice_in(grid, Ball(center, r), region);
    const auto results =
        parallel_map<Sample>(pts.size(), [&](std::size_t i) { return fn(pts[i], r); });
    const Sample* best = nullptr;
    for (const auto& s : results) {
      if (s.ratio < 0.0) continue;
      ++rung.samples;
      if (!best || s.ratio > best->ratio) best = &s;
    }
    if (best) {
      rung.scale_value = best->ratio;
      rung.witness = best->witness;
      if (best->clipped) est.boundary_contaminated = true;
    }
    est.per_rung.push_back(std::move(rung));
  }
  finalize_estimate(est, ladder, tol);
  return est;
}

double ratio_of(double num, double den) {
  if (is_infinite(num)) return kInfinity;
  return num / den;
}

}  // namespace

void finalize_estimate(ModulusEstimate& est, const RadiusLadder& ladder, const Tolerances& tol) {
  auto& rungs = est.per_rung;
  if (rungs.empty()) {
    est.verdict = Verdict::Inconclusive;
    est.limiting_value = 0.0;
    return;
  }
  double cum = 0.0;
  for (auto it = rungs.rbegin(); it != rungs.rend(); ++it) {
    cum = std::max(cum, it->scale_value);
    it->supremum_value = cum;
  }
  const double last_cum = rungs.back().supremum_value;
  const auto any_inf = std::any_of(rungs.begin(), rungs.end(),
                                   [](const RungRecord& r) { return is_infinite(r.scale_value); });
  if (any_inf) {
    est.verdict = Verdict::Divergent;
    est.limiting_value = kInfinity;
    return;
  }
  const std::size_t k = rungs.size();
  if (k < 3) {
    est.verdict = Verdict::Inconclusive;
    est.limiting_value = last_cum;
    return;
  }
  const double z = rungs[k - 3].scale_value;
  const double a = rungs[k - 2].scale_value;
  const double b = rungs[k - 1].scale_value;
  const double grow = 1.0 + tol.tol_conv;
  const bool growing = z > 0.0 && a > z * grow && b > a * grow;
  const bool above_cap = z > tol.cap_value && a > z && b > a;
  if (growing || above_cap) {
    est.verdict = Verdict::Divergent;
    est.limiting_value = kInfinity;
    return;
  }
  if (std::abs(b - a) <= tol.tol_conv * std::max(std::abs(a), std::abs(b))) {
    est.verdict = Verdict::Finite;
    est.limiting_value = last_cum;
    return;
  }
  const double decay = std::sqrt(ladder.factor) * (1.0 + 1e-9);
  if (z > 0.0 && a <= z * decay && b <= a * decay) {
    est.verdict = Verdict::Finite;
    est.limiting_value = 0.0;
    return;
  }
  est.verdict = Verdict::Inconclusive;
  est.limiting_value = last_cum;
}

ModulusEstimate hemiregularity_estimate(const SetValuedMap& map, const RadiusLadder& ladder,
                                        const GridSpec& grid, const Tolerances& tol) {
  map.validate();
  return sweep("hemiregularity", map.ref_x, map.range_region, ladder, grid, tol,
               [&](const Point& x, double) {
                 Sample s;
                 const double d = distance(x, map.ref_x);
                 if (d <= tol.eta_mem) return s;
                 const auto hit = inverse_search(map, x, map.ref_p, grid);
                 s.ratio = ratio_of(hit.distance, d);
                 s.witness = {x};
                 if (hit.witness) s.witness.push_back(*hit.witness);
                 s.clipped = hit.clipped;
                 return s;
               });
}

ModulusEstimate uniform_hemiregularity_estimate(const SetValuedMap& map,
                                                const RadiusLadder& ladder, const GridSpec& grid,
                                                const Tolerances& tol) {
  map.validate();
  return sweep("uniform_hemiregularity", map.ref_x, map.range_region, ladder, grid, tol,
               [&](const Point& x, double) {
                 Sample s;
                 const double den = fiber_distance(map, map.ref_p, x);
                 if (den <= tol.eta_mem || is_infinite(den)) return s;
                 const auto hit = inverse_search(map, x, map.ref_p, grid);
                 s.ratio = ratio_of(hit.distance, den);
                 s.witness = {x};
                 if (hit.witness) s.witness.push_back(*hit.witness);
                 s.clipped = hit.clipped;
                 return s;
               });
}

ModulusEstimate uniform_lipschitz_lsc_estimate(const SetValuedMap& phi,
                                               const RadiusLadder& ladder, const GridSpec& grid,
                                               const Tolerances& tol) {
  phi.validate();
  return sweep("uniform_lipschitz_lsc", phi.ref_p, phi.domain_region, ladder, grid, tol,
               [&](const Point& x, double) {
                 Sample s;
                 const auto back = inverse_search(phi, phi.ref_x, x, grid);
                 if (back.distance <= tol.eta_mem || is_infinite(back.distance)) return s;
                 const double num = fiber_distance(phi, x, phi.ref_x);
                 s.ratio = ratio_of(num, back.distance);
                 s.witness = {x};
                 if (back.witness) s.witness.push_back(*back.witness);
                 s.clipped = back.clipped || is_infinite(num);
                 return s;
               });
}

std::optional<RegularityWitness> metric_regularity_witness_search(
    const SetValuedMap& map, double kappa, const RadiusLadder& ladder, const GridSpec& grid,
    RegularityForm form, const Tolerances& tol) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw Error(ErrorCode::InvalidArgument, "kappa must be positive and finite");
  }
  ladder.validate();
  validate_tolerances(tol);
  map.validate();
  const int odd = std::min(grid.density, 16) | 1;
  const GridSpec local = grid.with_density(odd);
  const auto opts = ZeroSearchOptions::from_grid(grid);

  std::vector<Point> uniform_xs;
  if (form == RegularityForm::UniformFiber) {
    uniform_xs = lattice_in(grid.with_density(std::min(grid.density, 32) | 1), map.range_region,
                            map.range_region);
  }

  auto radii = ladder.radii();
  std::reverse(radii.begin(), radii.end());
  for (double r : radii) {
    const auto ps = lattice_in(local, Ball(map.ref_p, r), map.domain_region);
    std::vector<Point> xs;
    if (form == RegularityForm::Local) {
      xs = lattice_in(local, Ball(map.ref_x, r), map.range_region);
    } else {
      for (const auto& x : uniform_xs) {
        if (fiber_distance(map, map.ref_p, x) <= r) xs.push_back(x);
      }
    }
    auto found = parallel_map<std::optional<RegularityWitness>>(
        ps.size(), [&](std::size_t i) -> std::optional<RegularityWitness> {
          const Point& p = ps[i];
          for (const auto& x : xs) {
            const double f = map.fiber(p, x);
            if (f <= tol.eta_mem) continue;
            const double target = kappa * f * (1.0 + tol.tol_conv);
            if (!map.domain_region.contains_ball(p, target)) continue;
            const Residual res = [&](const Point& q) { return map.graph_residual(q, x); };
            if (find_zero_in_ball(res, Ball(p, target), map.domain_region, opts)) continue;
            const auto hit = inverse_search(map, x, p, grid);
            if (hit.distance > target) {
              return RegularityWitness{p, x, hit.distance, kappa * f, r};
            }
          }
          return std::nullopt;
        });
    for (auto& w : found) {
      if (w) return w;
    }
  }
  return std::nullopt;
}

ConvexProcessNorm convex_process_norm(const SetValuedMap& map, const GridSpec& grid) {
  const Point origin_x(map.range_dim(), 0.0);
  const Point origin_p(map.domain_dim(), 0.0);
  const auto xs = lattice_in(grid, Ball(origin_x, 1.0), map.range_region);
  if (xs.empty()) throw Error(ErrorCode::EmptyGrid, "unit ball misses the range region");
  const auto vals = parallel_map<double>(
      xs.size(), [&](std::size_t i) { return inverse_distance(map, xs[i], origin_p, grid); });
  ConvexProcessNorm out{0.0, xs.front()};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (vals[i] > out.value) {
      out.value = vals[i];
      out.witness = xs[i];
    }
  }
  return out;
}

OpennessReport openness_check(const SetValuedMap& map, double a, double delta_tilde,
                              const GridSpec& grid, const Tolerances& tol) {
  if (!(a > 0.0) || !(delta_tilde > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "a and delta_tilde must be positive");
  }
  validate_tolerances(tol);
  map.validate();
  const auto opts = ZeroSearchOptions::from_grid(grid);
  OpennessReport rep;
  for (int j = 0; j < 8; ++j) {
    const double r = 0.9 * delta_tilde * std::pow(0.5, j);
    rep.radii.push_back(r);
    const double ar = a * r;
    const double outer = delta_tilde - ar;
    if (outer <= 0.0) continue;
    std::vector<Point> xs = lattice_in(grid, Ball(map.ref_x, outer), map.range_region);
    const auto inner = lattice_in(grid, Ball(map.ref_x, std::min(ar, outer)), map.range_region);
    xs.insert(xs.end(), inner.begin(), inner.end());
    std::vector<Point> kept;
    for (auto& x : xs) {
      if (fiber_distance(map, map.ref_p, x) <= ar) kept.push_back(x);
    }
    rep.checked += kept.size();
    const double reach = r * (1.0 + tol.tol_conv);
    const auto ok = parallel_map<char>(kept.size(), [&](std::size_t i) -> char {
      const Point& x = kept[i];
      const Residual res = [&](const Point& q) { return map.graph_residual(q, x); };
      if (find_zero_in_ball(res, Ball(map.ref_p, reach), map.domain_region, opts)) return 1;
      return inverse_search(map, x, map.ref_p, grid).distance <= reach ? 1 : 0;
    });
    for (std::size_t i = 0; i < kept.size(); ++i) {
      if (!ok[i]) {
        rep.holds = false;
        rep.violating_x = kept[i];
        rep.violating_r = r;
        return rep;
      }
    }
  }
  return rep;
}

std::vector<Point> sample_fiber(const SetValuedMap& map, const Point& p, const Ball& ball,
                                const GridSpec& grid) {
  const double h = grid.over(ball).step();
  auto opts = ZeroSearchOptions::from_grid(grid);
  opts.density = std::min(opts.density, 8);
  std::vector<Point> out;
  for (const auto& q : lattice_in(grid, ball, map.range_region)) {
    if (map.graph_residual(p, q) <= kZeroTol) {
      out.push_back(q);
      continue;
    }
    if (map.kind == FiberOracleKind::Analytic && map.fiber(p, q) > h) continue;
    const Residual res = [&](const Point& y) { return map.graph_residual(p, y); };
    const auto hit = nearest_zero(res, q, Ball(q, h), opts);
    if (hit.witness && ball.contains(*hit.witness, kRegionSlack) &&
        map.range_region.contains(*hit.witness, kRegionSlack)) {
      out.push_back(*hit.witness);
    }
  }
  return out;
}

ModulusEstimate mapping_calmness_estimate(const SetValuedMap& map, const RadiusLadder& ladder,
                                          const GridSpec& grid, const Tolerances& tol) {
  map.validate();
  return sweep("mapping_calmness", map.ref_p, map.domain_region, ladder, grid, tol,
               [&](const Point& p, double r) {
                 Sample s;
                 const double d = distance(p, map.ref_p);
                 if (d <= tol.eta_mem) return s;
                 for (const auto& x : sample_fiber(map, p, Ball(map.ref_x, r), grid)) {
                   const double ratio = ratio_of(fiber_distance(map, map.ref_p, x), d);
                   if (ratio > s.ratio) {
                     s.ratio = ratio;
                     s.witness = {p, x};
                   }
                 }
                 return s;
               });
}

double grid_tolerance(const ModulusEstimate& est, const GridSpec& grid, const Tolerances& tol) {
  if (est.per_rung.empty() || is_infinite(est.limiting_value)) return tol.tol_conv;
  const double spacing = grid.over(Ball(grid.region.center, est.per_rung.back().radius)).step();
  return tol.tol_conv * std::abs(est.limiting_value) + spacing;
}

}  // namespace regmod
