#include "regmod/nearest_zero.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "regmod/error.hpp"

namespace regmod {

ZeroSearchOptions ZeroSearchOptions::from_grid(const GridSpec& grid) {
  ZeroSearchOptions o;
  o.density = std::clamp(grid.density / 4, 4, 16);
  o.scheme = grid.scheme;
  o.seed = grid.seed;
  return o;
}

namespace {

bool admissible(const Point& q, const Ball& ball, const Ball& region) {
  return ball.contains(q) && region.contains(q);
}

/// Compass search on the residual, restricted to ball ∩ region.
std::optional<Point> compass_search(const Residual& residual, Point x, double fx, double step,
                                    const Ball& ball, const Ball& region,
                                    const ZeroSearchOptions& opts) {
  const std::size_t n = x.dim();
  const double min_step = 1e-15 * (1.0 + ball.radius + norm(ball.center));
  int evals = 0;
  while (fx > opts.zero_tol && step > min_step && evals < opts.refine_budget) {
    Point best = x;
    double fbest = fx;
    for (std::size_t i = 0; i < n; ++i) {
      for (double sgn : {1.0, -1.0}) {
        Point y = x;
        y[i] += sgn * step;
        if (!admissible(y, ball, region)) continue;
        const double fy = residual(y);
        ++evals;
        if (fy < fbest) {
          fbest = fy;
          best = y;
        }
      }
    }
    if (fbest < fx) {
      x = best;
      fx = fbest;
    } else {
      step *= 0.5;
    }
  }
  if (fx <= opts.zero_tol) return x;
  return std::nullopt;
}

/// Newton steps on the residual, x <- x - r(x) grad r / |grad r|^2, with a
/// central-difference gradient and backtracking. Exact in one step for
/// distance-like and affine residuals.
std::optional<Point> newton_search(const Residual& residual, Point x, double fx, const Ball& ball,
                                   const Ball& region, const ZeroSearchOptions& opts) {
  const std::size_t n = x.dim();
  for (int it = 0; it < 60 && fx > opts.zero_tol; ++it) {
    const double scale = 1.0 + norm(x);
    const double h = std::clamp(0.01 * fx, 1e-15 * scale, 1e-6 * scale);
    Point grad(n, 0.0);
    double g2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      Point a = x, b = x;
      a[i] += h;
      b[i] -= h;
      const double fa = residual(a), fb = residual(b);
      if (!std::isfinite(fa) || !std::isfinite(fb)) return std::nullopt;
      grad[i] = (fa - fb) / (2.0 * h);
      g2 += grad[i] * grad[i];
    }
    if (!(g2 > 0.0)) return std::nullopt;
    bool moved = false;
    double t = fx / g2;
    for (int k = 0; k < 40; ++k, t *= 0.5) {
      Point y = x;
      for (std::size_t i = 0; i < n; ++i) y[i] -= t * grad[i];
      if (!admissible(y, ball, region)) continue;
      const double fy = residual(y);
      if (fy < fx) {
        x = y;
        fx = fy;
        moved = true;
        break;
      }
    }
    if (!moved) return std::nullopt;
  }
  if (fx <= opts.zero_tol) return x;
  return std::nullopt;
}

/// Moves a zero toward `center` along the zero set: step part of the way to the
/// centre, project back with Newton steps, keep the result when it is closer.
Point slide_toward(const Residual& residual, Point z, const Point& center, const Ball& region,
                   const ZeroSearchOptions& opts) {
  double dz = distance(z, center);
  double alpha = 0.5;
  for (int it = 0; it < 80 && alpha > 1e-7 && dz > 0.0; ++it) {
    Point y = z;
    for (std::size_t i = 0; i < z.dim(); ++i) y[i] += alpha * (center[i] - z[i]);
    if (!region.contains(y)) {
      alpha *= 0.5;
      continue;
    }
    const double fy = residual(y);
    std::optional<Point> w;
    if (fy <= opts.zero_tol) {
      w = y;
    } else {
      w = newton_search(residual, y, fy, Ball(center, dz), region, opts);
    }
    const double dw = w ? distance(*w, center) : kInfinity;
    if (dw < dz * (1.0 - 1e-12)) {
      z = *w;
      dz = dw;
      alpha = std::min(0.5, 2.0 * alpha);
    } else {
      alpha *= 0.5;
    }
  }
  return z;
}

}  // namespace

std::optional<Point> find_zero_in_ball(const Residual& residual, const Ball& ball,
                                       const Ball& region, const ZeroSearchOptions& opts) {
  if (ball.radius == 0.0) {
    if (region.contains(ball.center) && residual(ball.center) <= opts.zero_tol) return ball.center;
    return std::nullopt;
  }
  GridSpec g{ball, opts.density, opts.scheme, opts.seed};
  const auto pts = g.generate();

  std::vector<std::size_t> idx;
  std::vector<double> val;
  idx.reserve(pts.size());
  val.reserve(pts.size());
  std::optional<Point> best_zero;
  double best_zero_d = kInfinity;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!region.contains(pts[i])) continue;
    const double f = residual(pts[i]);
    if (f <= opts.zero_tol) {
      const double d = distance(pts[i], ball.center);
      if (d < best_zero_d) {
        best_zero_d = d;
        best_zero = pts[i];
      }
    }
    idx.push_back(i);
    val.push_back(f);
  }
  if (best_zero) return best_zero;
  if (region.contains(ball.center)) {
    const double fc = residual(ball.center);
    if (fc <= opts.zero_tol) return ball.center;
    if (std::isfinite(fc)) {
      if (auto z = newton_search(residual, ball.center, fc, ball, region, opts)) return z;
    }
  }
  if (idx.empty()) return std::nullopt;

  std::vector<std::size_t> order(idx.size());
  std::iota(order.begin(), order.end(), 0);
  const std::size_t starts = std::min<std::size_t>(opts.refine_starts, order.size());
  std::partial_sort(order.begin(), order.begin() + starts, order.end(),
                    [&](std::size_t a, std::size_t b) {
                      return val[a] < val[b] || (val[a] == val[b] && a < b);
                    });
  for (std::size_t s = 0; s < starts; ++s) {
    const std::size_t k = order[s];
    if (!std::isfinite(val[k])) continue;
    auto z = newton_search(residual, pts[idx[k]], val[k], ball, region, opts);
    if (!z) z = compass_search(residual, pts[idx[k]], val[k], g.step(), ball, region, opts);
    if (z) {
      const double d = distance(*z, ball.center);
      if (d < best_zero_d) {
        best_zero_d = d;
        best_zero = z;
      }
    }
  }
  return best_zero;
}

ZeroHit nearest_zero(const Residual& residual, const Point& center, const Ball& region,
                     const ZeroSearchOptions& opts) {
  require_same_dim(center, region.center, "nearest_zero");
  ZeroHit hit;
  if (region.contains(center) && residual(center) <= opts.zero_tol) {
    hit.distance = 0.0;
    hit.witness = center;
    return hit;
  }
  const double reach = distance(center, region.center) + region.radius;
  auto z = find_zero_in_ball(residual, Ball(center, reach), region, opts);
  if (!z) {
    hit.clipped = true;
    return hit;
  }
  z = slide_toward(residual, *z, center, region, opts);
  double hi = distance(center, *z);
  hit.witness = z;
  // a closer component of the zero set would show up in one of these balls
  for (int round = 0; round < 16 && hi > 0.0; ++round) {
    std::optional<Point> closer;
    for (double r : {0.5 * hi, (1.0 - opts.rel_tol) * hi}) {
      closer = find_zero_in_ball(residual, Ball(center, r), region, opts);
      if (closer) break;
    }
    if (!closer) break;
    closer = slide_toward(residual, *closer, center, region, opts);
    const double d = distance(center, *closer);
    if (d >= hi) break;
    hi = d;
    hit.witness = closer;
  }
  hit.distance = hi;
  hit.clipped = !region.contains_ball(center, hi);
  return hit;
}

}  // namespace regmod
