#include "regmod/grid.hpp"

#include <cmath>
#include <random>

#include "regmod/error.hpp"

namespace regmod {

Ball::Ball(Point c, double r) : center(std::move(c)), radius(r) {
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw Error(ErrorCode::InvalidArgument, "ball radius must be finite and nonnegative");
  }
}

bool Ball::contains(const Point& q, double slack) const {
  return distance(q, center) <= radius + slack + 1e-12 * (1.0 + radius);
}

bool Ball::contains_ball(const Point& q, double r) const {
  return distance(q, center) + r <= radius * (1.0 + 1e-12);
}

GridSpec GridSpec::over(const Ball& ball) const {
  GridSpec g = *this;
  g.region = ball;
  return g;
}

GridSpec GridSpec::with_density(int d) const {
  GridSpec g = *this;
  g.density = d;
  return g;
}

double GridSpec::step() const {
  return density > 1 ? 2.0 * region.radius / (density - 1) : 2.0 * region.radius;
}

namespace {

constexpr std::array<unsigned, kMaxDim> kHaltonBases{2, 3, 5, 7};

double radical_inverse(std::uint64_t index, unsigned base) {
  double inv = 1.0 / base;
  double f = inv;
  double r = 0.0;
  while (index > 0) {
    r += f * static_cast<double>(index % base);
    index /= base;
    f *= inv;
  }
  return r;
}

std::size_t total_points(std::size_t n, int density) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::size_t>(density);
  return total;
}

}  // namespace

std::vector<Point> GridSpec::generate() const {
  if (density < 2) {
    throw Error(ErrorCode::EmptyGrid, "grid density must be at least 2");
  }
  const std::size_t n = region.center.dim();
  if (n == 0) {
    throw Error(ErrorCode::DimensionMismatch, "grid region has no dimension");
  }
  if (region.radius == 0.0) return {region.center};

  const std::size_t total = total_points(n, density);
  const double r = region.radius;
  std::vector<Point> out;
  out.reserve(total);

  if (scheme == SamplingScheme::UniformLattice) {
    const double h = 2.0 / (density - 1);
    std::array<int, kMaxDim> idx{};
    for (std::size_t k = 0; k < total; ++k) {
      Point q = region.center;
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double u = -1.0 + h * idx[i];
        q[i] += r * u;
        s += u * u;
      }
      if (s <= 1.0 + 1e-12) out.push_back(q);
      for (std::size_t i = n; i-- > 0;) {
        if (++idx[i] < density) break;
        idx[i] = 0;
      }
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::array<double, kMaxDim> shift{};
    for (std::size_t i = 0; i < n; ++i) shift[i] = unit(rng);
    for (std::size_t k = 0; k < total; ++k) {
      Point q = region.center;
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        double v = radical_inverse(k + 1, kHaltonBases[i]) + shift[i];
        v -= std::floor(v);
        const double u = 2.0 * v - 1.0;
        q[i] += r * u;
        s += u * u;
      }
      if (s <= 1.0) out.push_back(q);
    }
  }
  if (out.empty()) {
    throw Error(ErrorCode::EmptyGrid, "grid produced no points inside the region");
  }
  return out;
}

int default_density(std::size_t dim) { return dim <= 2 ? 64 : 16; }

void RadiusLadder::validate() const {
  if (!(r0 > 0.0) || !std::isfinite(r0)) {
    throw Error(ErrorCode::InvalidArgument, "ladder r0 must be positive");
  }
  if (!(factor > 0.0 && factor < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "ladder factor must lie in (0, 1)");
  }
  if (rungs < 3) {
    throw Error(ErrorCode::InvalidArgument, "ladder needs at least 3 rungs");
  }
}

std::vector<double> RadiusLadder::radii() const {
  validate();
  std::vector<double> r(static_cast<std::size_t>(rungs));
  double v = r0;
  for (auto& x : r) {
    x = v;
    v *= factor;
  }
  return r;
}

double RadiusLadder::smallest() const { return r0 * std::pow(factor, rungs - 1); }

}  // namespace regmod
