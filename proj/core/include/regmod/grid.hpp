#pragma once

#include <cstdint>
#include <vector>

#include "regmod/point.hpp"

namespace regmod {

/// Closed ball {q : d(q, center) <= radius}.
struct Ball {
  Point center;
  double radius = 0.0;

  Ball() = default;
  Ball(Point c, double r);

  bool contains(const Point& q, double slack = 0.0) const;
  /// True when B(q, r) lies inside this ball.
  bool contains_ball(const Point& q, double r) const;
};

enum class SamplingScheme { UniformLattice, ScrambledLowDiscrepancy };

/// Deterministic sampling of a ball.
///
/// UniformLattice lays density^n points over the bounding box of the region
/// and keeps those inside the ball. ScrambledLowDiscrepancy draws density^n
/// Halton points under a seeded random shift, also filtered to the ball.
struct GridSpec {
  Ball region;
  int density = 64;
  SamplingScheme scheme = SamplingScheme::UniformLattice;
  std::uint64_t seed = 0;

  /// Same density, scheme and seed over another region.
  GridSpec over(const Ball& ball) const;
  GridSpec with_density(int d) const;

  /// Lattice spacing along one axis: 2 r / (density - 1).
  double step() const;

  std::vector<Point> generate() const;
};

/// Default points-per-axis for a space of the given dimension.
int default_density(std::size_t dim);

/// Geometric radius sequence r_k = r0 * factor^k, k = 0 .. rungs-1.
struct RadiusLadder {
  double r0 = 0.5;
  double factor = 0.5;
  int rungs = 8;

  void validate() const;
  std::vector<double> radii() const;
  double smallest() const;
  RadiusLadder scaled_to(double new_r0) const { return {new_r0, factor, rungs}; }
};

}  // namespace regmod
