#pragma once

#include <functional>
#include <string>

#include "regmod/closed_set.hpp"
#include "regmod/nearest_zero.hpp"

namespace regmod {

/// (p, x) -> dist(x, Theta(p)), or any nonnegative function vanishing exactly
/// on the graph.
using FiberFn = std::function<double(const Point& p, const Point& x)>;

enum class FiberOracleKind { Analytic, GridBacked };

/// A set-valued mapping Theta : P ⇉ X represented by its fiber distance.
///
/// `residual` vanishes exactly on gph Theta and is what inverse searches
/// scan; it defaults to the fiber distance but may be a cheaper function with
/// the same zero set (for solution mappings, the displacement). All queries
/// are restricted to the declared regions.
struct SetValuedMap {
  std::string name;
  FiberFn fiber;
  FiberFn residual;
  FiberOracleKind kind = FiberOracleKind::Analytic;
  Ball domain_region;
  Ball range_region;
  Point ref_p;
  Point ref_x;
  double eta_mem = kEtaMem;

  double graph_residual(const Point& p, const Point& x) const {
    return residual ? residual(p, x) : fiber(p, x);
  }
  std::size_t domain_dim() const { return domain_region.center.dim(); }
  std::size_t range_dim() const { return range_region.center.dim(); }

  /// Throws InvalidArgument when the reference pair is not in the graph.
  void validate() const;
};

/// dist(x, Theta(p)). Throws OutOfRegion outside the declared regions.
double fiber_distance(const SetValuedMap& map, const Point& p, const Point& x);

/// dist(p, Theta^{-1}(x)) by search over the domain region, with the point of
/// Theta^{-1}(x) realising it.
ZeroHit inverse_search(const SetValuedMap& map, const Point& x, const Point& p,
                       const GridSpec& grid);

/// dist(p, Theta^{-1}(x)); kInfinity when no solution lies in the domain region.
double inverse_distance(const SetValuedMap& map, const Point& x, const Point& p,
                        const GridSpec& grid);

/// Theta^{-1} : X ⇉ P as a mapping in its own right. Its fiber distance is the
/// inverse search of the parent; its residual is the parent residual with the
/// arguments swapped, so the inverse of the inverse reproduces the parent graph.
SetValuedMap inverse_view(const SetValuedMap& map, const GridSpec& grid);

}  // namespace regmod
