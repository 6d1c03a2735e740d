#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>

namespace regmod {

/// Largest space dimension supported by the toolkit. Points are stored inline
/// so grid sweeps never allocate per evaluation.
inline constexpr std::size_t kMaxDim = 4;

/// Extended-real +infinity. Distances to empty sets and divergent moduli carry
/// exactly this value; it is never replaced by a large finite number.
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

inline bool is_infinite(double v) noexcept { return v == kInfinity; }

/// A point of a finite-dimensional Euclidean space (1 <= dim <= kMaxDim) with
/// finite coordinates.
class Point {
 public:
  Point() = default;
  explicit Point(std::size_t dim, double fill = 0.0);
  Point(std::initializer_list<double> coords);
  explicit Point(std::span<const double> coords);

  std::size_t dim() const noexcept { return dim_; }
  bool empty() const noexcept { return dim_ == 0; }

  double operator[](std::size_t i) const noexcept { return c_[i]; }
  double& operator[](std::size_t i) noexcept { return c_[i]; }

  std::span<const double> coords() const noexcept { return {c_.data(), dim_}; }

  Point& operator+=(const Point& o);
  Point& operator-=(const Point& o);
  Point& operator*=(double s) noexcept;

  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator*(Point a, double s) noexcept { return a *= s; }
  friend Point operator*(double s, Point a) noexcept { return a *= s; }

  friend bool operator==(const Point& a, const Point& b) noexcept;

  std::string to_string() const;

 private:
  std::array<double, kMaxDim> c_{};
  std::uint8_t dim_ = 0;
};

/// Euclidean distance. Throws DimensionMismatch on differing dimensions.
double distance(const Point& a, const Point& b);
double norm(const Point& a) noexcept;

/// Distance on P x X: the max of the component distances.
double product_distance(const Point& p1, const Point& x1, const Point& p2, const Point& x2);

void require_same_dim(const Point& a, const Point& b, const char* what);

}  // namespace regmod
