#include "regmod/point.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "regmod/error.hpp"

namespace regmod {

namespace {

void check_dim(std::size_t dim) {
  if (dim == 0 || dim > kMaxDim) {
    throw Error(ErrorCode::DimensionMismatch,
                "point dimension " + std::to_string(dim) + " outside [1, " +
                    std::to_string(kMaxDim) + "]");
  }
}

void check_finite(double v) {
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::NonFiniteCoordinate, "point coordinates must be finite");
  }
}

}  // namespace

Point::Point(std::size_t dim, double fill) : dim_(static_cast<std::uint8_t>(dim)) {
  check_dim(dim);
  check_finite(fill);
  std::fill_n(c_.begin(), dim, fill);
}

Point::Point(std::initializer_list<double> coords) : Point(std::span<const double>(coords.begin(), coords.size())) {}

Point::Point(std::span<const double> coords) : dim_(static_cast<std::uint8_t>(coords.size())) {
  check_dim(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    check_finite(coords[i]);
    c_[i] = coords[i];
  }
}

Point& Point::operator+=(const Point& o) {
  require_same_dim(*this, o, "addition");
  for (std::size_t i = 0; i < dim_; ++i) c_[i] += o.c_[i];
  return *this;
}

Point& Point::operator-=(const Point& o) {
  require_same_dim(*this, o, "subtraction");
  for (std::size_t i = 0; i < dim_; ++i) c_[i] -= o.c_[i];
  return *this;
}

Point& Point::operator*=(double s) noexcept {
  for (std::size_t i = 0; i < dim_; ++i) c_[i] *= s;
  return *this;
}

bool operator==(const Point& a, const Point& b) noexcept {
  if (a.dim_ != b.dim_) return false;
  for (std::size_t i = 0; i < a.dim_; ++i) {
    if (a.c_[i] != b.c_[i]) return false;
  }
  return true;
}

std::string Point::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << '(';
  for (std::size_t i = 0; i < dim_; ++i) {
    if (i) os << ", ";
    os << c_[i];
  }
  os << ')';
  return os.str();
}

void require_same_dim(const Point& a, const Point& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": dimensions " + std::to_string(a.dim()) + " and " +
                    std::to_string(b.dim()));
  }
}

double distance(const Point& a, const Point& b) {
  require_same_dim(a, b, "distance");
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

double norm(const Point& a) noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * a[i];
  return std::sqrt(s);
}

double product_distance(const Point& p1, const Point& x1, const Point& p2, const Point& x2) {
  return std::max(distance(p1, p2), distance(x1, x2));
}

}  // namespace regmod
