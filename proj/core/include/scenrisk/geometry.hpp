#ifndef SCENRISK_GEOMETRY_HPP
#define SCENRISK_GEOMETRY_HPP

#include <cmath>
#include <cstddef>
#include <vector>

namespace scenrisk {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double x_, double y_) : x(x_), y(y_) {}

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2& operator+=(const Vec2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  bool operator==(const Vec2& o) const = default;

  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  double norm() const { return std::hypot(x, y); }
  double norm_sq() const { return x * x + y * y; }
};

inline Vec2 unit_from_heading(double heading) {
  return {std::cos(heading), std::sin(heading)};
}

/// Normalize an angle into (-pi, pi]; idempotent, maps theta + 2*pi to theta.
inline double normalize_heading(double theta) {
  constexpr double pi = 3.141592653589793238462643383279502884;
  double r = std::remainder(theta, 2.0 * pi);
  if (r <= -pi) r += 2.0 * pi;
  return r;
}

/// Oriented rectangle footprint: center, heading of the long axis, half sizes.
struct Footprint {
  Vec2 center;
  double heading = 0.0;
  double half_length = 0.0;
  double half_width = 0.0;
};

/// Separating-axis overlap test for two oriented rectangles.
/// Touching boundaries count as overlap (separation must be strict).
bool rectangles_overlap(const Footprint& a, const Footprint& b);

/// Piecewise-linear curve with precomputed cumulative arc length.
class Polyline {
 public:
  Polyline() = default;
  explicit Polyline(std::vector<Vec2> points);

  const std::vector<Vec2>& points() const { return points_; }
  double length() const { return cum_.empty() ? 0.0 : cum_.back(); }
  bool empty() const { return points_.size() < 2; }

  /// Point at arc position s, clamped to [0, length].
  Vec2 point_at(double s) const;
  /// Tangent heading (radians) at arc position s, clamped.
  double heading_at(double s) const;
  /// Unit normal (tangent rotated +90 degrees) at arc position s.
  Vec2 normal_at(double s) const;

  struct Projection {
    double s = 0.0;         // arc position of the closest point
    double distance = 0.0;  // unsigned lateral distance
  };
  /// Closest-point projection of p onto the curve.
  Projection project(const Vec2& p) const;

 private:
  std::vector<Vec2> points_;
  std::vector<double> cum_;  // cum_[i] = arc length up to points_[i]
  std::size_t segment_index(double s) const;
};

}  // namespace scenrisk

#endif  // SCENRISK_GEOMETRY_HPP
