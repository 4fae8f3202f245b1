#include "scenrisk/geometry.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace scenrisk {

bool rectangles_overlap(const Footprint& a, const Footprint& b) {
  const Vec2 axes[4] = {
      unit_from_heading(a.heading),
      {-std::sin(a.heading), std::cos(a.heading)},
      unit_from_heading(b.heading),
      {-std::sin(b.heading), std::cos(b.heading)},
  };
  const Vec2 a_dir = axes[0];
  const Vec2 a_nrm = axes[1];
  const Vec2 b_dir = axes[2];
  const Vec2 b_nrm = axes[3];
  const Vec2 d = b.center - a.center;
  for (const Vec2& axis : axes) {
    const double ra = a.half_length * std::abs(axis.dot(a_dir)) +
                      a.half_width * std::abs(axis.dot(a_nrm));
    const double rb = b.half_length * std::abs(axis.dot(b_dir)) +
                      b.half_width * std::abs(axis.dot(b_nrm));
    if (std::abs(axis.dot(d)) > ra + rb) return false;  // strict gap separates
  }
  return true;
}

Polyline::Polyline(std::vector<Vec2> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw std::invalid_argument("Polyline: need >= 2 points");
  cum_.resize(points_.size());
  cum_[0] = 0.0;
  for (std::size_t i = 1; i < points_.size(); ++i) {
    cum_[i] = cum_[i - 1] + (points_[i] - points_[i - 1]).norm();
  }
}

std::size_t Polyline::segment_index(double s) const {
  // Index i of the segment [points_[i], points_[i+1]] containing arc s.
  auto it = std::upper_bound(cum_.begin(), cum_.end(), s);
  std::size_t i = static_cast<std::size_t>(it - cum_.begin());
  if (i == 0) return 0;
  if (i >= cum_.size()) return cum_.size() - 2;
  return i - 1;
}

Vec2 Polyline::point_at(double s) const {
  s = std::clamp(s, 0.0, length());
  const std::size_t i = segment_index(s);
  const double seg_len = cum_[i + 1] - cum_[i];
  const double t = seg_len > 0.0 ? (s - cum_[i]) / seg_len : 0.0;
  const Vec2 d = points_[i + 1] - points_[i];
  return points_[i] + d * t;
}

double Polyline::heading_at(double s) const {
  s = std::clamp(s, 0.0, length());
  std::size_t i = segment_index(s);
  // Skip zero-length segments so the tangent is always defined.
  while ((points_[i + 1] - points_[i]).norm_sq() == 0.0 && i + 2 < points_.size()) ++i;
  const Vec2 d = points_[i + 1] - points_[i];
  return std::atan2(d.y, d.x);
}

Vec2 Polyline::normal_at(double s) const {
  const double h = heading_at(s);
  return {-std::sin(h), std::cos(h)};
}

Polyline::Projection Polyline::project(const Vec2& p) const {
  Projection best;
  double best_d2 = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
    const Vec2 a = points_[i];
    const Vec2 d = points_[i + 1] - a;
    const double len2 = d.norm_sq();
    double t = len2 > 0.0 ? std::clamp((p - a).dot(d) / len2, 0.0, 1.0) : 0.0;
    const Vec2 q = a + d * t;
    const double d2 = (p - q).norm_sq();
    if (d2 < best_d2) {
      best_d2 = d2;
      best.s = cum_[i] + std::sqrt(len2) * t;
      best.distance = std::sqrt(d2);
    }
  }
  return best;
}

}  // namespace scenrisk
