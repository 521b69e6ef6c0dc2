#include "spdeblend/interface_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spdeblend {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

// Segment of a polyline containing x (clamped to the ends).
std::pair<std::size_t, std::size_t> segment_of(const PolylineInterface& p, double x) {
  const auto& v = p.vertices;
  if (x <= v.front().first) return {0, 1};
  if (x >= v.back().first) return {v.size() - 2, v.size() - 1};
  std::size_t hi = 1;
  while (v[hi].first < x) ++hi;
  return {hi - 1, hi};
}

}  // namespace

void validate(const Interface& interface) {
  if (const auto* s = std::get_if<SineInterface>(&interface)) {
    if (!(s->period > 0.0)) throw std::invalid_argument("SineInterface: period must be positive");
  } else if (const auto* p = std::get_if<PolylineInterface>(&interface)) {
    if (p->vertices.size() < 2)
      throw std::invalid_argument("PolylineInterface: need at least 2 vertices");
    for (std::size_t k = 1; k < p->vertices.size(); ++k)
      if (!(p->vertices[k].first > p->vertices[k - 1].first))
        throw std::invalid_argument("PolylineInterface: vertices must be strictly increasing in x");
  }
}

double interface_height(const Interface& interface, double x) {
  if (const auto* f = std::get_if<FlatInterface>(&interface)) return f->depth;
  if (const auto* s = std::get_if<SineInterface>(&interface))
    return s->baseline + s->amplitude * std::sin(kTwoPi * x / s->period + s->phase);
  const auto& p = std::get<PolylineInterface>(interface);
  auto [a, b] = segment_of(p, x);
  const auto& [xa, ya] = p.vertices[a];
  const auto& [xb, yb] = p.vertices[b];
  const double t = std::clamp((x - xa) / (xb - xa), 0.0, 1.0);
  return ya + t * (yb - ya);
}

double interface_slope(const Interface& interface, double x) {
  if (std::holds_alternative<FlatInterface>(interface)) return 0.0;
  if (const auto* s = std::get_if<SineInterface>(&interface))
    return s->amplitude * kTwoPi / s->period * std::cos(kTwoPi * x / s->period + s->phase);
  const auto& p = std::get<PolylineInterface>(interface);
  auto [a, b] = segment_of(p, x);
  const auto& [xa, ya] = p.vertices[a];
  const auto& [xb, yb] = p.vertices[b];
  return (yb - ya) / (xb - xa);
}

double signed_distance(double x, double y, const Interface& interface) {
  return y - interface_height(interface, x);
}

double blend_parameter(double dist, double range) {
  if (range < 0.0) throw std::invalid_argument("blend_parameter: range must be nonnegative");
  if (range == 0.0) {
    if (dist < 0.0) return 0.0;
    if (dist > 0.0) return 1.0;
    return 0.5;
  }
  return std::clamp(0.5 + dist / range, 0.0, 1.0);
}

}  // namespace spdeblend
