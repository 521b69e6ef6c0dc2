#pragma once

#include <variant>
#include <vector>

namespace spdeblend {

/// Horizontal layer interface at constant depth y = depth.
struct FlatInterface {
  double depth = 0.0;
};

/// Interface y(x) = baseline + amplitude * sin(2*pi*x/period + phase).
struct SineInterface {
  double baseline = 0.0;
  double amplitude = 0.0;
  double period = 1.0;
  double phase = 0.0;
};

/// Piecewise-linear interface; vertices must be strictly increasing in x.
/// Evaluation clamps x to the vertex range.
struct PolylineInterface {
  std::vector<std::pair<double, double>> vertices;  // (x, y)
};

using Interface = std::variant<FlatInterface, SineInterface, PolylineInterface>;

/// Depth of the interface curve at horizontal position x.
double interface_height(const Interface& interface, double x);

/// Slope dy/dx of the interface at x (analytic for Sine, segment slope for
/// Polyline, zero for Flat).
double interface_slope(const Interface& interface, double x);

/// Vertical signed distance y - curve(x): positive below the interface
/// (larger depth), negative above, zero on it.
double signed_distance(double x, double y, const Interface& interface);

/// Geodesic parameter t = clamp(1/2 + dist/range, 0, 1). A zero range gives
/// the step function (0 above, 1 below, 1/2 on the interface).
double blend_parameter(double dist, double range);

void validate(const Interface& interface);

}  // namespace spdeblend
