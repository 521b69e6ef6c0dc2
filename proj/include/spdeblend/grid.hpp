#pragma once

#include <stdexcept>

namespace spdeblend {

/// Regular 2-D grid with equal spacing in both directions. Nodes are
/// addressed row-major with x fastest: node(i,j) = i + nx*j.
struct Grid2D {
  int nx = 0;
  int ny = 0;
  double h = 1.0;

  Grid2D() = default;
  Grid2D(int nx_, int ny_, double h_) : nx(nx_), ny(ny_), h(h_) {
    if (nx < 3 || ny < 3) throw std::invalid_argument("Grid2D: nx and ny must be >= 3");
    if (!(h > 0.0)) throw std::invalid_argument("Grid2D: h must be positive");
  }

  int size() const { return nx * ny; }
  int index(int i, int j) const { return i + nx * j; }
  double x(int i) const { return i * h; }
  double y(int j) const { return j * h; }
};

}  // namespace spdeblend
