#pragma once

#include <vector>

#include <Eigen/Core>

#include "spdeblend/discretize.hpp"
#include "spdeblend/grid.hpp"
#include "spdeblend/interface_geometry.hpp"

namespace spdeblend {

/// Endpoint correlation matrices, blend range and interface defining the
/// spatially varying local cross-field correlation Sigma0(s).
struct BlendSpec {
  Eigen::MatrixXd sigma_above;  // correlation in the layer above the interface
  Eigen::MatrixXd sigma_below;
  double range = 0.0;  // width of the transition zone, length units
  Interface interface = FlatInterface{0.0};
};

/// Per-node local correlation Sigma0(s), precision Q0(s) = Sigma0(s)^{-1} and
/// the upper-triangular factor u(s) = chol_lower(Q0(s))^T, so that
/// u(s)^T u(s) = Q0(s). Nodes follow the grid ordering.
class BlendField {
 public:
  BlendField(int nodes, int dim);

  int nodes() const { return static_cast<int>(sigma_.size()); }
  int dim() const { return dim_; }

  const Eigen::MatrixXd& sigma(int node) const { return sigma_[node]; }
  const Eigen::MatrixXd& precision(int node) const { return prec_[node]; }
  const Eigen::MatrixXd& factor_ut(int node) const { return ut_[node]; }

  void set(int node, Eigen::MatrixXd sigma, Eigen::MatrixXd prec, Eigen::MatrixXd ut);

  /// Constant field (every node carries the same matrices).
  static BlendField constant(int nodes, const Eigen::MatrixXd& sigma);

 private:
  int dim_;
  std::vector<Eigen::MatrixXd> sigma_, prec_, ut_;
};

/// Builds the blend field: at each node, Sigma0(s) is the SPD geodesic
/// between the endpoint correlations at parameter t(s) derived from the
/// vertical signed distance to the interface and the blend range.
BlendField build_blend_field(const Grid2D& grid, const BlendSpec& spec);

/// Per-node precision/factor matrices for a single fixed Sigma0.
BlendField constant_blend_field(const Grid2D& grid, const Eigen::MatrixXd& sigma0);

/// Region in which the anisotropy tensor is applied.
enum class AnisotropyRegion { Above, Below, Everywhere };

struct AnisotropySpec {
  double ratio_major = 1.0;  // squared principal length along the interface tangent
  double ratio_minor = 1.0;  // across it
  AnisotropyRegion region = AnisotropyRegion::Below;
};

/// Anisotropy tensor field A(s) = R(phi) diag(major, minor) R(phi)^T with phi
/// the interface tangent angle at the node's x-coordinate (3-node moving
/// average along x), identity outside the active region. kappa2 is left zero;
/// callers fill it in.
CoefficientFields anisotropy_from_interface(const Grid2D& grid, const Interface& interface,
                                            const AnisotropySpec& spec);

}  // namespace spdeblend
