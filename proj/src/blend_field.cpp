#include "spdeblend/blend_field.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "spdeblend/spd_geometry.hpp"

namespace spdeblend {

BlendField::BlendField(int nodes, int dim) : dim_(dim) {
  if (nodes <= 0 || dim <= 0) throw std::invalid_argument("BlendField: empty");
  sigma_.resize(nodes);
  prec_.resize(nodes);
  ut_.resize(nodes);
}

void BlendField::set(int node, Eigen::MatrixXd sigma, Eigen::MatrixXd prec, Eigen::MatrixXd ut) {
  sigma_[node] = std::move(sigma);
  prec_[node] = std::move(prec);
  ut_[node] = std::move(ut);
}

BlendField BlendField::constant(int nodes, const Eigen::MatrixXd& sigma) {
  const int d = static_cast<int>(sigma.rows());
  Eigen::MatrixXd prec = sigma.inverse();
  Eigen::LLT<Eigen::MatrixXd> llt(prec);
  if (llt.info() != Eigen::Success)
    throw std::domain_error("BlendField: sigma is not positive definite");
  Eigen::MatrixXd ut = llt.matrixL().transpose();
  BlendField field(nodes, d);
  for (int k = 0; k < nodes; ++k) field.set(k, sigma, prec, ut);
  return field;
}

namespace {

// Sigma -> (Sigma, Q = Sigma^{-1}, u upper with u^T u = Q)
void factor_node(BlendField& field, int node, const Eigen::MatrixXd& sigma) {
  Eigen::MatrixXd prec = sigma.inverse();
  prec = 0.5 * (prec + prec.transpose());
  Eigen::LLT<Eigen::MatrixXd> llt(prec);
  if (llt.info() != Eigen::Success)
    throw std::domain_error("build_blend_field: local precision not PD at node " +
                            std::to_string(node));
  field.set(node, sigma, prec, llt.matrixL().transpose());
}

}  // namespace

BlendField build_blend_field(const Grid2D& grid, const BlendSpec& spec) {
  validate(spec.interface);
  if (spec.range < 0.0) throw std::invalid_argument("build_blend_field: range must be >= 0");
  const int d = static_cast<int>(spec.sigma_above.rows());
  if (spec.sigma_below.rows() != d || spec.sigma_above.cols() != d ||
      spec.sigma_below.cols() != d)
    throw std::invalid_argument("build_blend_field: endpoint dimension mismatch");

  const spd::GeodesicPath path(spec.sigma_above, spec.sigma_below);
  BlendField field(grid.size(), d);
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const int node = grid.index(i, j);
      const double dist = signed_distance(grid.x(i), grid.y(j), spec.interface);
      const double t = blend_parameter(dist, spec.range);
      // exact endpoints outside the transition zone
      if (t == 0.0) {
        factor_node(field, node, spec.sigma_above);
      } else if (t == 1.0) {
        factor_node(field, node, spec.sigma_below);
      } else {
        factor_node(field, node, path.at(t));
      }
    }
  }
  return field;
}

BlendField constant_blend_field(const Grid2D& grid, const Eigen::MatrixXd& sigma0) {
  return BlendField::constant(grid.size(), sigma0);
}

CoefficientFields anisotropy_from_interface(const Grid2D& grid, const Interface& interface,
                                            const AnisotropySpec& spec) {
  validate(interface);
  if (!(spec.ratio_major > 0.0) || !(spec.ratio_minor > 0.0))
    throw std::invalid_argument("anisotropy_from_interface: ratios must be positive");

  // tangent angle per column, 3-node moving average for continuity
  std::vector<double> phi(grid.nx);
  for (int i = 0; i < grid.nx; ++i)
    phi[i] = std::atan(interface_slope(interface, grid.x(i)));
  std::vector<double> phi_s(grid.nx);
  for (int i = 0; i < grid.nx; ++i) {
    const int lo = std::max(0, i - 1);
    const int hi = std::min(grid.nx - 1, i + 1);
    double sum = 0.0;
    for (int k = lo; k <= hi; ++k) sum += phi[k];
    phi_s[i] = sum / (hi - lo + 1);
  }

  CoefficientFields coeff;
  const int n = grid.size();
  coeff.a11 = Eigen::VectorXd::Ones(n);
  coeff.a12 = Eigen::VectorXd::Zero(n);
  coeff.a22 = Eigen::VectorXd::Ones(n);
  coeff.kappa2 = Eigen::VectorXd::Zero(n);

  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const double dist = signed_distance(grid.x(i), grid.y(j), interface);
      const bool active = spec.region == AnisotropyRegion::Everywhere ||
                          (spec.region == AnisotropyRegion::Below ? dist > 0.0 : dist < 0.0);
      if (!active) continue;
      const double c = std::cos(phi_s[i]);
      const double s = std::sin(phi_s[i]);
      const int k = grid.index(i, j);
      coeff.a11[k] = spec.ratio_major * c * c + spec.ratio_minor * s * s;
      coeff.a22[k] = spec.ratio_major * s * s + spec.ratio_minor * c * c;
      coeff.a12[k] = (spec.ratio_major - spec.ratio_minor) * s * c;
    }
  }
  return coeff;
}

}  // namespace spdeblend
