#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "spdeblend/grid.hpp"

namespace spdeblend {

using SparseMat = Eigen::SparseMatrix<double>;

enum class BoundaryCondition { Neumann, Dirichlet, Periodic };

/// Per-node coefficients of the elliptic operator kappa2(s) - div(A(s) grad).
/// a21 = a12; the local 2x2 tensor [[a11,a12],[a12,a22]] must be SPD at every
/// node. Arrays are indexed like the grid (i + nx*j).
struct CoefficientFields {
  Eigen::VectorXd a11, a12, a22, kappa2;

  static CoefficientFields isotropic(const Grid2D& grid, double kappa2_value);
};

/// 3x3 stencil of the constant-coefficient operator div(A grad) at spacing h.
/// Orientation: rows run over j-1, j, j+1 (top to bottom) and columns over
/// i-1, i, i+1, matching the row-major grid layout. Entries sum to zero.
///
/// The stencil pairs the one-sided cross differences opposite to
/// assemble_operator (x-forward with y-backward instead of y-forward), so the
/// two coincide under constant coefficients only after negating a12:
/// interior rows of assemble_operator equal -constant_stencil(a11, -a12, a22)
/// plus kappa2 on the diagonal. Both pairings discretize the same operator.
Eigen::Matrix3d constant_stencil(double a11, double a12, double a22, double h);

/// Assembles the (nx*ny)^2 sparse matrix L where row k realizes
/// kappa2_k u_k - (Lambda_xx + Lambda_xy+ + Lambda_yx+ + Lambda_yy) u at
/// node k, using face-averaged coefficients. Out-of-range references are
/// wrapped (Periodic), clamped to the boundary node (Neumann, i.e. reflecting
/// ghosts), or dropped (Dirichlet, zero ghosts). At most 9 nonzeros per row.
SparseMat assemble_operator(const Grid2D& grid, const CoefficientFields& coeff,
                            BoundaryCondition bc);

/// Precision matrix Q = tau2 * c * h^2 * L^T L of the field driven by unit
/// white noise. With normalize_variance the factor c is the analytic
/// stationary marginal variance at kappa2_median (alpha = 2, d = 2), which
/// brings the field to approximately unit marginal variance; otherwise c = 1.
SparseMat precision_from_operator(const SparseMat& L, double tau2, const Grid2D& grid,
                                  bool normalize_variance = false,
                                  double kappa2_median = 0.0);

struct MaternValue {
  double rho;       // covariance at distance r
  double variance;  // marginal variance
};

/// Matern covariance rho(r) and marginal variance of the stationary model
/// (kappa^2 - Laplacian)^{alpha/2} x = W in dimension d; requires
/// nu = alpha - d/2 > 0. rho(0) equals the variance.
MaternValue matern_reference(double r, double kappa, double alpha, int d);

/// Marginal variance only, as a function of kappa^2 (alpha = 2, d = 2 default).
double matern_variance(double kappa2, double alpha = 2.0, int d = 2);

/// Median of a coefficient array (used for the normalization constant).
double median(const Eigen::VectorXd& values);

}  // namespace spdeblend
