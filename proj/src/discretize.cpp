#include "spdeblend/discretize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace spdeblend {

CoefficientFields CoefficientFields::isotropic(const Grid2D& grid, double kappa2_value) {
  CoefficientFields c;
  const int n = grid.size();
  c.a11 = Eigen::VectorXd::Ones(n);
  c.a12 = Eigen::VectorXd::Zero(n);
  c.a22 = Eigen::VectorXd::Ones(n);
  c.kappa2 = Eigen::VectorXd::Constant(n, kappa2_value);
  return c;
}

Eigen::Matrix3d constant_stencil(double a11, double a12, double a22, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("constant_stencil: h must be positive");
  if (!(a11 > 0.0) || !(a11 * a22 - a12 * a12 > 0.0))
    throw std::domain_error("constant_stencil: coefficient tensor is not SPD");
  Eigen::Matrix3d S;
  S << a12, -a22 - a12, 0.0,
      -a11 - a12, 2.0 * (a11 + a22 + a12), -a11 - a12,
      0.0, -a22 - a12, a12;
  return -S / (h * h);
}

namespace {

// Index resolution per boundary condition. Returns -1 when the reference is
// dropped (Dirichlet ghost).
struct NodeResolver {
  const Grid2D& grid;
  BoundaryCondition bc;

  int resolve(int i, int j) const {
    switch (bc) {
      case BoundaryCondition::Periodic:
        i = (i % grid.nx + grid.nx) % grid.nx;
        j = (j % grid.ny + grid.ny) % grid.ny;
        return grid.index(i, j);
      case BoundaryCondition::Neumann:
        i = std::clamp(i, 0, grid.nx - 1);
        j = std::clamp(j, 0, grid.ny - 1);
        return grid.index(i, j);
      case BoundaryCondition::Dirichlet:
        if (i < 0 || i >= grid.nx || j < 0 || j >= grid.ny) return -1;
        return grid.index(i, j);
    }
    return -1;
  }

  // Coefficient lookups never drop: out-of-range coefficients are clamped
  // (wrapped under Periodic) so face averages stay defined at the boundary.
  int coeff(int i, int j) const {
    if (bc == BoundaryCondition::Periodic) {
      i = (i % grid.nx + grid.nx) % grid.nx;
      j = (j % grid.ny + grid.ny) % grid.ny;
    } else {
      i = std::clamp(i, 0, grid.nx - 1);
      j = std::clamp(j, 0, grid.ny - 1);
    }
    return grid.index(i, j);
  }
};

}  // namespace

SparseMat assemble_operator(const Grid2D& grid, const CoefficientFields& coeff,
                            BoundaryCondition bc) {
  const int n = grid.size();
  if (coeff.a11.size() != n || coeff.a12.size() != n || coeff.a22.size() != n ||
      coeff.kappa2.size() != n)
    throw std::invalid_argument("assemble_operator: coefficient arrays must have nx*ny entries");
  for (int k = 0; k < n; ++k) {
    if (!(coeff.a11[k] > 0.0) ||
        !(coeff.a11[k] * coeff.a22[k] - coeff.a12[k] * coeff.a12[k] > 0.0))
      throw std::domain_error("assemble_operator: coefficient tensor not SPD at node " +
                              std::to_string(k));
  }

  const NodeResolver res{grid, bc};
  const double inv_h2 = 1.0 / (grid.h * grid.h);
  const auto& a11 = coeff.a11;
  const auto& a12 = coeff.a12;
  const auto& a22 = coeff.a22;

  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(static_cast<std::size_t>(n) * 9);

  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const int row = grid.index(i, j);
      // accumulate Lambda u weights into the local 3x3 neighbourhood
      double w[3][3] = {};  // w[1+dj][1+di]
      auto add = [&](int di, int dj, double v) { w[1 + dj][1 + di] += v; };

      const double al11_r = 0.5 * (a11[res.coeff(i + 1, j)] + a11[res.coeff(i, j)]);
      const double al11_l = 0.5 * (a11[res.coeff(i, j)] + a11[res.coeff(i - 1, j)]);
      const double al22_u = 0.5 * (a22[res.coeff(i, j + 1)] + a22[res.coeff(i, j)]);
      const double al22_d = 0.5 * (a22[res.coeff(i, j)] + a22[res.coeff(i, j - 1)]);

      // Lambda_xx = dx(alpha11 dx^ u): alpha11^{i+1,j}(u_{i+1}-u_i) - alpha11^{i,j}(u_i-u_{i-1})
      add(+1, 0, al11_r);
      add(0, 0, -al11_r - al11_l);
      add(-1, 0, al11_l);
      // Lambda_yy
      add(0, +1, al22_u);
      add(0, 0, -al22_u - al22_d);
      add(0, -1, al22_d);

      const double ar = a12[res.coeff(i + 1, j)];
      const double ac = a12[res.coeff(i, j)];
      const double al = a12[res.coeff(i - 1, j)];
      const double au = a12[res.coeff(i, j + 1)];
      const double ad = a12[res.coeff(i, j - 1)];

      // Lambda_xy+ = 1/2 ( dx(a12 dy u) + dx^(a12 dy^ u) )
      add(+1, +1, 0.5 * ar);
      add(+1, 0, -0.5 * ar);
      add(0, +1, -0.5 * ac);
      add(0, 0, 0.5 * ac);
      add(0, 0, 0.5 * ac);
      add(0, -1, -0.5 * ac);
      add(-1, 0, -0.5 * al);
      add(-1, -1, 0.5 * al);
      // Lambda_yx+ = 1/2 ( dy(a12 dx u) + dy^(a12 dx^ u) )
      add(+1, +1, 0.5 * au);
      add(0, +1, -0.5 * au);
      add(+1, 0, -0.5 * ac);
      add(0, 0, 0.5 * ac);
      add(0, 0, 0.5 * ac);
      add(-1, 0, -0.5 * ac);
      add(0, -1, -0.5 * ad);
      add(-1, -1, 0.5 * ad);

      for (int dj = -1; dj <= 1; ++dj) {
        for (int di = -1; di <= 1; ++di) {
          double v = -w[1 + dj][1 + di] * inv_h2;  // L = kappa2 - Lambda
          if (di == 0 && dj == 0) v += coeff.kappa2[row];
          if (v == 0.0 && !(di == 0 && dj == 0)) continue;
          const int col = res.resolve(i + di, j + dj);
          if (col >= 0) triplets.emplace_back(row, col, v);
        }
      }
    }
  }

  SparseMat L(n, n);
  L.setFromTriplets(triplets.begin(), triplets.end());
  return L;
}

SparseMat precision_from_operator(const SparseMat& L, double tau2, const Grid2D& grid,
                                  bool normalize_variance, double kappa2_median) {
  if (L.rows() != L.cols()) throw std::invalid_argument("precision_from_operator: L not square");
  if (!(tau2 > 0.0)) throw std::invalid_argument("precision_from_operator: tau2 must be positive");
  double c = 1.0;
  if (normalize_variance) {
    if (!(kappa2_median > 0.0))
      throw std::invalid_argument(
          "precision_from_operator: kappa2_median must be positive to normalize");
    c = matern_variance(kappa2_median);
  }
  const double scale = tau2 * c * grid.h * grid.h;
  SparseMat Q = (SparseMat(L.transpose()) * L) * scale;
  return Q;
}

MaternValue matern_reference(double r, double kappa, double alpha, int d) {
  if (r < 0.0) throw std::invalid_argument("matern_reference: r must be nonnegative");
  if (!(kappa > 0.0)) throw std::invalid_argument("matern_reference: kappa must be positive");
  const double nu = alpha - 0.5 * d;
  if (!(nu > 0.0)) throw std::domain_error("matern_reference: requires alpha - d/2 > 0");
  MaternValue out;
  out.variance = std::tgamma(nu) /
                 (std::tgamma(alpha) * std::pow(4.0 * M_PI, 0.5 * d) * std::pow(kappa, 2.0 * nu));
  if (r == 0.0) {
    out.rho = out.variance;
    return out;
  }
  const double kr = kappa * r;
  out.rho = out.variance / (std::tgamma(nu) * std::pow(2.0, nu - 1.0)) * std::pow(kr, nu) *
            std::cyl_bessel_k(nu, kr);
  return out;
}

double matern_variance(double kappa2, double alpha, int d) {
  if (!(kappa2 > 0.0)) throw std::invalid_argument("matern_variance: kappa2 must be positive");
  return matern_reference(0.0, std::sqrt(kappa2), alpha, d).variance;
}

double median(const Eigen::VectorXd& values) {
  if (values.size() == 0) throw std::invalid_argument("median: empty vector");
  std::vector<double> v(values.data(), values.data() + values.size());
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + mid, v.end());
  double m = v[mid];
  if (v.size() % 2 == 0) {
    const double lower = *std::max_element(v.begin(), v.begin() + mid);
    m = 0.5 * (m + lower);
  }
  return m;
}

}  // namespace spdeblend
