#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

namespace spdeblend::spd {

/// Result of checking how far an SPD matrix is from being a correlation
/// matrix (unit diagonal), together with the diagonally renormalized version
/// D^{-1/2} A D^{-1/2}.
struct CorrelationReport {
  bool is_correlation = false;
  double max_diag_deviation = 0.0;
  Eigen::MatrixXd renormalized;
};

/// True if max |A - A^T| is within rel_tol * max |A|.
bool is_symmetric(const Eigen::MatrixXd& A, double rel_tol = 1e-12);

/// A^t for SPD A via symmetric eigendecomposition, valid for any real t.
/// Eigenvalues below 1e-12 times the largest are rejected as non-SPD.
Eigen::MatrixXd power(const Eigen::MatrixXd& A, double t);

/// Principal matrix logarithm of an SPD matrix.
Eigen::MatrixXd log(const Eigen::MatrixXd& A);

/// Geodesic A #_t B = A^{1/2} (A^{-1/2} B A^{-1/2})^t A^{1/2} on the SPD
/// manifold with the affine-invariant metric; t must lie in [0,1].
Eigen::MatrixXd geodesic_point(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B, double t);

/// Affine-invariant distance ||log(A^{-1/2} B A^{-1/2})||_F.
double geodesic_distance(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B);

/// Length of a sampled curve on the SPD manifold, summing the exact local
/// geodesic chord ||log(g_k^{-1/2} g_{k+1} g_k^{-1/2})||_F over consecutive
/// pairs. Converges to the curve length as the sampling refines.
double curve_length(std::span<const Eigen::MatrixXd> samples);
double curve_length(const std::vector<Eigen::MatrixXd>& samples);

/// Boltzmann entropy of the zero-mean Gaussian with precision Q:
/// B(Q) = 1/2 log det Q^{-1} (additive constant fixed to zero).
double boltzmann_entropy(const Eigen::MatrixXd& Q);

/// Reports whether every diagonal entry is within tol of 1 and returns the
/// renormalized matrix. Geodesics of correlation matrices are generally not
/// correlation matrices; this is the diagnostic for that.
CorrelationReport correlation_check(const Eigen::MatrixXd& A, double tol);

/// Caches the spectral data of a fixed endpoint pair so that geodesic points
/// for many t values cost one small diagonal power plus two multiplies each.
class GeodesicPath {
 public:
  GeodesicPath(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B);

  Eigen::MatrixXd at(double t) const;
  double distance() const;
  Eigen::Index dim() const { return eigenvalues_.size(); }

 private:
  Eigen::MatrixXd outer_;        // A^{1/2} V
  Eigen::VectorXd eigenvalues_;  // spectrum of A^{-1/2} B A^{-1/2}
};

}  // namespace spdeblend::spd
