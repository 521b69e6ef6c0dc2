#include "spdeblend/spd_geometry.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace spdeblend::spd {

namespace {

constexpr double kEigenvalueFloor = 1e-12;

void require_square(const Eigen::MatrixXd& A, const char* who) {
  if (A.rows() != A.cols() || A.rows() == 0)
    throw std::invalid_argument(std::string(who) + ": matrix must be square and non-empty");
}

void require_same_dim(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B, const char* who) {
  if (A.rows() != B.rows() || A.cols() != B.cols())
    throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}

// Eigendecomposition of a symmetric matrix asserted SPD; throws domain_error
// when the smallest eigenvalue falls below the relative floor.
Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> spd_eigen(const Eigen::MatrixXd& A,
                                                         const char* who) {
  require_square(A, who);
  if (!is_symmetric(A))
    throw std::invalid_argument(std::string(who) + ": matrix is not symmetric");
  Eigen::MatrixXd S = 0.5 * (A + A.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S);
  if (es.info() != Eigen::Success)
    throw std::domain_error(std::string(who) + ": eigendecomposition failed");
  const double lmax = es.eigenvalues().maxCoeff();
  if (!(lmax > 0.0) || es.eigenvalues().minCoeff() <= kEigenvalueFloor * lmax)
    throw std::domain_error(std::string(who) + ": matrix is not positive definite");
  return es;
}

template <typename Fn>
Eigen::MatrixXd spectral_map(const Eigen::MatrixXd& A, Fn&& fn, const char* who) {
  auto es = spd_eigen(A, who);
  Eigen::VectorXd d = es.eigenvalues();
  for (Eigen::Index i = 0; i < d.size(); ++i) d[i] = fn(d[i]);
  return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().transpose();
}

}  // namespace

bool is_symmetric(const Eigen::MatrixXd& A, double rel_tol) {
  if (A.rows() != A.cols()) return false;
  const double scale = A.cwiseAbs().maxCoeff();
  if (scale == 0.0) return true;
  return (A - A.transpose()).cwiseAbs().maxCoeff() <= rel_tol * scale;
}

Eigen::MatrixXd power(const Eigen::MatrixXd& A, double t) {
  return spectral_map(A, [t](double l) { return std::pow(l, t); }, "spd::power");
}

Eigen::MatrixXd log(const Eigen::MatrixXd& A) {
  return spectral_map(A, [](double l) { return std::log(l); }, "spd::log");
}

Eigen::MatrixXd geodesic_point(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B, double t) {
  require_same_dim(A, B, "spd::geodesic_point");
  if (!(t >= 0.0 && t <= 1.0))
    throw std::invalid_argument("spd::geodesic_point: t must lie in [0,1]");
  return GeodesicPath(A, B).at(t);
}

double geodesic_distance(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B) {
  require_same_dim(A, B, "spd::geodesic_distance");
  return GeodesicPath(A, B).distance();
}

double curve_length(std::span<const Eigen::MatrixXd> samples) {
  if (samples.size() < 2)
    throw std::invalid_argument("spd::curve_length: need at least 2 samples");
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < samples.size(); ++k)
    total += geodesic_distance(samples[k], samples[k + 1]);
  return total;
}

double curve_length(const std::vector<Eigen::MatrixXd>& samples) {
  return curve_length(std::span<const Eigen::MatrixXd>(samples));
}

double boltzmann_entropy(const Eigen::MatrixXd& Q) {
  auto es = spd_eigen(Q, "spd::boltzmann_entropy");
  return -0.5 * es.eigenvalues().array().log().sum();
}

CorrelationReport correlation_check(const Eigen::MatrixXd& A, double tol) {
  auto es = spd_eigen(A, "spd::correlation_check");  // SPD gate only
  (void)es;
  CorrelationReport report;
  report.max_diag_deviation = (A.diagonal().array() - 1.0).abs().maxCoeff();
  report.is_correlation = report.max_diag_deviation <= tol;
  Eigen::VectorXd dinv = A.diagonal().array().rsqrt();
  report.renormalized = dinv.asDiagonal() * A * dinv.asDiagonal();
  return report;
}

GeodesicPath::GeodesicPath(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B) {
  require_same_dim(A, B, "spd::GeodesicPath");
  auto esA = spd_eigen(A, "spd::GeodesicPath(A)");
  Eigen::VectorXd sq = esA.eigenvalues().array().sqrt();
  Eigen::MatrixXd Asqrt = esA.eigenvectors() * sq.asDiagonal() * esA.eigenvectors().transpose();
  Eigen::MatrixXd Aisqrt =
      esA.eigenvectors() * sq.cwiseInverse().asDiagonal() * esA.eigenvectors().transpose();
  Eigen::MatrixXd M = Aisqrt * B * Aisqrt;
  auto esM = spd_eigen(0.5 * (M + M.transpose()), "spd::GeodesicPath(B)");
  outer_ = Asqrt * esM.eigenvectors();
  eigenvalues_ = esM.eigenvalues();
}

Eigen::MatrixXd GeodesicPath::at(double t) const {
  Eigen::VectorXd d(eigenvalues_.size());
  for (Eigen::Index i = 0; i < d.size(); ++i) d[i] = std::pow(eigenvalues_[i], t);
  Eigen::MatrixXd G = outer_ * d.asDiagonal() * outer_.transpose();
  return 0.5 * (G + G.transpose());
}

double GeodesicPath::distance() const {
  return std::sqrt(eigenvalues_.array().log().square().sum());
}

}  // namespace spdeblend::spd
