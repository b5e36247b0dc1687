#include "spinwit/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <lapacke.h>

#include "spinwit/errors.hpp"

namespace spinwit {

namespace {

constexpr double kImaginaryResidue = 1e-8;

void check_temperature(double T) {
  require(std::isfinite(T), ErrorCode::invalid_argument, "temperature must be finite");
  require(T >= 0.0, ErrorCode::invalid_argument, "temperature must be non-negative, got " + std::to_string(T));
}

// Spot-checks a handful of eigenpairs: residual |H v - E v| and norm. A
// miscompiled or misdispatched BLAS shows up here instead of as silently
// wrong thermodynamics.
void check_eigenpairs(const OperatorMatrix& H, const Eigen::VectorXd& energies, const OperatorMatrix& V) {
  const Eigen::Index n = H.rows();
  const double scale = std::max(1.0, H.cwiseAbs().rowwise().sum().maxCoeff());
  const Eigen::Index picks[] = {0, n / 3, n / 2, (2 * n) / 3, n - 1};
  for (Eigen::Index k : picks) {
    const Eigen::VectorXcd v = V.col(k);
    const double residual = (H * v - energies(k) * v).cwiseAbs().maxCoeff();
    const double norm_defect = std::abs(v.squaredNorm() - 1.0);
    require(residual <= 1e-8 * scale && norm_defect <= 1e-8, ErrorCode::numerical,
            "eigensolver returned an inaccurate eigenpair (residual " + std::to_string(residual) +
                "); the BLAS/LAPACK build may be faulty on this CPU, try OPENBLAS_CORETYPE=Haswell");
  }
}

}  // namespace

Spectrum::Spectrum(Eigen::VectorXd energies, OperatorMatrix eigenvectors)
    : energies_(std::move(energies)), eigenvectors_(std::move(eigenvectors)) {
  require(energies_.size() >= 1, ErrorCode::invalid_argument, "empty spectrum");
  require(eigenvectors_.rows() == energies_.size() && eigenvectors_.cols() == energies_.size(),
          ErrorCode::dimension_mismatch, "eigenvector matrix does not match the number of energies");
  for (Eigen::Index n = 1; n < energies_.size(); ++n)
    require(energies_(n - 1) <= energies_(n), ErrorCode::numerical, "spectrum energies must be ascending");
}

Spectrum diagonalize(const OperatorMatrix& H, double hermiticity_tol) {
  require(H.rows() == H.cols() && H.rows() >= 1, ErrorCode::dimension_mismatch, "Hamiltonian must be square");
  const double defect = hermiticity_defect(H);
  require(defect <= hermiticity_tol, ErrorCode::numerical,
          "Hamiltonian is not Hermitian (max |H - H^dagger| = " + std::to_string(defect) + ")");

  const auto n = static_cast<lapack_int>(H.rows());
  Eigen::VectorXd energies(n);

  if (H.imag().cwiseAbs().maxCoeff() == 0.0) {
    Eigen::MatrixXd work = H.real();
    const lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'U', n, work.data(), n, energies.data());
    require(info == 0, ErrorCode::numerical, "dsyevd failed with info " + std::to_string(info));
    OperatorMatrix vectors = work.cast<Complex>();
    work.resize(0, 0);
    check_eigenpairs(H, energies, vectors);
    return Spectrum(std::move(energies), std::move(vectors));
  }

  OperatorMatrix work = H;
  const lapack_int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'U', n,
                                         reinterpret_cast<lapack_complex_double*>(work.data()), n,
                                         energies.data());
  require(info == 0, ErrorCode::numerical, "zheevd failed with info " + std::to_string(info));
  check_eigenpairs(H, energies, work);
  return Spectrum(std::move(energies), std::move(work));
}

ThermalWeights thermal_weights(const Eigen::VectorXd& energies, double T, double degeneracy_tol) {
  check_temperature(T);
  require(energies.size() >= 1, ErrorCode::invalid_argument, "empty spectrum");
  const double e0 = energies.minCoeff();
  ThermalWeights w{T, Eigen::VectorXd::Zero(energies.size())};
  if (T == 0.0) {
    for (Eigen::Index n = 0; n < energies.size(); ++n)
      if (energies(n) - e0 <= degeneracy_tol) w.probabilities(n) = 1.0;
  } else {
    for (Eigen::Index n = 0; n < energies.size(); ++n) w.probabilities(n) = std::exp(-(energies(n) - e0) / T);
  }
  w.probabilities /= w.probabilities.sum();
  return w;
}

ThermalWeights thermal_weights(const Spectrum& spectrum, double T, double degeneracy_tol) {
  return thermal_weights(spectrum.energies(), T, degeneracy_tol);
}

Eigen::VectorXcd eigenbasis_diagonal(const Spectrum& spectrum, const OperatorMatrix& A) {
  require(A.rows() == spectrum.dim() && A.cols() == spectrum.dim(), ErrorCode::dimension_mismatch,
          "operator dimension does not match the spectrum");
  const OperatorMatrix& V = spectrum.eigenvectors();
  Eigen::VectorXcd out(spectrum.dim());
  for (Eigen::Index n = 0; n < spectrum.dim(); ++n) out(n) = V.col(n).dot(A * V.col(n));
  return out;
}

double thermal_expectation(const ThermalWeights& weights, const Eigen::VectorXcd& eigen_diagonal) {
  require(weights.probabilities.size() == eigen_diagonal.size(), ErrorCode::dimension_mismatch,
          "weights and eigenbasis diagonal differ in length");
  const Complex value = weights.probabilities.cast<Complex>().dot(eigen_diagonal);
  require(std::abs(value.imag()) <= kImaginaryResidue, ErrorCode::numerical,
          "thermal expectation has imaginary part " + std::to_string(value.imag()));
  return value.real();
}

double thermal_expectation(const Spectrum& spectrum, const OperatorMatrix& A, double T, double degeneracy_tol) {
  return thermal_expectation(thermal_weights(spectrum, T, degeneracy_tol), eigenbasis_diagonal(spectrum, A));
}

double log_partition_function(const Spectrum& spectrum, double T) {
  require(std::isfinite(T) && T > 0.0, ErrorCode::invalid_argument, "log Z needs T > 0");
  const double e0 = spectrum.ground_energy();
  double sum = 0.0;
  for (Eigen::Index n = 0; n < spectrum.dim(); ++n) sum += std::exp(-(spectrum.energies()(n) - e0) / T);
  return -e0 / T + std::log(sum);
}

DensityMatrix thermal_density_matrix(const Spectrum& spectrum, double T, double degeneracy_tol) {
  const ThermalWeights w = thermal_weights(spectrum, T, degeneracy_tol);
  const OperatorMatrix& V = spectrum.eigenvectors();
  OperatorMatrix rho = V * w.probabilities.cast<Complex>().asDiagonal() * V.adjoint();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(rho);
}

double shannon_entropy(const ThermalWeights& weights) {
  double h = 0.0;
  for (double p : weights.probabilities) {
    if (p > 0.0) h -= p * std::log(p);
  }
  return h;
}

}  // namespace spinwit
