#include "spinwit/observables.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spinwit/errors.hpp"

namespace spinwit {

namespace {

constexpr double kClampTolerance = 1e-10;
constexpr double kRichardsonTolerance = 1e-3;
constexpr Eigen::Index kMomentBlock = 256;

void check_positive_temperature(double T) {
  require(std::isfinite(T) && T > 0.0, ErrorCode::invalid_argument,
          "susceptibility needs T > 0, got " + std::to_string(T));
}

void check_state_dim(Eigen::Index dim, const LatticeSpec& lattice) {
  require(dim == static_cast<Eigen::Index>(lattice.hilbert_dim()), ErrorCode::dimension_mismatch,
          "state dimension " + std::to_string(dim) + " does not match lattice dimension " +
              std::to_string(lattice.hilbert_dim()));
}

// Splits full basis indices into (kept, rest) coordinates. index(k, r) is the
// full index whose kept digits spell k and whose remaining digits spell r,
// both read with the leftmost site most significant.
class SiteSplit {
 public:
  SiteSplit(const LatticeSpec& lattice, std::span<const int> keep) {
    require(!keep.empty(), ErrorCode::invalid_argument, "keep list must not be empty");
    std::vector<bool> kept(static_cast<std::size_t>(lattice.n_sites()), false);
    for (std::size_t a = 0; a < keep.size(); ++a) {
      require(keep[a] >= 0 && keep[a] < lattice.n_sites(), ErrorCode::index_out_of_range,
              "keep site " + std::to_string(keep[a]) + " out of range");
      require(a == 0 || keep[a] > keep[a - 1], ErrorCode::invalid_argument,
              "keep list must be strictly increasing");
      kept[static_cast<std::size_t>(keep[a])] = true;
    }
    const auto d = static_cast<Eigen::Index>(lattice.local_dim());
    const auto dim = static_cast<Eigen::Index>(lattice.hilbert_dim());
    kept_dim_ = 1;
    for (std::size_t a = 0; a < keep.size(); ++a) kept_dim_ *= d;
    rest_dim_ = dim / kept_dim_;
    index_.resize(static_cast<std::size_t>(dim));
    for (Eigen::Index full = 0; full < dim; ++full) {
      Eigen::Index k = 0, r = 0;
      for (int site = 0; site < lattice.n_sites(); ++site) {
        const Eigen::Index digit = (full / static_cast<Eigen::Index>(lattice.stride(site))) % d;
        if (kept[static_cast<std::size_t>(site)])
          k = k * d + digit;
        else
          r = r * d + digit;
      }
      index_[static_cast<std::size_t>(k * rest_dim_ + r)] = full;
    }
  }

  Eigen::Index kept_dim() const { return kept_dim_; }
  Eigen::Index rest_dim() const { return rest_dim_; }
  Eigen::Index index(Eigen::Index k, Eigen::Index r) const {
    return index_[static_cast<std::size_t>(k * rest_dim_ + r)];
  }

  OperatorMatrix reduce_pure(const Eigen::Ref<const StateVector>& psi) const {
    OperatorMatrix a(kept_dim_, rest_dim_);
    for (Eigen::Index k = 0; k < kept_dim_; ++k)
      for (Eigen::Index r = 0; r < rest_dim_; ++r) a(k, r) = psi(index(k, r));
    return a * a.adjoint();
  }

 private:
  Eigen::Index kept_dim_ = 1;
  Eigen::Index rest_dim_ = 1;
  std::vector<Eigen::Index> index_;
};

DensityMatrix symmetrized_density(OperatorMatrix rho) {
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(rho / rho.trace().real());
}

}  // namespace

double MagnetizationVector::operator[](Axis axis) const {
  return axis == Axis::x ? x : axis == Axis::y ? y : z;
}

double SusceptibilityTriple::operator[](Axis axis) const {
  return axis == Axis::x ? chi_x : axis == Axis::y ? chi_y : chi_z;
}

AxisMoments axis_moments(const Spectrum& spectrum, const LatticeSpec& lattice, Axis axis) {
  check_state_dim(spectrum.dim(), lattice);
  const SparseOperator m = total_component_sparse(axis, lattice);
  const OperatorMatrix& V = spectrum.eigenvectors();
  const Eigen::Index dim = spectrum.dim();
  AxisMoments out{Eigen::VectorXd(dim), Eigen::VectorXd(dim)};
  for (Eigen::Index start = 0; start < dim; start += kMomentBlock) {
    const Eigen::Index width = std::min(kMomentBlock, dim - start);
    const OperatorMatrix mv = m * V.middleCols(start, width);
    for (Eigen::Index c = 0; c < width; ++c) {
      out.mean(start + c) = V.col(start + c).dot(mv.col(c)).real();
      out.square(start + c) = mv.col(c).squaredNorm();
    }
  }
  return out;
}

ThermalSystem::ThermalSystem(LatticeSpec lattice, Spectrum spectrum, ThermalTolerances tolerances)
    : lattice_(std::move(lattice)), spectrum_(std::move(spectrum)), tolerances_(tolerances) {
  for (Axis axis : kAxes) moments_[static_cast<std::size_t>(axis)] = axis_moments(spectrum_, lattice_, axis);
}

ThermalSystem ThermalSystem::from_model(const ModelSpec& model, ThermalTolerances tolerances) {
  return ThermalSystem(model.lattice, diagonalize(build_hamiltonian(model), tolerances.hermiticity), tolerances);
}

ThermalWeights ThermalSystem::weights(double T) const {
  return thermal_weights(spectrum_, T, tolerances_.degeneracy);
}

double magnetization(const ThermalSystem& system, double T, Axis axis) {
  return system.weights(T).probabilities.dot(system.moments(axis).mean);
}

MagnetizationVector magnetization_vector(const ThermalSystem& system, double T) {
  const Eigen::VectorXd p = system.weights(T).probabilities;
  return {p.dot(system.moments(Axis::x).mean), p.dot(system.moments(Axis::y).mean),
          p.dot(system.moments(Axis::z).mean)};
}

double magnetization_variance(const ThermalSystem& system, double T, Axis axis) {
  const Eigen::VectorXd p = system.weights(T).probabilities;
  const AxisMoments& mom = system.moments(axis);
  const double mean = p.dot(mom.mean);
  return p.dot(mom.square) - mean * mean;
}

double fluctuation_susceptibility(const ThermalSystem& system, double T, Axis axis) {
  check_positive_temperature(T);
  return magnetization_variance(system, T, axis) / T;
}

SusceptibilityTriple susceptibilities(const ThermalSystem& system, double T) {
  check_positive_temperature(T);
  return {magnetization_variance(system, T, Axis::x) / T, magnetization_variance(system, T, Axis::y) / T,
          magnetization_variance(system, T, Axis::z) / T, T};
}

double derivative_susceptibility(const ModelSpec& model, double T, Axis axis, double step,
                                 ThermalTolerances tolerances) {
  check_positive_temperature(T);
  require(std::isfinite(step) && step > 0.0, ErrorCode::invalid_argument, "finite-difference step must be > 0");
  const OperatorMatrix H0 = build_hamiltonian(model);

  auto probe = [&](double h) {
    const Spectrum spectrum = diagonalize(add_zeeman(H0, model.lattice, axis, h), tolerances.hermiticity);
    const AxisMoments mom = axis_moments(spectrum, model.lattice, axis);
    return thermal_weights(spectrum, T, tolerances.degeneracy).probabilities.dot(mom.mean);
  };
  auto central = [&](double h) { return -(probe(h) - probe(-h)) / (2.0 * h); };

  const double coarse = central(step);
  const double fine = central(0.5 * step);
  const double scale = std::max(std::abs(fine), 1e-300);
  require(std::abs(coarse - fine) <= kRichardsonTolerance * scale, ErrorCode::numerical,
          "finite-difference step too large: step and half-step susceptibilities differ by " +
              std::to_string(std::abs(coarse - fine) / scale) + " relative");
  return coarse;
}

double magnetization(const DensityMatrix& state, const LatticeSpec& lattice, Axis axis) {
  check_state_dim(state.dim(), lattice);
  return expectation(state, total_component(axis, lattice)).real();
}

MagnetizationVector magnetization_vector(const DensityMatrix& state, const LatticeSpec& lattice) {
  return {magnetization(state, lattice, Axis::x), magnetization(state, lattice, Axis::y),
          magnetization(state, lattice, Axis::z)};
}

MagnetizationVector magnetization_vector(const PureState& state, const LatticeSpec& lattice) {
  check_state_dim(state.dim(), lattice);
  std::array<double, 3> m{};
  for (Axis axis : kAxes) {
    const StateVector mpsi = total_component_sparse(axis, lattice) * state.amplitudes();
    m[static_cast<std::size_t>(axis)] = state.amplitudes().dot(mpsi).real();
  }
  return {m[0], m[1], m[2]};
}

double two_site_correlator(const DensityMatrix& state, const LatticeSpec& lattice, int i, int j, Axis axis) {
  check_state_dim(state.dim(), lattice);
  require(i != j, ErrorCode::invalid_argument, "two-site correlator needs distinct sites");
  const OperatorMatrix local = spin_matrix(lattice.spin(), axis);
  const auto dim = static_cast<Eigen::Index>(lattice.hilbert_dim());
  OperatorMatrix op = OperatorMatrix::Zero(dim, dim);
  accumulate_pair(op, 1.0, local, i, local, j, lattice);
  return expectation(state, op).real();
}

DensityMatrix reduced_density_matrix(const DensityMatrix& state, const LatticeSpec& lattice,
                                     std::span<const int> keep) {
  check_state_dim(state.dim(), lattice);
  const SiteSplit split(lattice, keep);
  const OperatorMatrix& rho = state.matrix();
  OperatorMatrix out = OperatorMatrix::Zero(split.kept_dim(), split.kept_dim());
  for (Eigen::Index k = 0; k < split.kept_dim(); ++k)
    for (Eigen::Index kp = 0; kp < split.kept_dim(); ++kp)
      for (Eigen::Index r = 0; r < split.rest_dim(); ++r) out(k, kp) += rho(split.index(k, r), split.index(kp, r));
  return symmetrized_density(std::move(out));
}

DensityMatrix reduced_density_matrix(const PureState& state, const LatticeSpec& lattice,
                                     std::span<const int> keep) {
  check_state_dim(state.dim(), lattice);
  const SiteSplit split(lattice, keep);
  return symmetrized_density(split.reduce_pure(state.amplitudes()));
}

std::vector<OperatorMatrix> eigenstate_reductions(const Spectrum& spectrum, const LatticeSpec& lattice,
                                                  std::span<const int> keep) {
  check_state_dim(spectrum.dim(), lattice);
  const SiteSplit split(lattice, keep);
  std::vector<OperatorMatrix> out;
  out.reserve(static_cast<std::size_t>(spectrum.dim()));
  for (Eigen::Index n = 0; n < spectrum.dim(); ++n) out.push_back(split.reduce_pure(spectrum.eigenvectors().col(n)));
  return out;
}

DensityMatrix thermal_reduced_density_matrix(std::span<const OperatorMatrix> reductions,
                                             const ThermalWeights& weights) {
  require(!reductions.empty() && static_cast<Eigen::Index>(reductions.size()) == weights.probabilities.size(),
          ErrorCode::dimension_mismatch, "reductions and weights differ in length");
  OperatorMatrix rho = OperatorMatrix::Zero(reductions.front().rows(), reductions.front().cols());
  for (std::size_t n = 0; n < reductions.size(); ++n) {
    const double p = weights.probabilities(static_cast<Eigen::Index>(n));
    if (p != 0.0) rho += p * reductions[n];
  }
  return symmetrized_density(std::move(rho));
}

double concurrence(const DensityMatrix& rho) {
  require(rho.dim() == 4, ErrorCode::dimension_mismatch, "concurrence needs a two-qubit (4x4) state");
  OperatorMatrix flip = OperatorMatrix::Zero(4, 4);
  // sigma_y ⊗ sigma_y in the |00>,|01>,|10>,|11> basis.
  flip(0, 3) = -1.0;
  flip(1, 2) = 1.0;
  flip(2, 1) = 1.0;
  flip(3, 0) = -1.0;
  const OperatorMatrix tilde = flip * rho.matrix().conjugate() * flip;

  // Eigenvalues of rho * tilde equal those of sqrt(rho) tilde sqrt(rho), which
  // is Hermitian and so numerically better behaved.
  Eigen::SelfAdjointEigenSolver<OperatorMatrix> rho_eig(rho.matrix());
  Eigen::VectorXd root = rho_eig.eigenvalues();
  for (Eigen::Index k = 0; k < root.size(); ++k) {
    require(root(k) >= -kClampTolerance, ErrorCode::numerical, "concurrence input is not positive");
    root(k) = std::sqrt(std::max(root(k), 0.0));
  }
  const OperatorMatrix sqrt_rho = rho_eig.eigenvectors() * root.cast<Complex>().asDiagonal() *
                                  rho_eig.eigenvectors().adjoint();
  OperatorMatrix r = sqrt_rho * tilde * sqrt_rho;
  r = 0.5 * (r + r.adjoint()).eval();
  Eigen::VectorXd mu = Eigen::SelfAdjointEigenSolver<OperatorMatrix>(r, Eigen::EigenvaluesOnly).eigenvalues();

  std::array<double, 4> lambda{};
  for (Eigen::Index k = 0; k < 4; ++k) {
    require(mu(k) >= -kClampTolerance, ErrorCode::numerical,
            "concurrence R-matrix eigenvalue " + std::to_string(mu(k)) + " is negative beyond tolerance");
    lambda[static_cast<std::size_t>(k)] = std::sqrt(std::max(mu(k), 0.0));
  }
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return std::clamp(lambda[0] - lambda[1] - lambda[2] - lambda[3], 0.0, 1.0);
}

}  // namespace spinwit
