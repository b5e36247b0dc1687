#include "spinwit/states.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "spinwit/errors.hpp"

namespace spinwit {

namespace {

OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b) {
  OperatorMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

StateVector gaussian_vector(Eigen::Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  StateVector v(dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(k) = Complex(re, im);
  }
  return v;
}

OperatorMatrix induced_density(Eigen::Index dim, Eigen::Index ancilla_dim, std::mt19937_64& rng) {
  OperatorMatrix g(dim, ancilla_dim);
  for (Eigen::Index c = 0; c < ancilla_dim; ++c) g.col(c) = gaussian_vector(dim, rng);
  OperatorMatrix rho = g * g.adjoint();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return rho / rho.trace().real();
}

std::vector<double> simplex_weights(int n, std::mt19937_64& rng) {
  std::exponential_distribution<double> exponential(1.0);
  std::vector<double> w(static_cast<std::size_t>(n));
  double total = 0.0;
  for (auto& x : w) {
    x = exponential(rng);
    total += x;
  }
  for (auto& x : w) x /= total;
  return w;
}

template <typename LocalFn>
DensityMatrix mixture_of_products(const LatticeSpec& lattice, int n_terms, std::uint64_t seed, LocalFn&& local) {
  require(n_terms >= 1, ErrorCode::invalid_argument, "separable mixture needs n_terms >= 1");
  std::mt19937_64 rng(seed);
  const auto weights = simplex_weights(n_terms, rng);
  const auto dim = static_cast<Eigen::Index>(lattice.hilbert_dim());
  OperatorMatrix rho = OperatorMatrix::Zero(dim, dim);
  for (int term = 0; term < n_terms; ++term) {
    OperatorMatrix product = OperatorMatrix::Identity(1, 1);
    for (int site = 0; site < lattice.n_sites(); ++site) product = kron(product, local(rng));
    rho += weights[static_cast<std::size_t>(term)] * product;
  }
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(rho / rho.trace().real());
}

}  // namespace

PureState::PureState(StateVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  require(amplitudes_.size() >= 1, ErrorCode::invalid_argument, "empty state vector");
  require(std::abs(amplitudes_.norm() - 1.0) <= kNormTolerance, ErrorCode::numerical,
          "state vector is not normalized");
}

PureState PureState::normalized(StateVector amplitudes) {
  const double n = amplitudes.norm();
  require(n > 0.0, ErrorCode::invalid_argument, "cannot normalize the zero vector");
  return PureState(amplitudes / n);
}

DensityMatrix PureState::density() const { return DensityMatrix(amplitudes_ * amplitudes_.adjoint()); }

DensityMatrix::DensityMatrix(OperatorMatrix entries) : entries_(std::move(entries)) {
  require(entries_.rows() == entries_.cols() && entries_.rows() >= 1, ErrorCode::dimension_mismatch,
          "density matrix must be square and non-empty");
  require(hermiticity_defect(entries_) <= kHermitianTolerance, ErrorCode::numerical,
          "density matrix is not Hermitian");
  require(std::abs(entries_.trace() - Complex(1.0)) <= kTraceTolerance, ErrorCode::numerical,
          "density matrix trace differs from 1");
  require(min_eigenvalue() >= -kPositivityTolerance, ErrorCode::numerical, "density matrix is not positive");
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<OperatorMatrix> solver(entries_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

Complex expectation(const PureState& state, const OperatorMatrix& op) {
  require(op.rows() == state.dim() && op.cols() == state.dim(), ErrorCode::dimension_mismatch,
          "operator and state dimensions differ");
  return state.amplitudes().dot(op * state.amplitudes());
}

Complex expectation(const DensityMatrix& state, const OperatorMatrix& op) {
  require(op.rows() == state.dim() && op.cols() == state.dim(), ErrorCode::dimension_mismatch,
          "operator and state dimensions differ");
  // tr(rho A) without forming the product.
  return (state.matrix().transpose().cwiseProduct(op)).sum();
}

PureState singlet_pair() {
  StateVector v = StateVector::Zero(4);
  v(1) = 1.0 / std::numbers::sqrt2;
  v(2) = -1.0 / std::numbers::sqrt2;
  return PureState(v);
}

PureState all_up_state(const LatticeSpec& lattice) {
  StateVector v = StateVector::Zero(static_cast<Eigen::Index>(lattice.hilbert_dim()));
  v(0) = 1.0;
  return PureState(v);
}

PureState product_state(std::span<const PureState> locals) {
  require(!locals.empty(), ErrorCode::invalid_argument, "product state needs at least one factor");
  const Eigen::Index d = locals.front().dim();
  StateVector v = StateVector::Ones(1);
  for (const auto& local : locals) {
    require(local.dim() == d, ErrorCode::dimension_mismatch, "product state factors have different dimensions");
    StateVector next(v.size() * d);
    for (Eigen::Index i = 0; i < v.size(); ++i) next.segment(i * d, d) = v(i) * local.amplitudes();
    v = std::move(next);
  }
  return PureState::normalized(v);
}

DensityMatrix product_density(std::span<const DensityMatrix> locals) {
  require(!locals.empty(), ErrorCode::invalid_argument, "product state needs at least one factor");
  OperatorMatrix rho = OperatorMatrix::Identity(1, 1);
  for (const auto& local : locals) {
    require(local.dim() == locals.front().dim(), ErrorCode::dimension_mismatch,
            "product state factors have different dimensions");
    rho = kron(rho, local.matrix());
  }
  return DensityMatrix(rho);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

PureState haar_random_pure(Eigen::Index dim, std::uint64_t seed) {
  require(dim >= 2, ErrorCode::invalid_argument, "Haar sampling needs dim >= 2");
  std::mt19937_64 rng(seed);
  return PureState::normalized(gaussian_vector(dim, rng));
}

DensityMatrix random_density_matrix(Eigen::Index dim, std::uint64_t seed, Eigen::Index ancilla_dim) {
  require(dim >= 1, ErrorCode::invalid_argument, "density matrix dimension must be positive");
  std::mt19937_64 rng(seed);
  return DensityMatrix(induced_density(dim, ancilla_dim > 0 ? ancilla_dim : dim, rng));
}

DensityMatrix random_separable_mixture(const LatticeSpec& lattice, int n_terms, std::uint64_t seed) {
  const Eigen::Index d = lattice.local_dim();
  return mixture_of_products(lattice, n_terms, seed,
                             [d](std::mt19937_64& rng) { return induced_density(d, d, rng); });
}

DensityMatrix random_pure_product_mixture(const LatticeSpec& lattice, int n_terms, std::uint64_t seed) {
  const Eigen::Index d = lattice.local_dim();
  return mixture_of_products(lattice, n_terms, seed, [d](std::mt19937_64& rng) {
    const StateVector v = gaussian_vector(d, rng).normalized();
    return OperatorMatrix(v * v.adjoint());
  });
}

double variance_sum(const PureState& state, const LatticeSpec& lattice) {
  require(state.dim() == static_cast<Eigen::Index>(lattice.hilbert_dim()), ErrorCode::dimension_mismatch,
          "state dimension does not match the lattice");
  double total = 0.0;
  for (Axis axis : kAxes) {
    const SparseOperator m = total_component_sparse(axis, lattice);
    const StateVector mpsi = m * state.amplitudes();
    const double mean = state.amplitudes().dot(mpsi).real();
    total += mpsi.squaredNorm() - mean * mean;
  }
  return total;
}

double variance_sum(const DensityMatrix& state, const LatticeSpec& lattice) {
  require(state.dim() == static_cast<Eigen::Index>(lattice.hilbert_dim()), ErrorCode::dimension_mismatch,
          "state dimension does not match the lattice");
  double total = 0.0;
  for (Axis axis : kAxes) {
    const OperatorMatrix m = total_component(axis, lattice);
    const double mean = expectation(state, m).real();
    total += expectation(state, OperatorMatrix(m * m)).real() - mean * mean;
  }
  return total;
}

OperatorMatrix random_global_rotation(const LatticeSpec& lattice, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::Vector3d n;
  do {
    n = Eigen::Vector3d(normal(rng), normal(rng), normal(rng));
  } while (n.norm() < 1e-8);
  n.normalize();
  const double angle = std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng);

  const SpinTriple s = spin_matrices(lattice.spin());
  const OperatorMatrix generator = n.x() * s.x + n.y() * s.y + n.z() * s.z;
  Eigen::SelfAdjointEigenSolver<OperatorMatrix> solver(generator);
  Eigen::VectorXcd phases(solver.eigenvalues().size());
  for (Eigen::Index k = 0; k < phases.size(); ++k)
    phases(k) = std::exp(Complex(0.0, -angle * solver.eigenvalues()(k)));
  const OperatorMatrix local = solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();

  OperatorMatrix u = OperatorMatrix::Identity(1, 1);
  for (int site = 0; site < lattice.n_sites(); ++site) u = kron(u, local);
  return u;
}

PureState rotate(const PureState& state, const OperatorMatrix& unitary) {
  require(unitary.rows() == state.dim(), ErrorCode::dimension_mismatch, "rotation dimension differs from state");
  return PureState::normalized(unitary * state.amplitudes());
}

DensityMatrix rotate(const DensityMatrix& state, const OperatorMatrix& unitary) {
  require(unitary.rows() == state.dim(), ErrorCode::dimension_mismatch, "rotation dimension differs from state");
  OperatorMatrix rho = unitary * state.matrix() * unitary.adjoint();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(rho / rho.trace().real());
}

}  // namespace spinwit
