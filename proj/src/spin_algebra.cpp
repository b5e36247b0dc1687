#include "spinwit/spin_algebra.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "spinwit/errors.hpp"

namespace spinwit {

std::string_view axis_name(Axis axis) {
  switch (axis) {
    case Axis::x: return "x";
    case Axis::y: return "y";
    case Axis::z: return "z";
  }
  return "?";
}

Axis parse_axis(std::string_view name) {
  if (name == "x") return Axis::x;
  if (name == "y") return Axis::y;
  if (name == "z") return Axis::z;
  fail(ErrorCode::invalid_argument, "unknown axis '" + std::string(name) + "' (expected x, y or z)");
}

LatticeSpec::LatticeSpec(int n_sites, SpinLength spin, std::vector<Coupling> couplings,
                         std::size_t dimension_cap)
    : n_sites_(n_sites), spin_(spin), couplings_(std::move(couplings)), dimension_cap_(dimension_cap) {
  require(n_sites_ >= 1, ErrorCode::invalid_argument, "lattice needs at least one site");
  require(spin_.two_s >= 1, ErrorCode::invalid_argument, "trivial site: spin length 2s must be >= 1");
  for (const auto& c : couplings_) {
    require(c.i >= 0 && c.i < c.j && c.j < n_sites_, ErrorCode::index_out_of_range,
            "coupling (" + std::to_string(c.i) + "," + std::to_string(c.j) +
                ") violates 0 <= i < j < N with N=" + std::to_string(n_sites_));
    require(std::isfinite(c.J), ErrorCode::invalid_argument, "coupling constant must be finite");
  }
  const auto d = static_cast<std::size_t>(spin_.local_dim());
  std::size_t dim = 1;
  for (int site = 0; site < n_sites_; ++site) {
    dim *= d;
    require(dim <= dimension_cap_, ErrorCode::resource_cap,
            "Hilbert space dimension (" + std::to_string(d) + ")^" + std::to_string(n_sites_) +
                " exceeds the dimension cap " + std::to_string(dimension_cap_));
  }
  hilbert_dim_ = dim;
}

std::size_t LatticeSpec::stride(int site) const {
  require(site >= 0 && site < n_sites_, ErrorCode::index_out_of_range,
          "site " + std::to_string(site) + " out of range for N=" + std::to_string(n_sites_));
  std::size_t s = 1;
  for (int k = site + 1; k < n_sites_; ++k) s *= static_cast<std::size_t>(local_dim());
  return s;
}

LatticeSpec LatticeSpec::with_couplings(std::vector<Coupling> couplings) const {
  return LatticeSpec(n_sites_, spin_, std::move(couplings), dimension_cap_);
}

const OperatorMatrix& SpinTriple::operator[](Axis axis) const {
  switch (axis) {
    case Axis::x: return x;
    case Axis::y: return y;
    case Axis::z: return z;
  }
  return z;
}

SpinTriple spin_matrices(SpinLength spin) {
  require(spin.two_s >= 1, ErrorCode::invalid_argument, "trivial site: spin length 2s must be >= 1");
  const int d = spin.local_dim();
  const double s = spin.value();

  // <m+1|S+|m> = sqrt(s(s+1) - m(m+1)); row k holds m = s - k.
  Eigen::MatrixXd raise = Eigen::MatrixXd::Zero(d, d);
  for (int k = 1; k < d; ++k) {
    const double m = s - k;
    raise(k - 1, k) = std::sqrt(s * (s + 1) - m * (m + 1));
  }
  const Eigen::MatrixXd lower = raise.transpose();

  SpinTriple out;
  out.x = (0.5 * (raise + lower)).cast<Complex>();
  out.y = (Complex(0.0, -0.5) * (raise - lower).cast<Complex>());
  out.z = OperatorMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) out.z(k, k) = s - k;
  return out;
}

OperatorMatrix spin_matrix(SpinLength spin, Axis axis) { return spin_matrices(spin)[axis]; }

namespace {

void check_local(const OperatorMatrix& local, int site, const LatticeSpec& lattice) {
  require(local.rows() == lattice.local_dim() && local.cols() == lattice.local_dim(),
          ErrorCode::dimension_mismatch,
          "local operator is " + std::to_string(local.rows()) + "x" + std::to_string(local.cols()) +
              " but the site dimension is " + std::to_string(lattice.local_dim()));
  require(site >= 0 && site < lattice.n_sites(), ErrorCode::index_out_of_range,
          "site " + std::to_string(site) + " out of range for N=" + std::to_string(lattice.n_sites()));
}

void check_target(const OperatorMatrix& target, const LatticeSpec& lattice) {
  const auto dim = static_cast<Eigen::Index>(lattice.hilbert_dim());
  require(target.rows() == dim && target.cols() == dim, ErrorCode::dimension_mismatch,
          "operator dimension " + std::to_string(target.rows()) + " does not match lattice dimension " +
              std::to_string(dim));
}

// Visits every nonzero matrix element of embed(local, site) as (row, col, value).
template <typename Fn>
void for_each_local_element(const OperatorMatrix& local, int site, const LatticeSpec& lattice, Fn&& fn) {
  const auto d = static_cast<Eigen::Index>(lattice.local_dim());
  const auto stride = static_cast<Eigen::Index>(lattice.stride(site));
  const auto dim = static_cast<Eigen::Index>(lattice.hilbert_dim());
  for (Eigen::Index col = 0; col < dim; ++col) {
    const Eigen::Index k = (col / stride) % d;
    for (Eigen::Index kp = 0; kp < d; ++kp) {
      const Complex v = local(kp, k);
      if (v != Complex(0.0)) fn(col + (kp - k) * stride, col, v);
    }
  }
}

}  // namespace

OperatorMatrix embed(const OperatorMatrix& local, int site, const LatticeSpec& lattice) {
  check_local(local, site, lattice);
  const auto dim = static_cast<Eigen::Index>(lattice.hilbert_dim());
  OperatorMatrix out = OperatorMatrix::Zero(dim, dim);
  for_each_local_element(local, site, lattice,
                         [&](Eigen::Index r, Eigen::Index c, Complex v) { out(r, c) = v; });
  return out;
}

void accumulate_local(OperatorMatrix& target, Complex coeff, const OperatorMatrix& local, int site,
                      const LatticeSpec& lattice) {
  check_local(local, site, lattice);
  check_target(target, lattice);
  for_each_local_element(local, site, lattice,
                         [&](Eigen::Index r, Eigen::Index c, Complex v) { target(r, c) += coeff * v; });
}

void accumulate_pair(OperatorMatrix& target, Complex coeff, const OperatorMatrix& a, int site_a,
                     const OperatorMatrix& b, int site_b, const LatticeSpec& lattice) {
  check_local(a, site_a, lattice);
  check_local(b, site_b, lattice);
  check_target(target, lattice);
  require(site_a != site_b, ErrorCode::invalid_argument, "pair term needs two distinct sites");

  const auto d = static_cast<Eigen::Index>(lattice.local_dim());
  const auto stride_a = static_cast<Eigen::Index>(lattice.stride(site_a));
  const auto stride_b = static_cast<Eigen::Index>(lattice.stride(site_b));
  const auto dim = static_cast<Eigen::Index>(lattice.hilbert_dim());
  for (Eigen::Index col = 0; col < dim; ++col) {
    const Eigen::Index ka = (col / stride_a) % d;
    const Eigen::Index kb = (col / stride_b) % d;
    for (Eigen::Index kap = 0; kap < d; ++kap) {
      const Complex va = a(kap, ka);
      if (va == Complex(0.0)) continue;
      for (Eigen::Index kbp = 0; kbp < d; ++kbp) {
        const Complex vb = b(kbp, kb);
        if (vb == Complex(0.0)) continue;
        target(col + (kap - ka) * stride_a + (kbp - kb) * stride_b, col) += coeff * va * vb;
      }
    }
  }
}

OperatorMatrix total_component(Axis axis, const LatticeSpec& lattice) {
  const auto dim = static_cast<Eigen::Index>(lattice.hilbert_dim());
  const OperatorMatrix local = spin_matrix(lattice.spin(), axis);
  OperatorMatrix out = OperatorMatrix::Zero(dim, dim);
  for (int site = 0; site < lattice.n_sites(); ++site) accumulate_local(out, 1.0, local, site, lattice);
  return out;
}

SparseOperator total_component_sparse(Axis axis, const LatticeSpec& lattice) {
  const auto dim = static_cast<Eigen::Index>(lattice.hilbert_dim());
  const OperatorMatrix local = spin_matrix(lattice.spin(), axis);
  std::vector<Eigen::Triplet<Complex>> triplets;
  triplets.reserve(static_cast<std::size_t>(dim) * lattice.n_sites() * 2);
  for (int site = 0; site < lattice.n_sites(); ++site) {
    for_each_local_element(local, site, lattice, [&](Eigen::Index r, Eigen::Index c, Complex v) {
      triplets.emplace_back(r, c, v);
    });
  }
  SparseOperator out(dim, dim);
  out.setFromTriplets(triplets.begin(), triplets.end());
  out.makeCompressed();
  return out;
}

OperatorMatrix total_spin_casimir(const LatticeSpec& lattice) {
  const auto dim = static_cast<Eigen::Index>(lattice.hilbert_dim());
  OperatorMatrix out = OperatorMatrix::Zero(dim, dim);
  for (Axis axis : kAxes) {
    const SparseOperator m = total_component_sparse(axis, lattice);
    out += OperatorMatrix(m * m);
  }
  return out;
}

double hermiticity_defect(const OperatorMatrix& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  if (a.size() == 0) return 0.0;
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) { return a * b - b * a; }

}  // namespace spinwit
