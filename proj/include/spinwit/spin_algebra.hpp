#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace spinwit {

using Complex = std::complex<double>;
using OperatorMatrix = Eigen::MatrixXcd;
using SparseOperator = Eigen::SparseMatrix<Complex>;
using StateVector = Eigen::VectorXcd;

enum class Axis { x = 0, y = 1, z = 2 };
inline constexpr std::array<Axis, 3> kAxes{Axis::x, Axis::y, Axis::z};

std::string_view axis_name(Axis axis);
Axis parse_axis(std::string_view name);

// Spin length stored as the integer 2s so half-integer spins stay exact.
struct SpinLength {
  int two_s = 1;

  double value() const { return 0.5 * two_s; }
  int local_dim() const { return two_s + 1; }

  friend bool operator==(const SpinLength&, const SpinLength&) = default;
};

struct Coupling {
  int i = 0;
  int j = 0;
  double J = 0.0;
};

inline constexpr std::size_t kDefaultDimensionCap = std::size_t{1} << 16;

// Sites are tensor slots; site 0 is the leftmost Kronecker factor, so the
// basis index of |k_0 k_1 ... k_{N-1}> is sum_i k_i d^{N-1-i}. Local index k
// corresponds to magnetic number m = s - k.
class LatticeSpec {
 public:
  LatticeSpec(int n_sites, SpinLength spin, std::vector<Coupling> couplings = {},
              std::size_t dimension_cap = kDefaultDimensionCap);

  int n_sites() const { return n_sites_; }
  SpinLength spin() const { return spin_; }
  int local_dim() const { return spin_.local_dim(); }
  const std::vector<Coupling>& couplings() const { return couplings_; }
  std::size_t hilbert_dim() const { return hilbert_dim_; }
  std::size_t dimension_cap() const { return dimension_cap_; }

  // N*s, the largest eigenvalue of any total spin component.
  double total_spin() const { return n_sites_ * spin_.value(); }

  // Distance in the basis index between neighbouring local states of `site`.
  std::size_t stride(int site) const;

  LatticeSpec with_couplings(std::vector<Coupling> couplings) const;

 private:
  int n_sites_;
  SpinLength spin_;
  std::vector<Coupling> couplings_;
  std::size_t dimension_cap_;
  std::size_t hilbert_dim_;
};

struct SpinTriple {
  OperatorMatrix x, y, z;

  const OperatorMatrix& operator[](Axis axis) const;
};

SpinTriple spin_matrices(SpinLength spin);
OperatorMatrix spin_matrix(SpinLength spin, Axis axis);

// I ⊗ ... ⊗ local ⊗ ... ⊗ I with `local` in slot `site`.
OperatorMatrix embed(const OperatorMatrix& local, int site, const LatticeSpec& lattice);

// target += coeff * embed(a, site_a) * embed(b, site_b), assembled without
// forming either full-size factor. Requires site_a != site_b.
void accumulate_pair(OperatorMatrix& target, Complex coeff, const OperatorMatrix& a, int site_a,
                     const OperatorMatrix& b, int site_b, const LatticeSpec& lattice);

// target += coeff * embed(local, site).
void accumulate_local(OperatorMatrix& target, Complex coeff, const OperatorMatrix& local, int site,
                      const LatticeSpec& lattice);

// M_axis = sum_i S_axis^i.
OperatorMatrix total_component(Axis axis, const LatticeSpec& lattice);
SparseOperator total_component_sparse(Axis axis, const LatticeSpec& lattice);

// M_x^2 + M_y^2 + M_z^2.
OperatorMatrix total_spin_casimir(const LatticeSpec& lattice);

double hermiticity_defect(const OperatorMatrix& a);
OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);

}  // namespace spinwit
