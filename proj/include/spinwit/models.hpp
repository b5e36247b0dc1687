#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "spinwit/spin_algebra.hpp"

namespace spinwit {

enum class ModelKind { heisenberg_general, xxx_chain, dimer_chain };
enum class Boundary { open, periodic };

std::string_view model_kind_name(ModelKind kind);
ModelKind parse_model_kind(std::string_view name);
std::string_view boundary_name(Boundary boundary);
Boundary parse_boundary(std::string_view name);

// Energies in units of J with hbar = k = 1. J > 0 is antiferromagnetic.
//
// For heisenberg_general and xxx_chain the exchange lives in lattice.couplings()
// and the field enters as B * M_axis (spin operators). For dimer_chain the
// intra-pair exchange and the field are written with Pauli matrices
// (sigma = 2s) when pauli_convention is set, i.e.
//   H = J sum_j sigma^{2j}.sigma^{2j+1} + B sum_i sigma_axis^i.
struct ModelSpec {
  ModelKind kind = ModelKind::heisenberg_general;
  LatticeSpec lattice{2, SpinLength{1}};
  Boundary boundary = Boundary::open;
  double J = 1.0;
  double B = 0.0;
  Axis field_axis = Axis::z;
  bool pauli_convention = true;

  static ModelSpec heisenberg(LatticeSpec lattice);
  static ModelSpec xxx_chain(int n_sites, SpinLength spin, double J, Boundary boundary,
                             std::size_t dimension_cap = kDefaultDimensionCap);
  static ModelSpec dimer_chain(int n_dimers, double J, double B, bool pauli_convention = true,
                               std::size_t dimension_cap = kDefaultDimensionCap);

  ModelSpec with_field(double field, Axis axis) const;

  // Stable text key identifying the Hamiltonian without its field value.
  std::string fingerprint() const;
};

std::vector<Coupling> chain_couplings(int n_sites, double J, Boundary boundary);

// sum_{(i,j)} J_ij S^i . S^j
OperatorMatrix build_heisenberg(const LatticeSpec& lattice);
OperatorMatrix build_xxx_chain(int n_sites, SpinLength spin, double J, Boundary boundary);
OperatorMatrix build_dimer_chain(int n_dimers, double J, double B, bool pauli_convention = true,
                                 Axis field_axis = Axis::z);

// H + B * M_axis (spin-operator convention).
OperatorMatrix add_zeeman(OperatorMatrix H, const LatticeSpec& lattice, Axis axis, double B);

// Full Hamiltonian of a model, field term included.
OperatorMatrix build_hamiltonian(const ModelSpec& model);

}  // namespace spinwit
