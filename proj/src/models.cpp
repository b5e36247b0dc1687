#include "spinwit/models.hpp"

#include <cstdio>
#include <string>

#include "spinwit/errors.hpp"

namespace spinwit {

std::string_view model_kind_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::heisenberg_general: return "heisenberg_general";
    case ModelKind::xxx_chain: return "xxx_chain";
    case ModelKind::dimer_chain: return "dimer_chain";
  }
  return "?";
}

ModelKind parse_model_kind(std::string_view name) {
  if (name == "heisenberg_general") return ModelKind::heisenberg_general;
  if (name == "xxx_chain") return ModelKind::xxx_chain;
  if (name == "dimer_chain") return ModelKind::dimer_chain;
  fail(ErrorCode::invalid_argument, "unknown model kind '" + std::string(name) +
                                        "' (expected heisenberg_general, xxx_chain or dimer_chain)");
}

std::string_view boundary_name(Boundary boundary) {
  return boundary == Boundary::periodic ? "periodic" : "open";
}

Boundary parse_boundary(std::string_view name) {
  if (name == "open") return Boundary::open;
  if (name == "periodic") return Boundary::periodic;
  fail(ErrorCode::invalid_argument, "unknown boundary '" + std::string(name) + "' (expected open or periodic)");
}

std::vector<Coupling> chain_couplings(int n_sites, double J, Boundary boundary) {
  require(n_sites >= 2, ErrorCode::invalid_argument, "xxx chain needs n >= 2 sites");
  std::vector<Coupling> out;
  for (int i = 0; i + 1 < n_sites; ++i) out.push_back({i, i + 1, J});
  // For n = 2 the closing bond would duplicate (0,1).
  if (boundary == Boundary::periodic && n_sites > 2) out.push_back({0, n_sites - 1, J});
  return out;
}

ModelSpec ModelSpec::heisenberg(LatticeSpec lattice) {
  ModelSpec m;
  m.kind = ModelKind::heisenberg_general;
  m.lattice = std::move(lattice);
  return m;
}

ModelSpec ModelSpec::xxx_chain(int n_sites, SpinLength spin, double J, Boundary boundary,
                               std::size_t dimension_cap) {
  ModelSpec m;
  m.kind = ModelKind::xxx_chain;
  m.lattice = LatticeSpec(n_sites, spin, chain_couplings(n_sites, J, boundary), dimension_cap);
  m.boundary = boundary;
  m.J = J;
  return m;
}

ModelSpec ModelSpec::dimer_chain(int n_dimers, double J, double B, bool pauli_convention,
                                 std::size_t dimension_cap) {
  require(n_dimers >= 1, ErrorCode::invalid_argument, "dimer chain needs at least one dimer");
  std::vector<Coupling> bonds;
  for (int j = 0; j < n_dimers; ++j) bonds.push_back({2 * j, 2 * j + 1, J});
  ModelSpec m;
  m.kind = ModelKind::dimer_chain;
  m.lattice = LatticeSpec(2 * n_dimers, SpinLength{1}, std::move(bonds), dimension_cap);
  m.J = J;
  m.B = B;
  m.pauli_convention = pauli_convention;
  return m;
}

ModelSpec ModelSpec::with_field(double field, Axis axis) const {
  ModelSpec m = *this;
  m.B = field;
  m.field_axis = axis;
  return m;
}

std::string ModelSpec::fingerprint() const {
  std::string key(model_kind_name(kind));
  char buf[64];
  std::snprintf(buf, sizeof buf, "|N=%d|2s=%d|", lattice.n_sites(), lattice.spin().two_s);
  key += buf;
  for (const auto& c : lattice.couplings()) {
    std::snprintf(buf, sizeof buf, "%d-%d:%.17g;", c.i, c.j, c.J);
    key += buf;
  }
  key += "|axis=";
  key += axis_name(field_axis);
  key += pauli_convention ? "|pauli" : "|spin";
  return key;
}

OperatorMatrix build_heisenberg(const LatticeSpec& lattice) {
  require(!lattice.couplings().empty(), ErrorCode::invalid_argument, "Heisenberg model needs at least one coupling");
  const auto dim = static_cast<Eigen::Index>(lattice.hilbert_dim());
  const SpinTriple s = spin_matrices(lattice.spin());
  OperatorMatrix H = OperatorMatrix::Zero(dim, dim);
  for (const auto& c : lattice.couplings()) {
    if (c.J == 0.0) continue;
    for (Axis a : kAxes) accumulate_pair(H, c.J, s[a], c.i, s[a], c.j, lattice);
  }
  return H;
}

OperatorMatrix build_xxx_chain(int n_sites, SpinLength spin, double J, Boundary boundary) {
  return build_heisenberg(LatticeSpec(n_sites, spin, chain_couplings(n_sites, J, boundary)));
}

namespace {

OperatorMatrix dimer_hamiltonian(const LatticeSpec& lattice, double B, bool pauli_convention, Axis field_axis) {
  // sigma = 2 s: exchange picks up 4, single-site field 2.
  const double exchange_scale = pauli_convention ? 4.0 : 1.0;
  const double field_scale = pauli_convention ? 2.0 : 1.0;

  const auto dim = static_cast<Eigen::Index>(lattice.hilbert_dim());
  const SpinTriple s = spin_matrices(lattice.spin());
  OperatorMatrix H = OperatorMatrix::Zero(dim, dim);
  for (const auto& c : lattice.couplings()) {
    for (Axis a : kAxes) accumulate_pair(H, exchange_scale * c.J, s[a], c.i, s[a], c.j, lattice);
  }
  if (B != 0.0) {
    for (int site = 0; site < lattice.n_sites(); ++site)
      accumulate_local(H, field_scale * B, s[field_axis], site, lattice);
  }
  return H;
}

}  // namespace

OperatorMatrix build_dimer_chain(int n_dimers, double J, double B, bool pauli_convention, Axis field_axis) {
  const ModelSpec model = ModelSpec::dimer_chain(n_dimers, J, B, pauli_convention);
  return dimer_hamiltonian(model.lattice, B, pauli_convention, field_axis);
}

OperatorMatrix add_zeeman(OperatorMatrix H, const LatticeSpec& lattice, Axis axis, double B) {
  const auto dim = static_cast<Eigen::Index>(lattice.hilbert_dim());
  require(H.rows() == dim && H.cols() == dim, ErrorCode::dimension_mismatch,
          "Hamiltonian dimension does not match the lattice");
  if (B == 0.0) return H;
  const OperatorMatrix local = spin_matrix(lattice.spin(), axis);
  for (int site = 0; site < lattice.n_sites(); ++site) accumulate_local(H, B, local, site, lattice);
  return H;
}

OperatorMatrix build_hamiltonian(const ModelSpec& model) {
  switch (model.kind) {
    case ModelKind::dimer_chain: {
      require(model.lattice.spin().two_s == 1 && model.lattice.n_sites() % 2 == 0, ErrorCode::invalid_argument,
              "dimer chain requires spin 1/2 and an even number of sites");
      return dimer_hamiltonian(model.lattice, model.B, model.pauli_convention, model.field_axis);
    }
    case ModelKind::xxx_chain:
      require(model.lattice.n_sites() >= 2, ErrorCode::invalid_argument, "xxx chain needs n >= 2 sites");
      [[fallthrough]];
    case ModelKind::heisenberg_general:
      return add_zeeman(build_heisenberg(model.lattice), model.lattice, model.field_axis, model.B);
  }
  fail(ErrorCode::invalid_argument, "unknown model kind");
}

}  // namespace spinwit
