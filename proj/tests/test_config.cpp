#include <doctest.h>

#include <cmath>
#include <fstream>

#include "spinwit/config.hpp"
#include "spinwit/errors.hpp"

using namespace spinwit;

namespace {

std::string error_of(std::string_view text) {
  try {
    parse_config(text, "run.ini");
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

ErrorCode code_of(std::string_view text) {
  try {
    parse_config(text, "run.ini");
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::validation;
}

}  // namespace

TEST_CASE("full config round trip") {
  const RunConfig cfg = parse_config(R"(
# comment
[model]
kind = xxx_chain
n_sites = 6
spin = 1
J = 0.5
B = 0.25
field_axis = x
boundary = open

[sweep]
kind = temperature
T_min = 0.1
T_max = 2
T_points = 20
T_spacing = log

[critical]
T_lo = 0.5
T_hi = 3 ; trailing comment
tol = 1e-5

[output]
path = out.json
format = json

[run]
seed = 99
workers = 3

[tolerances]
degeneracy = 1e-8
hermiticity = 1e-11
)");
  CHECK(cfg.model.kind == ModelKind::xxx_chain);
  CHECK(cfg.model.lattice.n_sites() == 6);
  CHECK(cfg.model.lattice.spin().two_s == 2);
  CHECK(cfg.model.J == 0.5);
  CHECK(cfg.model.B == 0.25);
  CHECK(cfg.model.field_axis == Axis::x);
  CHECK(cfg.model.boundary == Boundary::open);
  CHECK(cfg.sweep == SweepKind::temperature);
  CHECK(cfg.T_range.spacing == Spacing::log);
  CHECK(cfg.critical.T_hi == 3.0);
  CHECK(cfg.critical.tol == 1e-5);
  CHECK(cfg.output_path == "out.json");
  CHECK(cfg.format == OutputFormat::json);
  CHECK(cfg.seed == 99);
  CHECK(cfg.workers == 3);
  CHECK(cfg.tolerances.degeneracy == 1e-8);
  CHECK(cfg.tolerances.hermiticity == 1e-11);

  const auto points = cfg.T_range.points();
  REQUIRE(points.size() == 20);
  CHECK(points.front() == 0.1);
  CHECK(points.back() == 2.0);
  CHECK(points[1] / points[0] == doctest::Approx(points[2] / points[1]));
}

TEST_CASE("defaults and other model kinds") {
  const RunConfig dimer = parse_config("[model]\nkind = dimer_chain\nn_dimers = 3\nJ = 2\n");
  CHECK(dimer.model.lattice.n_sites() == 6);
  CHECK(dimer.model.pauli_convention);
  CHECK(!dimer.sweep.has_value());
  CHECK(dimer.format == OutputFormat::csv);
  CHECK(dimer.workers == 1);

  const RunConfig general =
      parse_config("[model]\nkind = heisenberg_general\nn_sites = 4\nspin = 3/2\ncouplings = 0-1:1.0, 1-3:-0.5, 2-3:2\n");
  CHECK(general.model.lattice.spin().two_s == 3);
  REQUIRE(general.model.lattice.couplings().size() == 3);
  CHECK(general.model.lattice.couplings()[1].j == 3);
  CHECK(general.model.lattice.couplings()[1].J == -0.5);

  const RunConfig chain = parse_config("[model]\nkind = xxx_chain\nn_sites = 4\n");
  CHECK(chain.model.boundary == Boundary::periodic);
  CHECK(chain.model.lattice.spin().two_s == 1);
}

TEST_CASE("diagnostics carry line and key") {
  CHECK(error_of("[model]\nkind = xxx_chain\nn_sites = four\n").find("run.ini:3: [model] n_sites") == 0);
  CHECK(error_of("[model]\nkind = xxx_chain\nn_sites = 4\ncolour = red\n").find("run.ini:4") == 0);
  CHECK(error_of("[model]\nkind = xxx_chain\nn_sites = 4\nn_sites = 5\n").find("duplicate") != std::string::npos);
  CHECK(error_of("[mode]\nkind = xxx_chain\n").find("run.ini:1") == 0);
  CHECK(error_of("[model]\nkind xxx_chain\n").find("run.ini:2") == 0);
  CHECK(!error_of("[model]\nn_sites = 4\n").empty());  // kind missing
  CHECK(!error_of("[model]\nkind = xxx_chain\nn_sites = 4\n[sweep]\nT_min = 2\nT_max = 1\n").empty());
  CHECK(!error_of("[model]\nkind = xxx_chain\nn_sites = 4\n[sweep]\nT_points = 1\n").empty());
  CHECK(!error_of("[model]\nkind = xxx_chain\nn_sites = 4\n[sweep]\nT_min = 0\n").empty());
  CHECK(!error_of("[model]\nkind = xxx_chain\nn_sites = 4\n[output]\nformat = xml\n").empty());
  CHECK(!error_of("[model]\nkind = xxx_chain\nn_sites = 4\n[run]\nworkers = 0\n").empty());
  CHECK(!error_of("[model]\nkind = dimer_chain\nn_dimers = 0\n").empty());
  CHECK(code_of("[model]\nkind = xxx_chain\nn_sites = 4\ncolour = red\n") == ErrorCode::config);
}

TEST_CASE("dimension cap keeps its own error code") {
  CHECK(code_of("[model]\nkind = xxx_chain\nn_sites = 17\n") == ErrorCode::resource_cap);
  CHECK(code_of("[model]\nkind = xxx_chain\nn_sites = 11\nspin = 1\n") == ErrorCode::resource_cap);
  CHECK(code_of("[model]\nkind = xxx_chain\nn_sites = 9\n[tolerances]\ndimension_cap = 256\n") ==
        ErrorCode::resource_cap);
}

TEST_CASE("load_config reports missing files") {
  try {
    load_config("/nonexistent/run.ini");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::config);
  }
  const std::string path = "spinwit_test_config.ini";
  std::ofstream(path) << "[model]\nkind = dimer_chain\n";
  CHECK(load_config(path).model.kind == ModelKind::dimer_chain);
  std::remove(path.c_str());
}
