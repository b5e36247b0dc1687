#include "spinwit/runs.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "spinwit/errors.hpp"
#include "spinwit/oracle.hpp"
#include "spinwit/parallel.hpp"

namespace spinwit {

using ordered_json = nlohmann::ordered_json;

std::shared_ptr<const ThermalSystem> SpectrumCache::get(const ModelSpec& model, const ThermalTolerances& tolerances) {
  char field[64];
  std::snprintf(field, sizeof field, "|B=%.17g", model.B);
  const std::string key = model.fingerprint() + field;

  std::promise<std::shared_ptr<const ThermalSystem>> promise;
  std::shared_future<std::shared_ptr<const ThermalSystem>> future;
  bool owner = false;
  {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(key);
    if (it == entries_.end()) {
      future = promise.get_future().share();
      entries_.emplace(key, future);
      owner = true;
    } else {
      future = it->second;
    }
  }
  if (owner) {
    try {
      promise.set_value(std::make_shared<const ThermalSystem>(ThermalSystem::from_model(model, tolerances)));
    } catch (...) {
      promise.set_exception(std::current_exception());
    }
  }
  return future.get();
}

std::size_t SpectrumCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

std::vector<TemperatureRow> sweep_temperature(const RunConfig& config) {
  const ThermalSystem system = ThermalSystem::from_model(config.model, config.tolerances);
  const auto temperatures = config.T_range.points();
  const LatticeSpec& lattice = system.lattice();
  std::vector<TemperatureRow> rows(temperatures.size());
  parallel_for(temperatures.size(), config.workers, [&](std::size_t k) {
    const double T = temperatures[k];
    TemperatureRow& row = rows[k];
    row.T = T;
    row.chi = susceptibilities(system, T);
    const WitnessReport w = witness_value(system, T);
    row.chi_bar = w.chi_bar;
    row.bound = w.bound;
    row.margin = w.margin;
    row.entangled = w.entangled;
    row.per_site_chi = row.chi.chi_z / lattice.n_sites();
    row.per_site_threshold = lattice.spin().value() / (3.0 * T);
  });
  return rows;
}

std::vector<FieldRow> sweep_field(const RunConfig& config, SpectrumCache* cache) {
  SpectrumCache local;
  SpectrumCache& spectra = cache ? *cache : local;
  const auto fields = config.B_range.points();
  const double T = config.field_sweep_T;
  std::vector<FieldRow> rows(fields.size());
  parallel_for(fields.size(), config.workers, [&](std::size_t k) {
    const auto system = spectra.get(config.model.with_field(fields[k], config.model.field_axis), config.tolerances);
    const ComplementarityPoint c = complementarity(*system, T, fields[k]);
    rows[k] = FieldRow{fields[k], T, c.P, c.Q, magnetization_vector(*system, T)};
  });
  return rows;
}

std::vector<GridRow> sweep_grid(const RunConfig& config, SpectrumCache* cache) {
  SpectrumCache local;
  SpectrumCache& spectra = cache ? *cache : local;
  const auto fields = config.B_range.points();
  const auto temperatures = config.T_range.points();
  std::vector<GridRow> rows(fields.size() * temperatures.size());
  parallel_for(fields.size(), config.workers, [&](std::size_t b) {
    const auto system = spectra.get(config.model.with_field(fields[b], config.model.field_axis), config.tolerances);
    for (std::size_t t = 0; t < temperatures.size(); ++t) {
      const ComplementarityPoint c = complementarity(*system, temperatures[t], fields[b]);
      rows[b * temperatures.size() + t] = GridRow{fields[b], temperatures[t], c.P, c.Q};
    }
  });
  return rows;
}

CriticalReport find_critical_temperature(const RunConfig& config) {
  CriticalReport report;
  report.search = config.critical;
  report.model = config.model;
  report.T_c = critical_temperature(config.model, config.critical.T_lo, config.critical.T_hi, config.critical.tol,
                                    config.tolerances);
  const int two_s = config.model.lattice.spin().two_s;
  if (config.model.kind == ModelKind::xxx_chain && config.model.B == 0.0 && config.model.J > 0.0) {
    if (two_s == 1) {
      report.reference_T_c = 1.6 * config.model.J;
      report.reference_note = "infinite spin-1/2 chain value; this run is a finite-size proxy";
    } else if (two_s == 2) {
      report.reference_T_c = 2.0 * config.model.J;
      report.reference_note = "infinite spin-1 chain value; this run is a finite-size proxy";
    }
  } else if (config.model.kind == ModelKind::dimer_chain && config.model.B == 0.0 && config.model.pauli_convention) {
    report.reference_T_c = oracle::dimer_witness_critical_temperature(config.model.J);
    report.reference_note = "closed form 4J/ln 3 for uncoupled dimers";
  }
  return report;
}

double locate_level_crossing(const ModelSpec& model, double B_lo, double B_hi, double tol,
                             ThermalTolerances tolerances) {
  require(B_lo < B_hi && tol > 0.0, ErrorCode::invalid_argument, "level crossing needs B_lo < B_hi and tol > 0");
  auto ground_m = [&](double B) {
    const ThermalSystem system = ThermalSystem::from_model(model.with_field(B, model.field_axis), tolerances);
    return magnetization(system, 0.0, model.field_axis);
  };
  const double reference = ground_m(B_lo);
  auto departed = [&](double B) { return std::abs(ground_m(B) - reference) > 1e-6; };
  require(departed(B_hi), ErrorCode::no_crossing, "ground state does not change inside the field bracket");
  double lo = B_lo, hi = B_hi;
  while (hi - lo >= tol) {
    const double mid = 0.5 * (lo + hi);
    if (departed(mid))
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

namespace {

// Value that prints with at most 12 significant digits in JSON.
double rounded(double value) { return std::strtod(format_number(value).c_str(), nullptr); }

ordered_json model_json(const ModelSpec& model) {
  ordered_json m;
  m["kind"] = std::string(model_kind_name(model.kind));
  m["n_sites"] = model.lattice.n_sites();
  m["two_s"] = model.lattice.spin().two_s;
  m["J"] = rounded(model.J);
  m["B"] = rounded(model.B);
  m["field_axis"] = std::string(axis_name(model.field_axis));
  if (model.kind == ModelKind::xxx_chain) m["boundary"] = std::string(boundary_name(model.boundary));
  if (model.kind == ModelKind::dimer_chain) m["pauli_convention"] = model.pauli_convention;
  return m;
}

class Table {
 public:
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void add(std::vector<ordered_json> cells) { rows_.push_back(std::move(cells)); }

  std::string render(OutputFormat format, std::string_view command, const ModelSpec& model) const {
    if (format == OutputFormat::json) {
      ordered_json doc;
      doc["schema_version"] = kSchemaVersion;
      doc["command"] = std::string(command);
      doc["model"] = model_json(model);
      doc["columns"] = columns_;
      ordered_json rows = ordered_json::array();
      for (const auto& cells : rows_) {
        ordered_json row;
        for (std::size_t c = 0; c < columns_.size(); ++c) row[columns_[c]] = cells[c];
        rows.push_back(std::move(row));
      }
      doc["rows"] = std::move(rows);
      return doc.dump(2) + "\n";
    }
    std::ostringstream os;
    for (std::size_t c = 0; c < columns_.size(); ++c) os << (c ? "," : "") << columns_[c];
    os << '\n';
    for (const auto& cells : rows_) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c) os << ',';
        const auto& cell = cells[c];
        if (cell.is_number_float())
          os << format_number(cell.get<double>());
        else if (cell.is_null())
          continue;
        else if (cell.is_string())
          os << cell.get<std::string>();
        else
          os << cell.dump();
      }
      os << '\n';
    }
    return os.str();
  }

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<ordered_json>> rows_;
};

ordered_json num(double v) { return rounded(v); }

}  // namespace

std::string render_temperature(const RunConfig& config, const std::vector<TemperatureRow>& rows) {
  Table table({"T", "chi_x", "chi_y", "chi_z", "chi_bar", "per_site_chi", "per_site_threshold", "bound", "margin",
               "entangled"});
  for (const auto& r : rows)
    table.add({num(r.T), num(r.chi.chi_x), num(r.chi.chi_y), num(r.chi.chi_z), num(r.chi_bar), num(r.per_site_chi),
               num(r.per_site_threshold), num(r.bound), num(r.margin), r.entangled});
  return table.render(config.format, "sweep-temperature", config.model);
}

std::string render_field(const RunConfig& config, const std::vector<FieldRow>& rows) {
  Table table({"B", "T", "P", "Q", "P_plus_Q", "M_x", "M_y", "M_z"});
  for (const auto& r : rows)
    table.add({num(r.B), num(r.T), num(r.P), num(r.Q), num(r.P + r.Q), num(r.m.x), num(r.m.y), num(r.m.z)});
  return table.render(config.format, "sweep-field", config.model);
}

std::string render_grid(const RunConfig& config, const std::vector<GridRow>& rows) {
  Table table({"B", "T", "P", "Q", "P_plus_Q"});
  for (const auto& r : rows) table.add({num(r.B), num(r.T), num(r.P), num(r.Q), num(r.P + r.Q)});
  return table.render(config.format, "grid", config.model);
}

std::string render_critical(const RunConfig& config, const CriticalReport& report) {
  Table table({"T_c", "T_lo", "T_hi", "tol", "n_sites", "two_s", "boundary", "reference_T_c", "reference_note"});
  const ModelSpec& m = report.model;
  const std::string boundary = m.kind == ModelKind::xxx_chain ? std::string(boundary_name(m.boundary)) : "none";
  table.add({num(report.T_c), num(report.search.T_lo), num(report.search.T_hi), num(report.search.tol),
             m.lattice.n_sites(), m.lattice.spin().two_s, boundary,
             report.reference_T_c ? num(*report.reference_T_c) : ordered_json(nullptr),
             report.reference_note});
  return table.render(config.format, "critical-temperature", config.model);
}

}  // namespace spinwit
