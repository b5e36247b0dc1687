#include "spinwit/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "spinwit/errors.hpp"

namespace spinwit {

std::string_view sweep_kind_name(SweepKind kind) {
  switch (kind) {
    case SweepKind::temperature: return "temperature";
    case SweepKind::field: return "field";
    case SweepKind::grid: return "grid";
  }
  return "?";
}

std::string_view output_format_name(OutputFormat format) { return format == OutputFormat::json ? "json" : "csv"; }

OutputFormat parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  fail(ErrorCode::config, "unknown output format '" + std::string(name) + "' (expected csv or json)");
}

std::vector<double> Range::points() const {
  require(n_points >= 2 && lo < hi, ErrorCode::config, "range needs lo < hi and at least 2 points");
  std::vector<double> out(static_cast<std::size_t>(n_points));
  for (int k = 0; k < n_points; ++k) {
    const double f = static_cast<double>(k) / (n_points - 1);
    if (spacing == Spacing::log) {
      require(lo > 0.0, ErrorCode::config, "log spacing needs lo > 0");
      out[static_cast<std::size_t>(k)] = std::exp(std::log(lo) + f * (std::log(hi) - std::log(lo)));
    } else {
      out[static_cast<std::size_t>(k)] = lo + f * (hi - lo);
    }
  }
  // Pin the endpoints exactly.
  out.front() = lo;
  out.back() = hi;
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

struct Entry {
  std::string value;
  int line = 0;
  bool used = false;
};

class Document {
 public:
  Document(std::string_view text, std::string_view source) : source_(source) {
    std::string section;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto end = text.find('\n', pos);
      std::string_view raw = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
      pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
      ++line_no;
      const auto comment = raw.find_first_of("#;");
      std::string_view line = trim(raw.substr(0, comment));
      if (line.empty()) continue;
      if (line.front() == '[') {
        if (line.back() != ']') error(line_no, "", "", "malformed section header");
        section = std::string(trim(line.substr(1, line.size() - 2)));
        if (!kKnown.contains(section)) error(line_no, section, "", "unknown section");
        continue;
      }
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) error(line_no, section, "", "expected 'key = value'");
      if (section.empty()) error(line_no, "", "", "key outside of any section");
      const std::string key(trim(line.substr(0, eq)));
      const std::string value(trim(line.substr(eq + 1)));
      if (key.empty()) error(line_no, section, "", "empty key");
      auto& slot = entries_[section];
      if (slot.contains(key)) error(line_no, section, key, "duplicate key");
      slot[key] = Entry{value, line_no, false};
    }
  }

  [[noreturn]] void error(int line, std::string_view section, std::string_view key, std::string_view what,
                          ErrorCode code = ErrorCode::config) const {
    std::ostringstream os;
    os << source_;
    if (line > 0) os << ':' << line;
    os << ": ";
    if (!section.empty()) os << '[' << section << "] ";
    if (!key.empty()) os << key << ": ";
    os << what;
    throw Error(code, os.str());
  }

  const Entry* find(const std::string& section, const std::string& key) {
    auto s = entries_.find(section);
    if (s == entries_.end()) return nullptr;
    auto k = s->second.find(key);
    if (k == s->second.end()) return nullptr;
    k->second.used = true;
    return &k->second;
  }

  std::optional<std::string> text(const std::string& section, const std::string& key) {
    const Entry* e = find(section, key);
    return e ? std::optional<std::string>(e->value) : std::nullopt;
  }

  std::optional<double> number(const std::string& section, const std::string& key) {
    const Entry* e = find(section, key);
    if (!e) return std::nullopt;
    double v = 0.0;
    const char* first = e->value.data();
    const char* last = first + e->value.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || !std::isfinite(v))
      error(e->line, section, key, "expected a finite number, got '" + e->value + "'");
    return v;
  }

  std::optional<long long> integer(const std::string& section, const std::string& key) {
    const Entry* e = find(section, key);
    if (!e) return std::nullopt;
    long long v = 0;
    const char* first = e->value.data();
    const char* last = first + e->value.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) error(e->line, section, key, "expected an integer, got '" + e->value + "'");
    return v;
  }

  std::optional<bool> boolean(const std::string& section, const std::string& key) {
    const Entry* e = find(section, key);
    if (!e) return std::nullopt;
    if (e->value == "true" || e->value == "1" || e->value == "yes") return true;
    if (e->value == "false" || e->value == "0" || e->value == "no") return false;
    error(e->line, section, key, "expected true or false, got '" + e->value + "'");
  }

  int line_of(const std::string& section, const std::string& key) {
    const Entry* e = find(section, key);
    return e ? e->line : 0;
  }

  // Re-throws library errors raised while interpreting a key with its location.
  template <typename Fn>
  auto at(const std::string& section, const std::string& key, Fn&& fn) -> decltype(fn()) {
    try {
      return fn();
    } catch (const Error& e) {
      const ErrorCode code = e.code() == ErrorCode::resource_cap ? ErrorCode::resource_cap : ErrorCode::config;
      error(line_of(section, key), section, key, e.what(), code);
    }
  }

  void reject_unused() const {
    for (const auto& [section, keys] : entries_)
      for (const auto& [key, entry] : keys)
        if (!entry.used) error(entry.line, section, key, "unknown key");
  }

 private:
  inline static const std::set<std::string> kKnown{"model", "sweep", "critical", "output", "run", "tolerances"};
  std::string source_;
  std::map<std::string, std::map<std::string, Entry>> entries_;
};

SpinLength parse_spin(std::string_view text) {
  const auto slash = text.find('/');
  int numerator = 0;
  int denominator = 1;
  auto parse_int = [&](std::string_view s, int& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
  };
  const bool ok = slash == std::string_view::npos
                      ? parse_int(text, numerator)
                      : parse_int(text.substr(0, slash), numerator) && parse_int(text.substr(slash + 1), denominator);
  require(ok && (denominator == 1 || denominator == 2) && numerator > 0, ErrorCode::config,
          "spin must look like 1/2, 1, 3/2, ...");
  return SpinLength{denominator == 2 ? numerator : 2 * numerator};
}

std::vector<Coupling> parse_couplings(std::string_view text) {
  // "i-j:J, i-j:J, ..."
  std::vector<Coupling> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view item = trim(text.substr(pos, comma - pos));
    pos = comma + 1;
    if (item.empty()) continue;
    const auto dash = item.find('-');
    const auto colon = item.find(':');
    require(dash != std::string_view::npos && colon != std::string_view::npos && dash < colon, ErrorCode::config,
            "coupling '" + std::string(item) + "' is not of the form i-j:J");
    Coupling c;
    const std::string_view si = trim(item.substr(0, dash));
    const std::string_view sj = trim(item.substr(dash + 1, colon - dash - 1));
    const std::string_view sJ = trim(item.substr(colon + 1));
    auto r1 = std::from_chars(si.data(), si.data() + si.size(), c.i);
    auto r2 = std::from_chars(sj.data(), sj.data() + sj.size(), c.j);
    auto r3 = std::from_chars(sJ.data(), sJ.data() + sJ.size(), c.J);
    require(r1.ec == std::errc() && r2.ec == std::errc() && r3.ec == std::errc() &&
                r1.ptr == si.data() + si.size() && r2.ptr == sj.data() + sj.size() &&
                r3.ptr == sJ.data() + sJ.size(),
            ErrorCode::config, "coupling '" + std::string(item) + "' is not of the form i-j:J");
    if (c.i > c.j) std::swap(c.i, c.j);
    out.push_back(c);
  }
  return out;
}

Spacing parse_spacing(std::string_view s) {
  if (s == "linear") return Spacing::linear;
  if (s == "log") return Spacing::log;
  fail(ErrorCode::config, "spacing must be linear or log");
}

SweepKind parse_sweep_kind(std::string_view s) {
  if (s == "temperature") return SweepKind::temperature;
  if (s == "field") return SweepKind::field;
  if (s == "grid") return SweepKind::grid;
  fail(ErrorCode::config, "sweep kind must be temperature, field or grid");
}

}  // namespace

RunConfig parse_config(std::string_view text, std::string_view source_name) {
  Document doc(text, source_name);
  RunConfig cfg;

  if (auto v = doc.number("tolerances", "degeneracy")) cfg.tolerances.degeneracy = *v;
  if (auto v = doc.number("tolerances", "hermiticity")) cfg.tolerances.hermiticity = *v;
  std::size_t cap = kDefaultDimensionCap;
  if (auto v = doc.integer("tolerances", "dimension_cap")) {
    if (*v < 2) doc.error(doc.line_of("tolerances", "dimension_cap"), "tolerances", "dimension_cap", "must be >= 2");
    cap = static_cast<std::size_t>(*v);
  }
  if (cfg.tolerances.degeneracy < 0.0 || cfg.tolerances.hermiticity < 0.0)
    doc.error(0, "tolerances", "", "tolerances must be non-negative");

  const auto kind_text = doc.text("model", "kind");
  if (!kind_text) doc.error(0, "model", "kind", "missing required key");
  const ModelKind kind = doc.at("model", "kind", [&] { return parse_model_kind(*kind_text); });

  SpinLength spin{1};
  if (auto v = doc.text("model", "spin")) spin = doc.at("model", "spin", [&] { return parse_spin(*v); });
  if (auto v = doc.integer("model", "two_s")) {
    if (doc.line_of("model", "spin") != 0) doc.error(doc.line_of("model", "two_s"), "model", "two_s", "give either spin or two_s");
    spin = SpinLength{static_cast<int>(*v)};
  }
  const double J = doc.number("model", "J").value_or(1.0);
  const double B = doc.number("model", "B").value_or(0.0);
  const Axis axis = doc.at("model", "field_axis", [&] { return parse_axis(doc.text("model", "field_axis").value_or("z")); });

  switch (kind) {
    case ModelKind::dimer_chain: {
      long long n_dimers = 1;
      if (auto v = doc.integer("model", "n_dimers")) n_dimers = *v;
      if (auto v = doc.integer("model", "n_sites")) {
        if (*v % 2 != 0) doc.error(doc.line_of("model", "n_sites"), "model", "n_sites", "dimer chain needs an even number of sites");
        n_dimers = *v / 2;
      }
      if (spin.two_s != 1) doc.error(0, "model", "spin", "dimer chain is spin-1/2 only");
      const bool pauli = doc.boolean("model", "pauli_convention").value_or(true);
      cfg.model = doc.at("model", "n_dimers", [&] {
        return ModelSpec::dimer_chain(static_cast<int>(n_dimers), J, B, pauli, cap);
      });
      cfg.model.field_axis = axis;
      break;
    }
    case ModelKind::xxx_chain: {
      const auto n = doc.integer("model", "n_sites");
      if (!n) doc.error(0, "model", "n_sites", "missing required key");
      const Boundary boundary =
          doc.at("model", "boundary", [&] { return parse_boundary(doc.text("model", "boundary").value_or("periodic")); });
      cfg.model = doc.at("model", "n_sites", [&] {
        return ModelSpec::xxx_chain(static_cast<int>(*n), spin, J, boundary, cap);
      });
      cfg.model = cfg.model.with_field(B, axis);
      break;
    }
    case ModelKind::heisenberg_general: {
      const auto n = doc.integer("model", "n_sites");
      if (!n) doc.error(0, "model", "n_sites", "missing required key");
      const auto text_couplings = doc.text("model", "couplings");
      if (!text_couplings) doc.error(0, "model", "couplings", "missing required key");
      cfg.model = doc.at("model", "couplings", [&] {
        return ModelSpec::heisenberg(LatticeSpec(static_cast<int>(*n), spin, parse_couplings(*text_couplings), cap));
      });
      if (cfg.model.lattice.couplings().empty()) doc.error(doc.line_of("model", "couplings"), "model", "couplings", "needs at least one coupling");
      cfg.model = cfg.model.with_field(B, axis);
      break;
    }
  }

  if (auto v = doc.text("sweep", "kind")) cfg.sweep = doc.at("sweep", "kind", [&] { return parse_sweep_kind(*v); });
  if (auto v = doc.number("sweep", "T_min")) cfg.T_range.lo = *v;
  if (auto v = doc.number("sweep", "T_max")) cfg.T_range.hi = *v;
  if (auto v = doc.integer("sweep", "T_points")) cfg.T_range.n_points = static_cast<int>(*v);
  if (auto v = doc.text("sweep", "T_spacing")) cfg.T_range.spacing = doc.at("sweep", "T_spacing", [&] { return parse_spacing(*v); });
  if (auto v = doc.number("sweep", "B_min")) cfg.B_range.lo = *v;
  if (auto v = doc.number("sweep", "B_max")) cfg.B_range.hi = *v;
  if (auto v = doc.integer("sweep", "B_points")) cfg.B_range.n_points = static_cast<int>(*v);
  if (auto v = doc.text("sweep", "B_spacing")) cfg.B_range.spacing = doc.at("sweep", "B_spacing", [&] { return parse_spacing(*v); });
  if (auto v = doc.number("sweep", "T")) cfg.field_sweep_T = *v;

  if (!(cfg.T_range.lo > 0.0)) doc.error(doc.line_of("sweep", "T_min"), "sweep", "T_min", "must be > 0");
  if (!(cfg.T_range.lo < cfg.T_range.hi)) doc.error(doc.line_of("sweep", "T_max"), "sweep", "T_max", "must exceed T_min");
  if (cfg.T_range.n_points < 2) doc.error(doc.line_of("sweep", "T_points"), "sweep", "T_points", "must be >= 2");
  if (!(cfg.B_range.lo < cfg.B_range.hi)) doc.error(doc.line_of("sweep", "B_max"), "sweep", "B_max", "must exceed B_min");
  if (cfg.B_range.n_points < 2) doc.error(doc.line_of("sweep", "B_points"), "sweep", "B_points", "must be >= 2");
  if (cfg.B_range.spacing == Spacing::log && !(cfg.B_range.lo > 0.0))
    doc.error(doc.line_of("sweep", "B_spacing"), "sweep", "B_spacing", "log spacing needs B_min > 0");
  if (!(cfg.field_sweep_T > 0.0)) doc.error(doc.line_of("sweep", "T"), "sweep", "T", "must be > 0");

  if (auto v = doc.number("critical", "T_lo")) cfg.critical.T_lo = *v;
  if (auto v = doc.number("critical", "T_hi")) cfg.critical.T_hi = *v;
  if (auto v = doc.number("critical", "tol")) cfg.critical.tol = *v;
  if (!(cfg.critical.T_lo > 0.0 && cfg.critical.T_lo < cfg.critical.T_hi))
    doc.error(doc.line_of("critical", "T_lo"), "critical", "T_lo", "bracket must satisfy 0 < T_lo < T_hi");
  if (!(cfg.critical.tol > 0.0)) doc.error(doc.line_of("critical", "tol"), "critical", "tol", "must be > 0");

  if (auto v = doc.text("output", "path")) cfg.output_path = *v;
  if (auto v = doc.text("output", "format")) cfg.format = doc.at("output", "format", [&] { return parse_output_format(*v); });

  if (auto v = doc.integer("run", "seed")) {
    if (*v < 0) doc.error(doc.line_of("run", "seed"), "run", "seed", "must be non-negative");
    cfg.seed = static_cast<std::uint64_t>(*v);
  }
  if (auto v = doc.integer("run", "workers")) {
    if (*v < 1) doc.error(doc.line_of("run", "workers"), "run", "workers", "must be >= 1");
    cfg.workers = static_cast<int>(*v);
  }

  doc.reject_unused();
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorCode::config, "cannot open config file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), path.string());
}

}  // namespace spinwit
