#include "fluct/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include <fmt/format.h>
#include <json.hpp>

#include "fluct/cavity.hpp"
#include "fluct/errors.hpp"
#include "fluct/lamb.hpp"
#include "fluct/manybody.hpp"
#include "fluct/pairwise.hpp"

namespace fluct::cli {

using nlohmann::json;

namespace {

// ---- parsing --------------------------------------------------------------

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (const auto pos = what.find(": syntax error"); pos != std::string::npos) what = what.substr(pos + 2);
    throw ConfigError(fmt::format("config parse error at line {}, column {}: {}", line, column, what));
  }
}

[[noreturn]] void bad(const std::string& path, const std::string& message) {
  throw ConfigError(fmt::format("config {}: {}", path, message));
}

const json& member(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) bad(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) bad(path, "missing key \"" + key + "\"");
  return *it;
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) bad(path, "expected a number");
  return j.get<double>();
}

double number_or(const json& obj, const std::string& key, double fallback, const std::string& path) {
  const auto it = obj.find(key);
  return it == obj.end() ? fallback : number(*it, path + "/" + key);
}

Vector3 vec3(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 3) bad(path, "expected [x, y, z]");
  return {number(j[0], path + "/0"), number(j[1], path + "/1"), number(j[2], path + "/2")};
}

std::string text_or(const json& obj, const std::string& key, const std::string& fallback, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_string()) bad(path + "/" + key, "expected a string");
  return it->get<std::string>();
}

struct Units {
  double length = 1.0;       // config length -> bohr
  double energy = 1.0;       // config energy -> hartree
  Unit temperature = Unit::hartree_temperature;
};

Units read_units(const json& config) {
  Units u;
  const auto it = config.find("units");
  if (it == config.end()) return u;
  const auto pick = [&](const char* key, const char* fallback, Dimension want) {
    const std::string tag = text_or(*it, key, fallback, "/units");
    Unit unit{};
    try {
      unit = parse_unit(tag);
    } catch (const Error&) {
      bad(std::string("/units/") + key, "unknown unit \"" + tag + "\"");
    }
    if (dimension_of(unit) != want) bad(std::string("/units/") + key, "unit \"" + tag + "\" has the wrong dimension");
    return unit;
  };
  u.length = convert(1.0, pick("length", "bohr", Dimension::length), Unit::bohr);
  u.energy = convert(1.0, pick("energy", "hartree", Dimension::energy), Unit::hartree);
  u.temperature = pick("temperature", "hartree_temperature", Dimension::temperature);
  return u;
}

PolarizabilityModel read_model(const json& j, const Units& u, const std::string& path) {
  const std::string type = text_or(j, "type", "", path);
  if (type == "single_resonance") {
    const double l3 = u.length * u.length * u.length;
    return PolarizabilityModel::single_resonance(number(member(j, "alpha", path), path + "/alpha") * l3,
                                                 number(member(j, "omega", path), path + "/omega") * u.energy);
  }
  if (type == "kramers_heisenberg") {
    const json& list = member(j, "transitions", path);
    if (!list.is_array()) bad(path + "/transitions", "expected an array");
    std::vector<Transition> t;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string p = fmt::format("{}/transitions/{}", path, i);
      t.push_back({number(member(list[i], "omega", p), p + "/omega") * u.energy,
                   number(member(list[i], "d2", p), p + "/d2") * u.length * u.length});
    }
    return PolarizabilityModel::kramers_heisenberg(std::move(t));
  }
  if (type == "free_electron") return PolarizabilityModel::free_electron();
  bad(path + "/type", "expected single_resonance, kramers_heisenberg or free_electron");
}

const json& atoms_of(const json& config) {
  const json& atoms = member(config, "atoms", "");
  if (!atoms.is_array() || atoms.empty()) bad("/atoms", "expected a non-empty array");
  return atoms;
}

std::vector<Site> read_sites(const json& config, const Units& u) {
  std::vector<Site> sites;
  const json& atoms = atoms_of(config);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const std::string p = fmt::format("/atoms/{}", i);
    sites.push_back({vec3(member(atoms[i], "position", p), p + "/position") * u.length,
                     read_model(member(atoms[i], "model", p), u, p + "/model")});
  }
  return sites;
}

const json& mode_of(const json& config) {
  static const json empty = json::object();
  const auto it = config.find("mode");
  if (it == config.end()) return empty;
  if (!it->is_object()) bad("/mode", "expected an object");
  return *it;
}

CavitySystem read_cavity(const json& config, const Units& u, int& n_max) {
  const json& atoms = atoms_of(config);
  std::vector<TwoStateAtom> two_state;
  std::vector<Vector3> positions;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const std::string p = fmt::format("/atoms/{}", i);
    positions.push_back(vec3(member(atoms[i], "position", p), p + "/position") * u.length);
    two_state.push_back({number(member(atoms[i], "omega", p), p + "/omega") * u.energy,
                         vec3(member(atoms[i], "dipole", p), p + "/dipole") * u.length});
  }
  const json& mode = mode_of(config);
  CavityMode m;
  m.omega = number(member(mode, "omega", "/mode"), "/mode/omega") * u.energy;
  m.e_hat = vec3(member(mode, "polarization", "/mode"), "/mode/polarization");
  const json& amps = member(mode, "amplitudes", "/mode");
  if (!amps.is_array()) bad("/mode/amplitudes", "expected an array");
  for (std::size_t i = 0; i < amps.size(); ++i) m.amplitudes.push_back(number(amps[i], fmt::format("/mode/amplitudes/{}", i)));
  n_max = static_cast<int>(number_or(mode, "n_max", 12, "/mode"));
  return CavitySystem(std::move(two_state), std::move(positions), std::move(m));
}

QuadratureSpec read_quad(const json& config) {
  QuadratureSpec q;
  const auto it = config.find("quadrature");
  if (it == config.end()) return q;
  const std::string method = text_or(*it, "method", "tanh_sinh", "/quadrature");
  if (method == "tanh_sinh") {
    q.method = QuadMethod::tanh_sinh;
  } else if (method == "adaptive_subdivision") {
    q.method = QuadMethod::adaptive_subdivision;
  } else if (method == "mapped_gauss") {
    q.method = QuadMethod::mapped_gauss;
  } else {
    bad("/quadrature/method", "unknown method \"" + method + "\"");
  }
  q.rel_tol = number_or(*it, "rel_tol", q.rel_tol, "/quadrature");
  q.abs_tol = number_or(*it, "abs_tol", q.abs_tol, "/quadrature");
  q.max_evals = static_cast<std::int64_t>(number_or(*it, "max_evals", static_cast<double>(q.max_evals), "/quadrature"));
  q.validate();
  return q;
}

MatsubaraSpec read_matsubara(const json& config) {
  MatsubaraSpec m;
  const auto it = config.find("quadrature");
  if (it == config.end()) return m;
  m.rel_tol = number_or(*it, "matsubara_rel_tol", m.rel_tol, "/quadrature");
  m.n_max = static_cast<std::int64_t>(number_or(*it, "matsubara_n_max", static_cast<double>(m.n_max), "/quadrature"));
  m.validate();
  return m;
}

std::optional<double> read_temperature(const json& config, const Units& u) {
  const auto it = config.find("temperature");
  if (it == config.end() || it->is_null()) return std::nullopt;
  return convert(number(*it, "/temperature"), u.temperature, Unit::hartree_temperature);
}

Retardation read_retardation(const json& config) {
  const std::string r = text_or(mode_of(config), "retardation", "retarded", "/mode");
  if (r == "retarded") return Retardation::retarded;
  if (r == "nonretarded") return Retardation::nonretarded;
  bad("/mode/retardation", "expected retarded or nonretarded");
}

void check_top_level(const json& config) {
  if (!config.is_object()) bad("", "top level must be an object");
  static const std::set<std::string> allowed{"task", "units", "atoms", "mode", "temperature", "quadrature", "sweep"};
  for (const auto& [key, value] : config.items()) {
    if (!allowed.count(key)) bad("/" + key, "unknown key");
  }
}

std::string task_of(const json& config) {
  const json& t = member(config, "task", "");
  if (!t.is_string()) bad("/task", "expected a string");
  const std::string task = t.get<std::string>();
  static const std::set<std::string> tasks{"pairwise", "manybody", "lamb", "cavity", "scan"};
  if (!tasks.count(task)) bad("/task", "unknown task \"" + task + "\"");
  if (task == "scan" && !config.contains("sweep")) bad("/sweep", "task scan needs a sweep");
  if (task != "scan" && config.contains("sweep")) bad("/sweep", "sweep is only allowed with task scan");
  return task;
}

// ---- tasks ----------------------------------------------------------------

struct Row {
  std::vector<std::string> columns;
  std::vector<double> values;
  std::string primary;
};

Row run_pairwise(const json& config) {
  const Units u = read_units(config);
  const auto sites = read_sites(config, u);
  if (sites.size() != 2) bad("/atoms", "pairwise needs exactly two atoms");
  const QuadratureSpec q = read_quad(config);
  const PairSpec pair{sites[0].model, sites[1].model, (sites[1].position - sites[0].position).norm()};
  const auto vdw = vdw_energy(pair, q);
  const double london = london_energy_closed_form(pair);
  const double cp = casimir_polder_asymptote(pair.model_a.static_value(), pair.model_b.static_value(), pair.r);
  return {{"r", "E_vdw", "E_london", "E_cp", "err"},
          {pair.r / u.length, vdw.value / u.energy, london / u.energy, cp / u.energy, vdw.error_estimate / u.energy},
          "E_vdw"};
}

Row run_manybody(const json& config) {
  const Units u = read_units(config);
  const SystemGeometry geom(read_sites(config, u));
  const QuadratureSpec q = read_quad(config);
  const Retardation mode = read_retardation(config);
  const auto temperature = read_temperature(config, u);
  const EnergyResult e = temperature ? free_energy_finiteT(geom, *temperature, read_matsubara(config), mode, q)
                                     : free_energy_T0(geom, q, mode);
  const EnergyResult second = second_order_energy(geom, q, mode);
  return {{"energy", "second_order", "err"},
          {e.value / u.energy, second.value / u.energy, (e.error_estimate + second.error_estimate) / u.energy},
          "energy"};
}

Row run_lamb(const json& config) {
  const Units u = read_units(config);
  const auto sites = read_sites(config, u);
  if (sites.size() != 1) bad("/atoms", "lamb needs exactly one atom");
  const auto& model = sites[0].model;
  const json& mode = mode_of(config);
  const QuadratureSpec q = read_quad(config);
  CutoffSpec cutoff;
  if (mode.contains("cutoff")) cutoff.omega_max = number(mode["cutoff"], "/mode/cutoff") * u.energy;
  const auto bethe = bethe_shift_quadrature(model, cutoff, q);
  double err = bethe.error_estimate;

  double thermal = 0.0;
  if (const auto t = read_temperature(config, u)) {
    const auto r = thermal_shift(model, *t, q);
    thermal = r.value;
    err += r.error_estimate;
  }
  double dielectric = 0.0;
  if (mode.contains("medium")) {
    const json& medium = mode["medium"];
    const double l3 = u.length * u.length * u.length;
    const auto r = dielectric_shift_difference(
        model,
        RefractiveModel::dilute_medium(number(member(medium, "density", "/mode/medium"), "/mode/medium/density") / l3,
                                       read_model(member(medium, "host", "/mode/medium"), u, "/mode/medium/host")),
        q);
    dielectric = r.energy.value;
    err += r.energy.error_estimate;
  }
  return {{"bethe", "thermal", "dielectric", "err"},
          {bethe_shift(model, cutoff) / u.energy, thermal / u.energy, dielectric / u.energy, err / u.energy},
          "bethe"};
}

Row run_cavity(const json& config) {
  const Units u = read_units(config);
  int n_max = 12;
  const CavitySystem system = read_cavity(config, u, n_max);
  if (system.size() != 2) bad("/atoms", "cavity needs exactly two atoms");
  PerturbativeOptions o;
  o.force = true;  // regime violations are reported as validity warnings
  const auto p = perturbative_shift(system, o);
  const double extracted = interaction_extract(system, n_max);
  const double exact = exact_ground_energy(system, n_max);
  return {{"r", "self_1", "self_2", "interaction_pert", "interaction", "exact"},
          {system.separation(0, 1) / u.length, p.self_1 / u.energy, p.self_2 / u.energy, p.interaction / u.energy,
           extracted / u.energy, exact / u.energy},
          "interaction"};
}

Row run_task(const std::string& task, const json& config) {
  if (task == "pairwise") return run_pairwise(config);
  if (task == "manybody") return run_manybody(config);
  if (task == "lamb") return run_lamb(config);
  if (task == "cavity") return run_cavity(config);
  bad("/task", "task \"" + task + "\" cannot be nested");
}

std::vector<std::string> task_warnings(const std::string& task, const json& config) {
  std::vector<std::string> out;
  const Units u = read_units(config);
  if (task == "pairwise" || task == "manybody") {
    const SystemGeometry geom(read_sites(config, u));
    for (const auto& w : geom.overlapping_pairs()) {
      out.push_back(fmt::format("atoms {} and {} overlap: alpha_a alpha_b / r^6 = {:.6g} >= 1", w.i, w.j, w.validity.ratio));
    }
  } else if (task == "lamb") {
    const auto sites = read_sites(config, u);
    const json& mode = mode_of(config);
    CutoffSpec cutoff;
    if (mode.contains("cutoff")) cutoff.omega_max = number(mode["cutoff"], "/mode/cutoff") * u.energy;
    if (!sites.empty()) {
      if (auto w = cutoff_warning(sites[0].model, cutoff)) out.push_back(*w);
    }
    if (mode.contains("medium")) {
      const json& medium = mode["medium"];
      const double l3 = u.length * u.length * u.length;
      const auto m = RefractiveModel::dilute_medium(number(member(medium, "density", "/mode/medium"), "/mode/medium/density") / l3,
                                                    read_model(member(medium, "host", "/mode/medium"), u, "/mode/medium/host"));
      if (!m.is_dilute()) out.push_back(fmt::format("medium is not dilute: |n(0) - 1| = {:.6g}", std::abs(m.static_deviation())));
    }
  } else if (task == "cavity") {
    int n_max = 12;
    const CavitySystem s = read_cavity(config, u, n_max);
    if (!s.far_detuned()) out.push_back("mode frequency is not ten times the atomic frequencies");
    for (std::size_t n = 0; n < s.size(); ++n) {
      const double ratio = std::abs(s.coupling(n)) / s.mode().omega;
      if (ratio >= 0.1) out.push_back(fmt::format("atom {} coupling |C|/omega = {:.6g} is not weak", n, ratio));
    }
  }
  return out;
}

// ---- sweeps ---------------------------------------------------------------

struct Sweep {
  std::string task;
  std::string parameter;
  std::vector<double> values;
};

Sweep read_sweep(const json& config) {
  const json& s = member(config, "sweep", "");
  Sweep out;
  const json& task = member(s, "task", "/sweep");
  if (!task.is_string()) bad("/sweep/task", "expected a string");
  out.task = task.get<std::string>();
  if (out.task == "scan" || out.task.empty()) bad("/sweep/task", "scan must wrap pairwise, manybody, lamb or cavity");
  const json& p = member(s, "parameter", "/sweep");
  if (!p.is_string()) bad("/sweep/parameter", "expected a string");
  out.parameter = p.get<std::string>();
  const json& v = member(s, "values", "/sweep");
  if (!v.is_array() || v.empty()) bad("/sweep/values", "expected a non-empty array");
  for (std::size_t i = 0; i < v.size(); ++i) out.values.push_back(number(v[i], fmt::format("/sweep/values/{}", i)));
  return out;
}

json point_config(const json& config, const Sweep& sweep, double value) {
  json c = config;
  c.erase("sweep");
  c["task"] = sweep.task;
  if (sweep.parameter == "separation") {
    json& atoms = c["atoms"];
    if (!atoms.is_array() || atoms.size() != 2) bad("/sweep/parameter", "separation sweeps need exactly two atoms");
    const Vector3 a = vec3(member(atoms[0], "position", "/atoms/0"), "/atoms/0/position");
    const Vector3 b = vec3(member(atoms[1], "position", "/atoms/1"), "/atoms/1/position");
    const Vector3 d = b - a;
    if (!(d.norm() > 0.0)) bad("/atoms", "coincident atoms give no sweep direction");
    const Vector3 moved = a + value * d / d.norm();
    atoms[1]["position"] = {moved.x(), moved.y(), moved.z()};
    return c;
  }
  json::json_pointer ptr;
  try {
    ptr = json::json_pointer(sweep.parameter);
  } catch (const json::exception&) {
    bad("/sweep/parameter", "\"" + sweep.parameter + "\" is neither separation nor a JSON pointer");
  }
  if (!c.contains(ptr) || !c.at(ptr).is_number()) {
    bad("/sweep/parameter", "\"" + sweep.parameter + "\" does not name a numeric field");
  }
  c.at(ptr) = value;
  return c;
}

std::string sweep_label(const Sweep& sweep) { return sweep.parameter == "separation" ? "r" : sweep.parameter; }

unsigned worker_count(std::size_t jobs) {
  unsigned n = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("FLUCT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) n = static_cast<unsigned>(v);
  }
  return static_cast<unsigned>(std::min<std::size_t>(n, jobs));
}

std::optional<double> fit(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() < 2) return std::nullopt;
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] != 0.0) || !std::isfinite(y[i])) return std::nullopt;
    mx += std::log(x[i]);
    my += std::log(std::abs(y[i]));
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(x.size());
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(std::abs(y[i])) - my);
    sxx += dx * dx;
  }
  if (!(sxx > 0.0)) return std::nullopt;
  return sxy / sxx;
}

Table run_scan(const json& config, bool fit_slope) {
  const Sweep sweep = read_sweep(config);
  std::vector<json> points;
  for (double v : sweep.values) points.push_back(point_config(config, sweep, v));

  std::vector<std::optional<Row>> rows(points.size());
  std::vector<std::exception_ptr> errors(points.size());
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        rows[i] = run_task(sweep.task, points[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned workers = worker_count(points.size());
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Table table;
  table.task = "scan";
  const std::string label = sweep_label(sweep);
  const Row& first = *rows.front();
  const bool has_label = std::find(first.columns.begin(), first.columns.end(), label) != first.columns.end();
  if (!has_label) table.columns.push_back(label);
  table.columns.insert(table.columns.end(), first.columns.begin(), first.columns.end());
  const auto primary = static_cast<std::size_t>(
      std::find(first.columns.begin(), first.columns.end(), first.primary) - first.columns.begin());

  std::vector<double> ys;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<double> r;
    if (!has_label) r.push_back(sweep.values[i]);
    r.insert(r.end(), rows[i]->values.begin(), rows[i]->values.end());
    table.rows.push_back(std::move(r));
    ys.push_back(rows[i]->values[primary]);
  }
  if (fit_slope) {
    table.slope = fit(sweep.values, ys);
    table.columns.push_back("fit_slope");
    const double s = table.slope.value_or(std::nan(""));
    for (auto& r : table.rows) r.push_back(s);
  }
  return table;
}

// ---- output ---------------------------------------------------------------

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string format_value(double v) { return fmt::format("{:.17g}", v); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

std::string config_hash(const std::string& config_text) {
  const std::string canonical = parse_text(config_text).dump();
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : canonical) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return fmt::format("{:016x}", h);
}

std::vector<std::string> validity_warnings(const std::string& config_text) {
  const json config = parse_text(config_text);
  check_top_level(config);
  const std::string task = task_of(config);
  if (task != "scan") return task_warnings(task, config);
  const Sweep sweep = read_sweep(config);
  std::vector<std::string> out;
  for (double v : sweep.values) {
    for (auto& w : task_warnings(sweep.task, point_config(config, sweep, v))) {
      out.push_back(fmt::format("{} = {}: {}", sweep_label(sweep), v, w));
    }
  }
  return out;
}

Table evaluate(const std::string& config_text, bool fit_slope) {
  const json config = parse_text(config_text);
  check_top_level(config);
  const std::string task = task_of(config);
  if (task == "scan") return run_scan(config, fit_slope);
  if (fit_slope) bad("/task", "--fit-slope needs task scan");
  const Row row = run_task(task, config);
  Table t;
  t.task = task;
  t.columns = row.columns;
  t.rows.push_back(row.values);
  return t;
}

std::string render(const Table& table, const std::string& hash, Format format) {
  if (format == Format::json) {
    json out;
    out["config_hash"] = hash;
    out["version"] = version;
    out["task"] = table.task;
    out["columns"] = table.columns;
    out["rows"] = json::array();
    for (const auto& r : table.rows) {
      json row = json::array();
      for (double v : r) row.push_back(std::isfinite(v) ? json(v) : json(nullptr));
      out["rows"].push_back(row);
    }
    if (table.slope) out["fit_slope"] = *table.slope;
    return out.dump(2) + "\n";
  }
  std::string out = fmt::format("# config_hash={} version={}\n", hash, version);
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out += (i ? "," : "") + csv_field(table.columns[i]);
  }
  out += "\n";
  for (const auto& r : table.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + format_value(r[i]);
    out += "\n";
  }
  return out;
}

int run(const RunOptions& options, std::ostream& err) {
  try {
    const std::string text = read_file(options.config_path);
    const auto warnings = validity_warnings(text);
    for (const auto& w : warnings) err << "warning: " << w << "\n";
    if (options.strict && !warnings.empty()) {
      err << "error: validity warnings escalated by --strict\n";
      return 2;
    }
    const Table table = evaluate(text, options.fit_slope);
    const std::string body = render(table, config_hash(text), options.format);
    if (options.output_path == "-") {
      std::cout << body << std::flush;
    } else {
      std::ofstream out(options.output_path, std::ios::binary | std::ios::trunc);
      if (!out) throw ConfigError("cannot write " + options.output_path);
      out << body;
      if (!out.flush()) throw ConfigError("failed writing " + options.output_path);
    }
    return 0;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return 1;
}

}  // namespace fluct::cli
