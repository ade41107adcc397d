#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <loschmidt/errors.hpp>

namespace loschmidt::cli {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& s, const std::string& seps) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (seps.find(c) != std::string::npos) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

double to_double(const std::string& key, const std::string& v) {
  double x = 0.0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw ConfigError("'" + key + "': expected a number, got '" + v + "'");
  }
  return x;
}

std::size_t to_size(const std::string& key, const std::string& v) {
  std::size_t x = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw ConfigError("'" + key + "': expected a nonnegative integer, got '" + v + "'");
  }
  return x;
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("'" + key + "': expected true or false, got '" + v + "'");
}

std::vector<double> to_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  for (const auto& t : split(v, ", \t")) out.push_back(to_double(key, t));
  if (out.empty()) throw ConfigError("'" + key + "': empty value");
  return out;
}

// Per-coordinate pieces of one inline Hamiltonian.
struct InlineSide {
  std::map<std::size_t, Polynomial> kinetic, potential;
  std::map<std::size_t, Cosine> cosine;
  bool any = false;
};

SeparableHamiltonian build(const InlineSide& side, std::size_t dims) {
  std::vector<CoordinateFunction> k(dims), v(dims);
  for (std::size_t d = 0; d < dims; ++d) {
    auto kit = side.kinetic.find(d);
    if (kit != side.kinetic.end()) k[d] = CoordinateFunction(kit->second);
    Polynomial poly;
    auto pit = side.potential.find(d);
    if (pit != side.potential.end()) poly = pit->second;
    auto cit = side.cosine.find(d);
    v[d] = CoordinateFunction(poly, cit != side.cosine.end() ? cit->second : Cosine{});
  }
  return SeparableHamiltonian(std::move(k), std::move(v));
}

GaussianComponent parse_component(const std::string& v, std::size_t dims) {
  GaussianComponent c;
  c.weight = 1.0;
  std::vector<double> q{0.0}, p{0.0}, s{1.0};
  for (const auto& field : split(v, " \t")) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw ConfigError("component: expected name=value, got '" + field + "'");
    const std::string name = field.substr(0, eq), val = field.substr(eq + 1);
    const std::string key = "component." + name;
    if (name == "w" || name == "weight") c.weight = to_double(key, val);
    else if (name == "q") q = to_list(key, val);
    else if (name == "p") p = to_list(key, val);
    else if (name == "sigma") s = to_list(key, val);
    else throw ConfigError("component: unknown field '" + name + "'");
  }
  auto widen = [&](std::vector<double> x, const char* name) {
    if (x.size() == 1) x.assign(dims, x[0]);
    if (x.size() != dims) {
      throw ConfigError(std::string("component.") + name + ": expected " + std::to_string(dims) +
                        " values");
    }
    return x;
  };
  c.center_q = widen(q, "q");
  c.center_p = widen(p, "p");
  c.sigma = widen(s, "sigma");
  return c;
}

}  // namespace

const std::vector<std::string>& estimator_names() {
  static const std::vector<std::string> names{"exact", "f0", "f1", "f2_mc", "f2_gaussian"};
  return names;
}

RunConfig parse_config(std::istream& in) {
  RunConfig cfg;
  std::map<std::string, std::string> kv;
  std::vector<std::string> components;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    cfg.entries.emplace_back(key, value);
    if (key == "component") {
      components.push_back(value);
      continue;
    }
    if (!kv.emplace(key, value).second) {
      throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    }
  }

  auto take = [&](const std::string& key) -> std::optional<std::string> {
    auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    std::string v = it->second;
    kv.erase(it);
    return v;
  };

  // System.
  InlineSide sides[2];
  std::size_t dims = 1;
  if (auto v = take("dims")) dims = to_size("dims", *v);
  for (auto it = kv.begin(); it != kv.end();) {
    const auto parts = split(it->first, ".");
    const bool side_key = parts.size() == 3 && (parts[0] == "h_prime" || parts[0] == "h_double_prime");
    if (!side_key) {
      ++it;
      continue;
    }
    InlineSide& side = sides[parts[0] == "h_prime" ? 0 : 1];
    const std::size_t d = to_size(it->first, parts[2]);
    if (d >= dims) throw ConfigError("'" + it->first + "': coordinate index beyond dims");
    const auto values = to_list(it->first, it->second);
    if (parts[1] == "kinetic" || parts[1] == "potential") {
      if (values.size() > 5) throw ConfigError("'" + it->first + "': at most 5 coefficients (degree 4)");
      Polynomial::Coefficients c{};
      std::copy(values.begin(), values.end(), c.begin());
      (parts[1] == "kinetic" ? side.kinetic : side.potential)[d] = Polynomial(c);
    } else if (parts[1] == "cosine") {
      if (values.size() > 2) throw ConfigError("'" + it->first + "': expected amplitude [wavenumber]");
      side.cosine[d] = Cosine{values[0], values.size() > 1 ? values[1] : 1.0};
    } else {
      throw ConfigError("unknown key '" + it->first + "'");
    }
    side.any = true;
    it = kv.erase(it);
  }

  const auto scenario = take("scenario");
  const bool has_inline = sides[0].any || sides[1].any;
  if (scenario && has_inline) throw ConfigError("give either 'scenario' or an inline system, not both");
  if (scenario) {
    try {
      cfg.scenario = load(*scenario);
    } catch (const PreconditionError& e) {
      throw ConfigError(e.what());
    }
    if (!components.empty()) {
      std::vector<GaussianComponent> cs;
      for (const auto& c : components) cs.push_back(parse_component(c, cfg.scenario.pair.dims()));
      cfg.scenario.state = InitialState(std::move(cs));
    }
  } else if (has_inline) {
    if (dims == 0) throw ConfigError("'dims' must be positive");
    cfg.inline_system = true;
    cfg.scenario.name = "inline";
    cfg.scenario.description = "inline system";
    cfg.scenario.pair = make_pair(build(sides[0], dims), build(sides[1], dims));
    std::vector<GaussianComponent> cs;
    for (const auto& c : components) cs.push_back(parse_component(c, dims));
    if (cs.empty()) cs.push_back(parse_component("", dims));
    cfg.scenario.state = InitialState(std::move(cs));
  } else {
    throw ConfigError("no system: set 'scenario' or inline h_prime/h_double_prime keys");
  }
  Scenario& sc = cfg.scenario;

  // Estimators.
  const auto est = take("estimators");
  if (!est) throw ConfigError("'estimators' is required");
  for (const auto& name : split(*est, ", \t")) {
    const auto& known = estimator_names();
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      throw ConfigError("unknown estimator '" + name + "' (expected exact, f0, f1, f2_mc, f2_gaussian)");
    }
    if (std::find(cfg.estimators.begin(), cfg.estimators.end(), name) != cfg.estimators.end()) {
      throw ConfigError("estimator '" + name + "' listed twice");
    }
    cfg.estimators.push_back(name);
  }
  if (cfg.estimators.empty()) throw ConfigError("'estimators' is empty");

  // Numerics; scenario values are the defaults.
  EstimatorConfig& e = cfg.estimator;
  e.tau = sc.tau;
  e.n_steps = sc.n_steps;
  e.hbar = sc.hbar;
  if (auto v = take("n_traj")) e.n_traj = to_size("n_traj", *v);
  if (auto v = take("seed")) e.seed = to_size("seed", *v);
  if (auto v = take("tau")) e.tau = to_double("tau", *v);
  if (auto v = take("n_steps")) e.n_steps = to_size("n_steps", *v);
  if (auto v = take("hbar")) e.hbar = to_double("hbar", *v);
  if (auto v = take("batches")) e.batches = to_size("batches", *v);
  if (auto v = take("threads")) e.threads = static_cast<int>(to_size("threads", *v));
  if (auto v = take("proposal_width_factor")) e.proposal_width_factor = to_double("proposal_width_factor", *v);
  if (auto v = take("degenerate_a_threshold")) {
    e.degenerate_a_threshold = to_double("degenerate_a_threshold", *v);
  }
  try {
    if (auto v = take("f2_sampler")) e.f2_sampler = parse_f2_sampler(*v);
    if (auto v = take("reference")) cfg.reference = parse_reference(*v);
    e.validate();
  } catch (const PreconditionError& err) {
    throw ConfigError(err.what());
  }
  sc.tau = e.tau;
  sc.n_steps = e.n_steps;
  sc.hbar = e.hbar;

  if (auto v = take("format")) {
    if (*v == "csv") cfg.format = OutputFormat::csv;
    else if (*v == "json") cfg.format = OutputFormat::json;
    else throw ConfigError("'format': expected csv or json, got '" + *v + "'");
  }
  if (auto v = take("spectrum_damping_time")) {
    cfg.spectrum_damping_time = to_double("spectrum_damping_time", *v);
    if (!(*cfg.spectrum_damping_time > 0.0)) throw ConfigError("'spectrum_damping_time' must be positive");
  }
  if (auto v = take("output_dir")) cfg.output_dir = *v;

  // Grid for the exact oracle.
  const auto points = take("grid_points");
  const auto gmin = take("grid_min");
  const auto gmax = take("grid_max");
  const auto periodic = take("grid_periodic");
  if (gmin.has_value() != gmax.has_value()) throw ConfigError("'grid_min' and 'grid_max' go together");
  if (points || gmin || periodic || sc.grid.dims() == 0) {
    const std::size_t d = sc.pair.dims();
    std::size_t m = points ? to_size("grid_points", *points) : (sc.grid.points ? sc.grid.points : 1024);
    GridSpec g = sc.grid.dims() == d ? sc.grid : covering_grid(sc.state, m);
    g.points = m;
    if (gmin) {
      g.q_min.assign(d, to_double("grid_min", *gmin));
      g.q_max.assign(d, to_double("grid_max", *gmax));
    }
    if (periodic) g.periodic_domain = to_bool("grid_periodic", *periodic);
    sc.grid = g;
  }
  bool wants_exact = std::find(cfg.estimators.begin(), cfg.estimators.end(), "exact") != cfg.estimators.end();
  if (wants_exact) {
    try {
      sc.grid.validate();
    } catch (const PreconditionError& err) {
      throw ConfigError(std::string("grid: ") + err.what());
    }
  }

  if (!kv.empty()) throw ConfigError("unknown key '" + kv.begin()->first + "'");
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
  return parse_config(in);
}

}  // namespace loschmidt::cli
