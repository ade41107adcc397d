#include "runner.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <iostream>

#include <json.hpp>

#include <loschmidt/loschmidt.hpp>

namespace loschmidt::cli {

namespace {

using nlohmann::ordered_json;

FidelitySeries compute(const std::string& name, const RunConfig& cfg) {
  const Scenario& sc = cfg.scenario;
  const EstimatorConfig& e = cfg.estimator;
  if (name == "exact") return fidelity_exact(sc.state, sc.pair, e.n_steps, e.tau, sc.grid, e.hbar);
  if (name == "f0") return f0(sc.state, sc.pair, e);
  if (name == "f1") return f1_dr(sc.state, sc.pair, e, cfg.reference);
  if (name == "f2_mc") return f2_mc(sc.state, sc.pair, e);
  return f2_gaussian_chain(sc.state, sc.pair, e);
}

std::string extension(OutputFormat f) { return f == OutputFormat::csv ? ".csv" : ".json"; }

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << text;
}

void write_comparison(const RunConfig& cfg, RunResult& result) {
  const FidelitySeries& exact = result.series.at("exact");
  ordered_json doc;
  doc["reference"] = "exact";
  ordered_json per;
  std::ostringstream csv;
  csv << "estimator,step,time,deviation,stderr\n";
  for (const auto& name : cfg.estimators) {
    if (name == "exact") continue;
    const FidelitySeries& s = result.series.at(name);
    const auto dev = deviation(s, exact);
    const double max_dev = *std::max_element(dev.begin(), dev.end());
    result.max_deviation[name] = max_dev;
    std::size_t worst = 0;
    double worst_ratio = 0.0;
    for (std::size_t n = 0; n < dev.size(); ++n) {
      const double band = 3.0 * s.std_error[n] + 1e-6;
      if (dev[n] / band > worst_ratio) {
        worst_ratio = dev[n] / band;
        worst = n;
      }
      csv << name << ',' << n << ',' << format_double(s.times[n]) << ',' << format_double(dev[n]) << ','
          << format_double(s.std_error[n]) << '\n';
    }
    per[name] = {{"max_deviation", max_dev},
                 {"max_deviation_over_band", worst_ratio},
                 {"worst_step", worst},
                 {"band", "3*stderr + 1e-6"},
                 {"deviation", dev},
                 {"stderr", s.std_error}};
  }
  doc["estimators"] = per;
  write_text(cfg.output_dir / "comparison.json", doc.dump(1) + "\n");
  if (cfg.format == OutputFormat::csv) write_text(cfg.output_dir / "comparison.csv", csv.str());
}

void write_metadata(const RunConfig& cfg, const RunResult& result) {
  const EstimatorConfig& e = cfg.estimator;
  ordered_json doc;
  doc["loschmidt_version"] = version();
  doc["fft_backend"] = fft_backend_version();
  doc["scenario"] = cfg.scenario.name;
  doc["seed"] = e.seed;
  doc["estimators"] = cfg.estimators;
  doc["parameters"] = {{"n_traj", e.n_traj},
                       {"tau", e.tau},
                       {"n_steps", e.n_steps},
                       {"hbar", e.hbar},
                       {"batches", e.batches},
                       {"proposal_width_factor", e.proposal_width_factor},
                       {"degenerate_a_threshold", e.degenerate_a_threshold},
                       {"f2_sampler", to_string(e.f2_sampler)},
                       {"reference", to_string(cfg.reference)},
                       {"format", cfg.format == OutputFormat::csv ? "csv" : "json"}};
  if (cfg.spectrum_damping_time) doc["parameters"]["spectrum_damping_time"] = *cfg.spectrum_damping_time;
  const GridSpec& g = cfg.scenario.grid;
  if (g.dims() > 0) {
    doc["grid"] = {{"q_min", g.q_min}, {"q_max", g.q_max}, {"points", g.points},
                   {"periodic_domain", g.periodic_domain}};
  }
  ordered_json exactness = ordered_json::object();
  for (const auto& [order, ex] : cfg.scenario.exactness) exactness[order] = to_string(ex);
  doc["predicted_exactness"] = exactness;
  ordered_json entries = ordered_json::array();
  for (const auto& [k, v] : cfg.entries) entries.push_back({k, v});
  doc["config"] = entries;
  ordered_json runs;
  for (const auto& [name, s] : result.series) {
    runs[name] = {{"estimator", s.meta.estimator},
                  {"variant", s.meta.variant},
                  {"n_traj", s.meta.n_traj},
                  {"effective_sample_size", s.meta.effective_sample_size},
                  {"warnings", s.meta.warnings}};
  }
  doc["runs"] = runs;
  write_text(cfg.output_dir / "metadata.json", doc.dump(1) + "\n");
}

}  // namespace

RunResult run(const RunConfig& cfg, std::ostream& log) {
  RunResult result;
  std::filesystem::create_directories(cfg.output_dir);
  for (const auto& name : cfg.estimators) {
    FidelitySeries s = compute(name, cfg);
    for (const auto& w : s.meta.warnings) log << "warning: " << name << ": " << w << '\n';
    const auto path = cfg.output_dir / (name + extension(cfg.format));
    if (cfg.format == OutputFormat::csv) write_series_csv(s, path);
    else write_series_json(s, path);
    if (cfg.spectrum_damping_time) {
      write_spectrum_csv(spectrum(s, *cfg.spectrum_damping_time),
                         cfg.output_dir / ("spectrum_" + name + ".csv"));
    }
    result.series.emplace(name, std::move(s));
  }
  if (result.series.count("exact")) write_comparison(cfg, result);
  write_metadata(cfg, result);
  return result;
}

int run_main(const std::filesystem::path& config_path, const std::optional<std::filesystem::path>& output_dir,
             std::optional<std::uint64_t> seed, std::optional<int> threads, std::ostream& out,
             std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = load_config(config_path);
    if (output_dir) cfg.output_dir = *output_dir;
    if (seed) cfg.estimator.seed = *seed;
    if (threads) {
      if (*threads < 0) throw ConfigError("--threads must be nonnegative");
      cfg.estimator.threads = *threads;
    }
  } catch (const ConfigError& e) {
    err << "error: invalid config: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    err << "error: invalid config: " << e.what() << '\n';
    return 2;
  }
  try {
    const RunResult r = run(cfg, err);
    out << "wrote " << r.series.size() << " series to " << cfg.output_dir.string() << '\n';
    for (const auto& [name, dev] : r.max_deviation) {
      out << "  " << name << ": max |f - f_exact| = " << format_double(dev) << '\n';
    }
    return 0;
  } catch (const NumericalError& e) {
    err << "error: numerical abort: " << e.what() << '\n';
    return 3;
  } catch (const PreconditionError& e) {
    err << "error: invalid config: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }
}

void list_scenarios(std::ostream& out) {
  for (const auto& name : scenario_names()) {
    const Scenario sc = load(name);
    out << name << "  " << sc.description << "\n   exact:";
    bool any = false;
    for (const auto& [order, ex] : sc.exactness) {
      if (ex == Exactness::exact) {
        out << ' ' << order;
        any = true;
      }
    }
    out << (any ? "" : " none") << '\n';
  }
}

}  // namespace loschmidt::cli
