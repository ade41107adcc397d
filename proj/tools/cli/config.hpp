#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <loschmidt/estimators.hpp>
#include <loschmidt/presets.hpp>

namespace loschmidt::cli {

/// Malformed or inconsistent run configuration (exit status 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { csv, json };

struct RunConfig {
  /// Resolved system: a preset, or the inline definition.
  Scenario scenario;
  bool inline_system = false;
  /// Subset of exact, f0, f1, f2_mc, f2_gaussian in the order given.
  std::vector<std::string> estimators;
  EstimatorConfig estimator;
  Reference reference = Reference::average;
  OutputFormat format = OutputFormat::csv;
  std::optional<double> spectrum_damping_time;
  std::filesystem::path output_dir = ".";
  /// Every key = value pair as read, for the metadata record.
  std::vector<std::pair<std::string, std::string>> entries;
};

const std::vector<std::string>& estimator_names();

/// Parses the flat `key = value` format (`#` starts a comment):
///
///   scenario = displaced_ho          preset name; omit for an inline system
///   estimators = exact, f1           exact | f0 | f1 | f2_mc | f2_gaussian
///   n_traj, seed, tau, n_steps, hbar, batches, threads
///   proposal_width_factor, degenerate_a_threshold
///   f2_sampler = auto                auto | rotated | real_axis
///   reference = average              average | h_prime (f1 only)
///   format = csv                     csv | json
///   spectrum_damping_time = 20       writes spectrum_<estimator>.csv
///   output_dir = results
///   grid_points, grid_min, grid_max, grid_periodic
///
/// Inline systems (D = `dims`, default 1), coefficients c0 c1 ... c4:
///
///   h_prime.kinetic.0 = 0 0 0.5
///   h_prime.potential.0 = 0 0 0.5
///   h_prime.cosine.0 = 5 1           amplitude wavenumber, added to V
///   h_double_prime.potential.0 = 0 -0.5 0.5
///   component = w=1 q=0 p=0 sigma=1  repeatable; q, p, sigma take
///                                    comma lists for D > 1
RunConfig parse_config(std::istream& in);
RunConfig load_config(const std::filesystem::path& path);

}  // namespace loschmidt::cli
