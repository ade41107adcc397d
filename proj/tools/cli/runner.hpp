#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include <loschmidt/series.hpp>

#include "config.hpp"

namespace loschmidt::cli {

struct RunResult {
  /// Keyed by estimator name as requested.
  std::map<std::string, FidelitySeries> series;
  /// Max per-step |f - f_exact|, when exact was requested.
  std::map<std::string, double> max_deviation;
};

/// Runs every requested estimator and writes the output files into
/// cfg.output_dir. Warnings go to `log`.
RunResult run(const RunConfig& cfg, std::ostream& log);

/// Exit status for the command line: 0 ok, 2 invalid config, 3 numerical abort.
int run_main(const std::filesystem::path& config_path, const std::optional<std::filesystem::path>& output_dir,
             std::optional<std::uint64_t> seed, std::optional<int> threads, std::ostream& out,
             std::ostream& err);

void list_scenarios(std::ostream& out);

}  // namespace loschmidt::cli
