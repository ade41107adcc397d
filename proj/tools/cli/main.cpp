#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include <loschmidt/version.hpp>

#include "runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Fidelity amplitude of perturbed kicked maps: exact grid oracle and path-integral estimators"};
  app.set_version_flag("--version", loschmidt::version());
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Run the estimators listed in a config file");
  std::string config;
  std::optional<std::string> output_dir;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
  run->add_option("config", config, "Config file (key = value)")->required();
  run->add_option("--output-dir", output_dir, "Directory for result files");
  run->add_option("--seed", seed, "Override the config seed");
  run->add_option("--threads", threads, "Worker threads (0 = runtime default)");

  app.add_subcommand("scenarios", "List preset scenarios");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*run) {
    std::optional<std::filesystem::path> dir;
    if (output_dir) dir = *output_dir;
    return loschmidt::cli::run_main(config, dir, seed, threads, std::cout, std::cerr);
  }
  loschmidt::cli::list_scenarios(std::cout);
  return 0;
}
