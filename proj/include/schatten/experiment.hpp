#pragma once
// Named experiments behind the CLI: each one wires kernels, symbols, and
// checks together, returns a machine-readable report plus a primary spectrum,
// and maps its verdict onto the process exit contract.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "schatten/spectrum.hpp"

namespace schatten {

struct ExperimentConfig {
  std::string name;
  std::map<std::string, std::string> params;  // overrides on the registry defaults
  std::uint64_t seed = 1;
  std::string output_dir = ".";
};

// Exit contract: 0 consistent/holds, 3 violated, 4 hypothesis not met.
struct ExperimentResult {
  int exit_code = 0;
  nlohmann::json report;
  SingularSpectrum spectrum;  // written to spectrum.csv / plotdata.csv
};

struct ExperimentInfo {
  std::string name;
  std::string summary;
  std::string citation;  // one-line statement of the result being exercised
  std::map<std::string, std::string> defaults;
};

// Sorted by name; stable across runs.
const std::vector<ExperimentInfo>& experiment_registry();

// Validates the config against the experiment schema (unknown keys or
// malformed values throw std::invalid_argument), runs it, and returns the
// report.  Does not touch the filesystem.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// report.json, spectrum.csv, plotdata.csv under dir (created if missing).
void write_outputs(const ExperimentResult& result, const std::string& dir);

}  // namespace schatten
