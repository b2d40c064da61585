// command-line front end: run one experiment, write report.json / spectrum.csv
// / plotdata.csv into the output directory, exit with the verdict code.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "schatten/experiment.hpp"
#include "schatten/spectrum.hpp"

namespace {

// flat key=value lines; '#' starts a comment, blank lines ignored
std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw CLI::ValidationError("--config", "cannot open " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const auto a = s.find_first_not_of(" \t\r");
    const auto b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError(
          "--config", path + ":" + std::to_string(lineno) + ": expected key=value");
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

void print_registry() {
  for (const auto& e : schatten::experiment_registry()) {
    std::cout << e.name << "\n  " << e.summary << "\n  defaults:";
    for (const auto& [k, v] : e.defaults) std::cout << ' ' << k << '=' << v;
    std::cout << "\n  background: " << e.citation << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for singular-value estimates of integral operators"};
  app.allow_extras();

  std::string experiment, config_file, out_dir = ".";
  std::uint64_t seed = 1;
  app.add_option("experiment", experiment,
                 "experiment name, or 'list' to show the registry")
      ->required();
  app.add_option("--config", config_file, "flat key=value parameter file");
  app.add_option("--out", out_dir, "output directory (default: current)");
  app.add_option("--seed", seed, "random seed for the randomized experiments");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (experiment == "list") {
    print_registry();
    return 0;
  }

  schatten::ExperimentConfig cfg;
  cfg.name = experiment;
  cfg.seed = seed;
  cfg.output_dir = out_dir;

  try {
    if (!config_file.empty()) {
      auto kv = read_config_file(config_file);
      if (auto it = kv.find("seed"); it != kv.end()) {
        if (app.count("--seed") == 0) cfg.seed = std::stoull(it->second);
        kv.erase(it);
      }
      cfg.params = std::move(kv);
    }
    for (const std::string& extra : app.remaining()) {
      if (extra.rfind("--", 0) != 0 || extra.find('=') == std::string::npos) {
        std::cerr << "schatten-lab: expected --key=value, got '" << extra << "'\n";
        return 2;
      }
      const auto eq = extra.find('=');
      cfg.params[extra.substr(2, eq - 2)] = extra.substr(eq + 1);
    }

    if (const char* cap = std::getenv("SCHATTEN_LAB_THREADS")) {
      const int t = std::atoi(cap);
      if (t > 0)
        schatten::set_thread_cap(t);
      else
        std::cerr << "schatten-lab: ignoring SCHATTEN_LAB_THREADS='" << cap << "'\n";
    }

    const schatten::ExperimentResult res = schatten::run_experiment(cfg);
    schatten::write_outputs(res, cfg.output_dir);
    const auto& results = res.report.at("results");
    std::cout << cfg.name << ": "
              << results.value("verdict", std::string("done"))
              << "  (report in " << cfg.output_dir << "/report.json)\n";
    return res.exit_code;
  } catch (const CLI::Error& e) {
    std::cerr << "schatten-lab: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "schatten-lab: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "schatten-lab: unexpected error: " << e.what() << "\n";
    return 1;
  }
}
