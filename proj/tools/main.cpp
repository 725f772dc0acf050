#include "nullcurve/cli.hpp"
#include "nullcurve/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace nullcurve;

RunConfig assemble_config(const std::string& config_path, const std::string& entry,
                          const std::string& out, const std::string& suite, long long seed) {
  Json j;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw ConfigError("cannot open config file: " + config_path);
    try {
      in >> j;
    } catch (const std::exception& e) {
      throw ConfigError(std::string("config parse error: ") + e.what());
    }
  }
  if (!entry.empty()) j["entry"] = entry;
  if (!out.empty()) j["out"] = out;
  if (!suite.empty()) j["suite"] = suite;
  if (seed >= 0) j["seed"] = static_cast<unsigned long long>(seed);
  return parse_config(j);
}

void emit(const CommandResult& res, const RunConfig& cfg) {
  std::string report = res.report.to_json().dump(2) + "\n";
  if (cfg.out_path.empty()) {
    std::cout << report;
  } else {
    std::ofstream out(cfg.out_path);
    out << report;
    std::cout << "report written to " << cfg.out_path << "\n";
  }
  for (const auto& [suffix, content] : res.artifacts) {
    std::string path = cfg.out_path.empty() ? suffix : cfg.out_path + "." + suffix;
    std::ofstream out(path);
    out << content;
    std::cout << "artifact written to " << path << "\n";
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"null holomorphic curves and conformal immersions in homogeneous spaces"};
  app.require_subcommand(1);

  std::string config_path, entry, out, suite;
  long long seed = -1;
  app.add_option("--config", config_path, "config file (JSON)");
  app.add_option("--entry", entry, "corpus entry name (overrides config)");
  app.add_option("--out", out, "output path for the report");
  app.add_option("--suite", suite, "check suite to run (verify)");
  app.add_option("--seed", seed, "seed for randomized invariant sampling");

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  auto* lift = app.add_subcommand("lift", "lift an immersion to a holomorphic curve");
  auto* holonomy = app.add_subcommand("holonomy", "parallel-transport holonomy of a loop");
  auto* mesh = app.add_subcommand("mesh", "export the immersed surface as a polygon mesh");
  auto* list = app.add_subcommand("list-corpus", "list the built-in corpus entries");

  CLI11_PARSE(app, argc, argv);

  try {
    if (list->parsed()) {
      std::cout << nullcurve::corpus_listing();
      return kExitOk;
    }
    RunConfig cfg = assemble_config(config_path, entry, out, suite, seed);
    CommandResult res;
    try {
      if (verify->parsed()) res = cmd_verify(cfg);
      else if (lift->parsed()) res = cmd_lift(cfg);
      else if (holonomy->parsed()) res = cmd_holonomy(cfg);
      else if (mesh->parsed()) res = cmd_mesh(cfg);
    } catch (const ConfigError&) {
      throw;
    } catch (const UnknownEntry&) {
      throw;
    } catch (const Error& e) {
      std::cerr << "numeric failure: " << e.what() << "\n";
      return kExitNumericError;
    }
    emit(res, cfg);
    return res.exit_code;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const UnknownEntry& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumericError;
  }
}
