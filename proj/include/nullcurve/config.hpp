#pragma once

#include "nullcurve/corpus.hpp"
#include "nullcurve/report.hpp"

#include <map>
#include <string>
#include <vector>

namespace nullcurve {

/// Parsed run configuration. A run works either on a named corpus entry or on
/// a custom group/model/curve given inline; both resolve to a CorpusEntry.
struct RunConfig {
  std::string entry;
  int nx = 12, ny = 12;
  double fd_step = 1e-4;   // finite differences of frame fields
  double jet_step = 1e-5;  // numeric jets
  int quad_nodes = 10000;
  unsigned long long seed = 1;
  std::vector<std::string> suites; // empty = all applicable
  std::string out_path;
  std::map<std::string, double> tol_override;
  Json raw;

  // subcommand-specific sections (kept as JSON, interpreted by the command)
  Json loop;  // holonomy
  Json mesh;  // mesh export
  Json lift;  // lift options

  double tol(const std::string& check, double fallback) const {
    auto it = tol_override.find(check);
    return it == tol_override.end() ? fallback : it->second;
  }
};

RunConfig parse_config(const Json& j);                 // throws ConfigError
RunConfig load_config_file(const std::string& path);   // throws ConfigError

/// Resolves the configured workload: a corpus entry by name, or a transient
/// entry assembled from inline "group"/"model"/"curve"/"domain" sections.
CorpusEntry resolve_workload(const RunConfig& cfg);

/// Builders for the inline sections (exposed for tests).
GroupPtr parse_group(const Json& j);
ChartDomain parse_domain(const Json& j);
HoloCurve parse_curve(const Json& j, GroupPtr group, const ChartDomain& dom);
ModelKind parse_model_kind(const std::string& name);
PathSpec parse_loop(const Json& j);

} // namespace nullcurve
