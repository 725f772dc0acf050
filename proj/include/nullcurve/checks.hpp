#pragma once

#include "nullcurve/config.hpp"
#include "nullcurve/corpus.hpp"
#include "nullcurve/report.hpp"

#include <string>
#include <vector>

namespace nullcurve {

/// One named check; applicability depends on what the entry carries
/// (curve, space-like curve, period data, model kind).
struct CheckDef {
  std::string name;
  std::string suite;
  std::function<bool(const CorpusEntry&)> applicable;
  std::function<std::vector<CheckRecord>(const CorpusEntry&, const RunConfig&)> run;
};

const std::vector<CheckDef>& check_registry();

/// Runs every applicable check whose suite (or name) is selected; empty
/// selection means all. Module errors raised at a point are recorded as
/// failing records rather than escaping.
std::vector<CheckRecord> run_checks(const CorpusEntry& entry, const RunConfig& cfg,
                                    const std::vector<std::string>& selection);

// Building blocks shared with the acceptance suite ----------------------------

/// Smooth non-holomorphic gauge chart → H in closed form (deterministic).
HoloCurve standard_gauge(GroupPtr group, const ChartDomain& dom);

/// Random smooth section of G → G/H as a closed-form matrix curve.
HoloCurve random_section(GroupPtr group, const ChartDomain& dom, Rng& rng);

/// Random smooth gauge with random h-direction and polynomial phase.
HoloCurve random_gauge(GroupPtr group, const ChartDomain& dom, Rng& rng);

/// Max relative oracle-vs-bracket mean curvature discrepancy on an n×n window
/// of the given spacing around the domain center; also returns the max
/// oracle ‖H‖ (for minimal targets).
struct OracleComparison {
  double max_rel_err = 0.0;
  double max_H_oracle_norm = 0.0;
  double max_conformal_residual = 0.0;
};
OracleComparison oracle_compare(const CorpusEntry& entry, int grid, double spacing,
                                double chart_step);

/// RK4 global error of transporting a constant-coefficient connection
/// a_x ≡ E over x ∈ [0,1] with N steps (exact value exp(−E)).
double rk4_transport_error(const RealFormGroup& G, const Mat& E, int steps);

} // namespace nullcurve
