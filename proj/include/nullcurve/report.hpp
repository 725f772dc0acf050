#pragma once

#include "nullcurve/types.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace nullcurve {

using Json = nlohmann::ordered_json;

/// One residual measurement against its tolerance.
struct CheckRecord {
  std::string check;
  std::string entry;
  std::optional<Complex> point;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

CheckRecord make_record(std::string check, std::string entry, std::optional<Complex> point,
                        double residual, double tolerance, std::string note = "");

/// Verification report: per-check records, summary statistics, config echo.
/// Serialized with stable key order; the report body (everything except
/// wall_time_ms) is byte-deterministic for a fixed config.
struct VerificationReport {
  int report_version = 1;
  std::string command;
  Json config_echo;
  std::vector<CheckRecord> records;
  double wall_time_ms = 0.0;

  bool all_pass() const;
  Json to_json() const;      // includes wall_time_ms as the final key
  std::string body() const;  // deterministic part only
};

Json json_of_matrix(const Mat& m);
Json json_of_cvec(const CVec& v);
Json json_of_rvec(const RVec& v);

} // namespace nullcurve
