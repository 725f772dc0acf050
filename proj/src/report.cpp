#include "nullcurve/report.hpp"

#include <algorithm>
#include <map>

namespace nullcurve {

CheckRecord make_record(std::string check, std::string entry, std::optional<Complex> point,
                        double residual, double tolerance, std::string note) {
  CheckRecord r;
  r.check = std::move(check);
  r.entry = std::move(entry);
  r.point = point;
  r.residual = residual;
  r.tolerance = tolerance;
  r.pass = residual <= tolerance;
  r.note = std::move(note);
  return r;
}

bool VerificationReport::all_pass() const {
  return std::all_of(records.begin(), records.end(),
                     [](const CheckRecord& r) { return r.pass; });
}

namespace {

Json record_json(const CheckRecord& r) {
  Json j;
  j["check"] = r.check;
  j["entry"] = r.entry;
  if (r.point)
    j["point"] = {r.point->real(), r.point->imag()};
  else
    j["point"] = nullptr;
  j["residual"] = r.residual;
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

} // namespace

Json VerificationReport::to_json() const {
  Json j;
  j["report_version"] = report_version;
  j["command"] = command;
  j["config"] = config_echo;

  Json checks = Json::array();
  for (const auto& r : records) checks.push_back(record_json(r));
  j["checks"] = checks;

  // summary per check name, in first-seen order
  Json summary;
  std::vector<std::string> order;
  std::map<std::string, std::vector<const CheckRecord*>> by_name;
  for (const auto& r : records) {
    if (!by_name.count(r.check)) order.push_back(r.check);
    by_name[r.check].push_back(&r);
  }
  for (const std::string& name : order) {
    const auto& rs = by_name[name];
    double mx = 0.0, mean = 0.0;
    int failures = 0;
    for (const CheckRecord* r : rs) {
      mx = std::max(mx, r->residual);
      mean += r->residual;
      if (!r->pass) ++failures;
    }
    mean /= static_cast<double>(rs.size());
    Json s;
    s["count"] = rs.size();
    s["failures"] = failures;
    s["max_residual"] = mx;
    s["mean_residual"] = mean;
    summary[name] = s;
  }
  j["summary"] = summary;
  j["all_pass"] = all_pass();
  j["wall_time_ms"] = wall_time_ms;
  return j;
}

std::string VerificationReport::body() const {
  Json j = to_json();
  j.erase("wall_time_ms");
  return j.dump(2);
}

Json json_of_matrix(const Mat& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(row);
  }
  return rows;
}

Json json_of_cvec(const CVec& v) {
  Json arr = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back({v[i].real(), v[i].imag()});
  return arr;
}

Json json_of_rvec(const RVec& v) {
  Json arr = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

} // namespace nullcurve
