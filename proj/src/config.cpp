#include "nullcurve/config.hpp"

#include "nullcurve/errors.hpp"

#include <fstream>

namespace nullcurve {

namespace {

Complex json_complex(const Json& j, const char* what) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2) return Complex(j[0].get<double>(), j[1].get<double>());
  throw ConfigError(std::string(what) + ": expected a number or [re, im] pair");
}

Mat json_matrix(const Json& j, const char* what) {
  if (!j.is_array() || j.empty()) throw ConfigError(std::string(what) + ": expected a matrix");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j[0].size());
  Mat m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(j[r].size()) != cols)
      throw ConfigError(std::string(what) + ": ragged matrix rows");
    for (int c = 0; c < cols; ++c) m(r, c) = json_complex(j[r][c], what);
  }
  return m;
}

} // namespace

RunConfig parse_config(const Json& j) {
  RunConfig cfg;
  cfg.raw = j;
  if (j.contains("entry")) cfg.entry = j["entry"].get<std::string>();
  if (j.contains("grid")) {
    cfg.nx = j["grid"].value("nx", 12);
    cfg.ny = j["grid"].value("ny", 12);
  }
  if (cfg.nx < 4 || cfg.ny < 4) throw ConfigError("grid: resolution must be at least 4x4");
  cfg.fd_step = j.value("fd_step", 1e-4);
  cfg.jet_step = j.value("jet_step", 1e-5);
  for (double s : {cfg.fd_step, cfg.jet_step})
    if (!(s > 1e-8 && s < 1e-1))
      throw ConfigError("fd_step/jet_step: steps must lie in (1e-8, 1e-1)");
  cfg.quad_nodes = j.value("quad_nodes", 10000);
  if (cfg.quad_nodes < 16) throw ConfigError("quad_nodes: too few quadrature nodes");
  cfg.seed = j.value("seed", 1ULL);
  if (j.contains("suite")) {
    if (j["suite"].is_string()) {
      std::string s = j["suite"].get<std::string>();
      if (s != "all") cfg.suites.push_back(s);
    } else if (j["suite"].is_array()) {
      for (const auto& s : j["suite"]) cfg.suites.push_back(s.get<std::string>());
    } else {
      throw ConfigError("suite: expected a name or a list of names");
    }
  }
  cfg.out_path = j.value("out", std::string());
  if (j.contains("tolerances")) {
    if (!j["tolerances"].is_object()) throw ConfigError("tolerances: expected an object");
    for (auto it = j["tolerances"].begin(); it != j["tolerances"].end(); ++it)
      cfg.tol_override[it.key()] = it.value().get<double>();
  }
  if (j.contains("loop")) cfg.loop = j["loop"];
  if (j.contains("mesh")) cfg.mesh = j["mesh"];
  if (j.contains("lift")) cfg.lift = j["lift"];
  if (cfg.entry.empty() && !j.contains("group"))
    throw ConfigError("config needs either \"entry\" or an inline \"group\" section");
  return cfg;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  return parse_config(j);
}

GroupPtr parse_group(const Json& j) {
  const std::string kind = j.value("kind", std::string());
  const std::string sigma = j.value("sigma", std::string());
  const int n = j.value("n", 0);
  if (n <= 0) throw ConfigError("group.n: positive matrix size required");

  double trace_c = 0.0;
  bool have_trace = false;
  std::optional<RMat> gram;
  if (j.contains("form")) {
    const Json& f = j["form"];
    if (f.contains("trace")) {
      trace_c = f["trace"].get<double>();
      have_trace = true;
    } else if (f.contains("gram")) {
      Mat g = json_matrix(f["gram"], "group.form.gram");
      gram = g.real();
    } else {
      throw ConfigError("group.form: expected \"trace\" or \"gram\"");
    }
  } else {
    throw ConfigError("group.form: missing");
  }

  std::vector<RVec> lattice;
  if (j.contains("lattice")) {
    for (const auto& gen : j["lattice"]) {
      RVec v(n);
      if (static_cast<int>(gen.size()) != n)
        throw ConfigError("group.lattice: generator length must equal n");
      for (int i = 0; i < n; ++i) v[i] = gen[i].get<double>();
      lattice.push_back(v);
    }
  }

  GroupKind gk;
  SigmaKind sk;
  if (kind == "abelian") {
    gk = GroupKind::AbelianDiagonal;
    sk = SigmaKind::AbelianImag;
  } else if (kind == "sl" || kind == "gl") {
    gk = (kind == "sl") ? GroupKind::SpecialLinear : GroupKind::GeneralLinear;
    if (sigma == "neg-adjoint")
      sk = SigmaKind::NegAdjoint;
    else if (sigma == "entry-conj")
      sk = SigmaKind::EntryConj;
    else
      throw ConfigError("group.sigma: expected \"neg-adjoint\" or \"entry-conj\"");
  } else {
    throw ConfigError("group.kind: expected \"sl\", \"gl\" or \"abelian\"");
  }
  FormSpec form = gram ? FormSpec::explicit_gram(*gram)
                       : (have_trace ? FormSpec::trace(trace_c) : FormSpec::trace(-1.0));
  try {
    return make_group(n, gk, sk, std::move(form), std::move(lattice));
  } catch (const WrongDimension& e) {
    throw ConfigError(std::string("group: ") + e.what());
  }
}

ChartDomain parse_domain(const Json& j) {
  const std::string kind = j.value("kind", std::string("rectangle"));
  try {
    if (kind == "rectangle")
      return ChartDomain::rectangle(j["x"][0], j["x"][1], j["y"][0], j["y"][1]);
    if (kind == "annulus-sector")
      return ChartDomain::annulus_sector(j["r"][0], j["r"][1], j["angle"][0], j["angle"][1]);
    if (kind == "punctured-rectangle") {
      std::vector<Complex> pts;
      for (const auto& p : j.value("punctures", Json::array()))
        pts.push_back(json_complex(p, "domain.punctures"));
      return ChartDomain::punctured_rectangle(j["x"][0], j["x"][1], j["y"][0], j["y"][1],
                                              std::move(pts));
    }
  } catch (const OutOfDomain& e) {
    throw ConfigError(std::string("domain: ") + e.what());
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("domain: ") + e.what());
  }
  throw ConfigError("domain.kind: unknown kind '" + kind + "'");
}

HoloCurve parse_curve(const Json& j, GroupPtr group, const ChartDomain& dom) {
  const std::string family = j.value("family", std::string());
  try {
    if (family == "exp-poly") {
      MatrixCurve mc;
      if (j.contains("left")) mc.left = json_matrix(j["left"], "curve.left");
      for (const auto& fac : j.at("factors")) {
        MatrixCurve::Factor f;
        f.A = json_matrix(fac.at("matrix"), "curve.factors.matrix");
        for (const auto& t : fac.at("poly"))
          f.p.add(t.value("z", 0), t.value("zbar", 0), json_complex(t.at("c"), "curve poly coeff"));
        mc.factors.push_back(std::move(f));
      }
      return make_matrix_curve(std::move(group), dom, std::move(mc));
    }
    if (family == "abelian") {
      AbelianCurve ac;
      for (const auto& comp : j.at("components")) {
        LaurentLog l;
        for (const auto& t : comp.value("laurent", Json::array()))
          l.add(t.at("k").get<int>(), json_complex(t.at("c"), "curve laurent coeff"));
        if (comp.contains("log")) l.add_log(json_complex(comp["log"], "curve log coeff"));
        ac.components.push_back(std::move(l));
      }
      return make_abelian_curve(std::move(group), dom, std::move(ac));
    }
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("curve: ") + e.what());
  }
  throw ConfigError("curve.family: expected \"exp-poly\" or \"abelian\"");
}

ModelKind parse_model_kind(const std::string& name) {
  if (name == "euclidean") return ModelKind::EuclideanRn;
  if (name == "torus") return ModelKind::TorusRn;
  if (name == "hermpos") return ModelKind::HermPos;
  if (name == "realstructures") return ModelKind::RealStructures;
  if (name == "coset") return ModelKind::CosetGeneric;
  throw ConfigError("model: unknown kind '" + name + "'");
}

PathSpec parse_loop(const Json& j) {
  const std::string kind = j.value("kind", std::string("circle"));
  const int steps = j.value("steps", 0);
  try {
    if (kind == "circle")
      return PathSpec::circle(json_complex(j.at("center"), "loop.center"),
                              j.at("radius").get<double>(), steps, j.value("angle0", 0.0),
                              j.value("turns", 1.0));
    if (kind == "segment")
      return PathSpec::segment(json_complex(j.at("from"), "loop.from"),
                               json_complex(j.at("to"), "loop.to"), steps);
    if (kind == "polyline") {
      std::vector<Complex> pts;
      for (const auto& p : j.at("points")) pts.push_back(json_complex(p, "loop.points"));
      return PathSpec::polyline(std::move(pts), steps);
    }
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("loop: ") + e.what());
  }
  throw ConfigError("loop.kind: unknown kind '" + kind + "'");
}

CorpusEntry resolve_workload(const RunConfig& cfg) {
  if (!cfg.entry.empty()) return get_entry(cfg.entry);
  CorpusEntry e;
  e.name = "custom";
  e.group = parse_group(cfg.raw.at("group"));
  e.model_kind = parse_model_kind(cfg.raw.value("model", std::string("coset")));
  if (cfg.raw.contains("curve")) {
    ChartDomain dom = cfg.raw.contains("domain") ? parse_domain(cfg.raw["domain"])
                                                 : ChartDomain::rectangle(-1, 1, -1, 1);
    e.curve = parse_curve(cfg.raw["curve"], e.group, dom);
    double worst = 1e300;
    for (Complex z : e.curve->domain().grid(6, 6, 1e-3))
      worst = std::min(worst, spacelike_margin(*e.group, e.curve->jet(z)));
    e.spacelike = worst > 1e-8;
  }
  e.lattice.assign(e.group->lattice().begin(), e.group->lattice().end());
  return e;
}

} // namespace nullcurve
