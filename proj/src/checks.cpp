#include "nullcurve/checks.hpp"

#include "nullcurve/errors.hpp"
#include "nullcurve/matfun.hpp"
#include "nullcurve/meancurv.hpp"
#include "nullcurve/oracle.hpp"
#include "nullcurve/weierstrass.hpp"

#include <cmath>
#include <functional>

namespace nullcurve {

namespace {

Rng seeded(const RunConfig& cfg, const std::string& salt) {
  std::seed_seq seq(salt.begin(), salt.end());
  std::vector<std::uint32_t> mix(4);
  seq.generate(mix.begin(), mix.end());
  return Rng(cfg.seed ^ (static_cast<std::uint64_t>(mix[0]) << 32 | mix[1]));
}

bool has_curve(const CorpusEntry& e) { return e.curve.has_value(); }
bool has_immersion(const CorpusEntry& e) { return e.curve.has_value() && e.spacelike; }
bool has_periods(const CorpusEntry& e) { return static_cast<bool>(e.beta) && !e.period_loops.empty(); }
bool has_closed_bracket(const CorpusEntry& e) {
  return e.model_kind == ModelKind::HermPos || e.model_kind == ModelKind::RealStructures;
}
bool oracle_ready(const CorpusEntry& e) {
  return has_immersion(e) && e.model_kind != ModelKind::CosetGeneric;
}

Poly2 real_smooth_poly(double a, double b, double c) {
  // a·x + b·y + c·x·y (real-valued)
  Poly2 p;
  p.add(1, 0, 0.5 * a).add(0, 1, 0.5 * a);
  p.add(1, 0, Complex(0, -0.5 * b)).add(0, 1, Complex(0, 0.5 * b));
  p.add(2, 0, Complex(0, -0.25 * c)).add(0, 2, Complex(0, 0.25 * c));
  return p;
}

std::vector<Complex> interior_grid(const CorpusEntry& e, const RunConfig& cfg, double margin) {
  return e.curve->domain().grid(cfg.nx, cfg.ny, margin);
}

// --- individual checks -------------------------------------------------------

std::vector<CheckRecord> check_membership(const CorpusEntry& e, const RunConfig& cfg) {
  std::vector<CheckRecord> out;
  for (Complex z : interior_grid(e, cfg, 0.0)) {
    double r = e.group->membership_residual(e.curve->jet(z).f);
    out.push_back(make_record("membership", e.name, z, r, cfg.tol("membership", 1e-8)));
  }
  return out;
}

std::vector<CheckRecord> check_holomorphy(const CorpusEntry& e, const RunConfig& cfg) {
  std::vector<CheckRecord> out;
  for (Complex z : interior_grid(e, cfg, 0.0)) {
    CurveJet jet = e.curve->jet(z);
    double r = holomorphy_residual(*e.group, jet);
    out.push_back(make_record("holomorphy", e.name, z, r,
                              cfg.tol("holomorphy", e.curve->holomorphy_tol(jet))));
  }
  return out;
}

std::vector<CheckRecord> check_isotropy(const CorpusEntry& e, const RunConfig& cfg) {
  std::vector<CheckRecord> out;
  for (Complex z : interior_grid(e, cfg, 0.0)) {
    double r = isotropy_residual(*e.group, e.curve->jet(z));
    out.push_back(make_record("isotropy", e.name, z, r, cfg.tol("isotropy", 1e-8)));
  }
  return out;
}

std::vector<CheckRecord> check_spacelike(const CorpusEntry& e, const RunConfig& cfg) {
  std::vector<CheckRecord> out;
  for (Complex z : interior_grid(e, cfg, 0.0)) {
    double margin = spacelike_margin(*e.group, e.curve->jet(z));
    double r = std::max(0.0, 1e-12 - margin);
    out.push_back(make_record("spacelike", e.name, z, r, cfg.tol("spacelike", 0.0),
                              "margin=" + std::to_string(margin)));
  }
  return out;
}

std::vector<CheckRecord> check_dtheta(const CorpusEntry& e, const RunConfig& cfg) {
  std::vector<CheckRecord> out;
  const double h = cfg.fd_step;
  for (Complex z : interior_grid(e, cfg, 2.5 * h)) {
    double r = dtheta_residual(*e.curve, z, h);
    out.push_back(make_record("dtheta", e.name, z, r, cfg.tol("dtheta", 1e-6)));
  }
  return out;
}

std::vector<CheckRecord> check_conformal(const CorpusEntry& e, const RunConfig& cfg) {
  std::vector<CheckRecord> out;
  HomogeneousModel model = e.model();
  for (Complex z : interior_grid(e, cfg, 0.0)) {
    ImmersionSample s = project_immersion(*e.curve, model, z);
    out.push_back(
        make_record("conformal", e.name, z, s.conformal_residual, cfg.tol("conformal", 1e-8)));
    double lam = std::abs(s.lambda2 - s.lambda2_metric) / (1.0 + std::abs(s.lambda2));
    out.push_back(make_record("lambda2-consistency", e.name, z, lam,
                              cfg.tol("lambda2-consistency", 1e-10)));
  }
  return out;
}

std::vector<CheckRecord> check_meancurv(const CorpusEntry& e, const RunConfig& cfg) {
  std::vector<CheckRecord> out;
  HomogeneousModel model = e.model();
  const double h = cfg.fd_step;
  for (Complex z : interior_grid(e, cfg, 2.5 * h)) {
    ImmersionSample s = project_immersion(*e.curve, model, z);
    MeanCurvature mc = mean_curvature_bracket(model, s);
    out.push_back(make_record("meancurv-two-route", e.name, z, mc.agreement,
                              cfg.tol("meancurv-two-route", 1e-10)));
    Mat maurer = mean_curvature_maurer(*e.curve, model, z, h);
    out.push_back(make_record("meancurv-agreement", e.name, z, (mc.frame - maurer).norm(),
                              cfg.tol("meancurv-agreement", 1e-6)));
  }
  return out;
}

std::vector<CheckRecord> check_corollaries_grid(const CorpusEntry& e, const RunConfig& cfg) {
  std::vector<CheckRecord> out;
  HomogeneousModel model = e.model();
  for (Complex z : interior_grid(e, cfg, 0.0)) {
    ImmersionSample s = project_immersion(*e.curve, model, z);
    CorollaryReport rep = check_corollaries(model, s);
    out.push_back(make_record("corollary-gHH-K", e.name, z, rep.r1, cfg.tol("corollary-gHH-K", 1e-8)));
    out.push_back(make_record("corollary-R", e.name, z, rep.r2, cfg.tol("corollary-R", 1e-6)));
    if (rep.has_scalar) {
      out.push_back(
          make_record("corollary-scalar", e.name, z, rep.r3, cfg.tol("corollary-scalar", 1e-8)));
      out.push_back(make_record("gauss-orientation", e.name, z,
                                rep.gauss_orientation == 1 ? 0.0 : 1.0, 0.5));
    }
  }
  return out;
}

double expected_scalar(const ExpectedQuantity& q) { return std::get<double>(q.value); }

std::vector<CheckRecord> check_expected(const CorpusEntry& e, const RunConfig& cfg) {
  std::vector<CheckRecord> out;
  HomogeneousModel model = e.model();
  const Complex z0 = e.curve->domain().center();
  ImmersionSample s = project_immersion(*e.curve, model, z0);
  MeanCurvature mc = mean_curvature_bracket(model, s);
  CorollaryReport rep = check_corollaries(model, s);

  auto push = [&](const std::string& key, double measured) {
    auto it = e.expected.find(key);
    if (it == e.expected.end()) return;
    double want = expected_scalar(it->second);
    out.push_back(make_record("expected-" + key, e.name, z0, std::abs(measured - want),
                              it->second.tol,
                              std::string("provenance=") + provenance_name(it->second.prov)));
  };
  push("lambda2", s.lambda2);
  push("gHH", rep.gHH);
  push("K", rep.K);
  if (rep.has_scalar) push("H_scalar", rep.H_scalar);
  push("H_norm", mc.frame.norm());

  auto itH = e.expected.find("H_frame");
  if (itH != e.expected.end()) {
    const Mat& want = std::get<Mat>(itH->second.value);
    out.push_back(make_record("expected-H_frame", e.name, z0, (mc.frame - want).norm(),
                              itH->second.tol,
                              std::string("provenance=") + provenance_name(itH->second.prov)));
  }
  return out;
}

std::vector<CheckRecord> check_zsys(const CorpusEntry& e, const RunConfig& cfg) {
  std::vector<CheckRecord> out;
  Rng rng = seeded(cfg, "zsys:" + e.name);
  ChartDomain dom = ChartDomain::rectangle(-0.5, 0.5, -0.5, 0.5);
  const double h = cfg.fd_step;
  for (int sec = 0; sec < 2; ++sec) {
    HoloCurve tau = random_section(e.group, dom, rng);
    FrameField F = frame_field(tau);
    for (Complex z : dom.grid(4, 4, 2.5 * h)) {
      auto [r1, r2] = zsys_residual(*e.group, F, dom, z, h);
      out.push_back(make_record("zsys-r1", e.name, z, r1, cfg.tol("zsys", 1e-6)));
      out.push_back(make_record("zsys-r2", e.name, z, r2, cfg.tol("zsys", 1e-6)));
    }
  }
  return out;
}

std::vector<CheckRecord> check_zsys_gauge(const CorpusEntry& e, const RunConfig& cfg) {
  std::vector<CheckRecord> out;
  Rng rng = seeded(cfg, "zsys-gauge:" + e.name);
  ChartDomain dom = ChartDomain::rectangle(-0.5, 0.5, -0.5, 0.5);
  const double h = cfg.fd_step;
  HoloCurve tau = random_section(e.group, dom, rng);
  FrameField F = frame_field(tau);
  std::vector<Complex> pts = dom.grid(3, 3, 2.5 * h);
  const int n_gauges = 20;
  for (int g = 0; g < n_gauges; ++g) {
    HoloCurve gauge = random_gauge(e.group, dom, rng);
    FrameField Fg = gauge_transform(e.group, F, gauge);
    for (Complex z : pts) {
      auto [r1, r2] = zsys_residual(*e.group, F, dom, z, h);
      auto [g1, g2] = zsys_residual(*e.group, Fg, dom, z, h);
      double r = std::max(std::abs(g1 - r1), std::abs(g2 - r2));
      out.push_back(make_record("zsys-gauge-invariance", e.name, z, r,
                                cfg.tol("zsys-gauge-invariance", 1e-6)));
      out.push_back(
          make_record("zsys-gauged-residual", e.name, z, std::max(g1, g2), cfg.tol("zsys", 1e-6)));
    }
  }
  return out;
}

std::vector<CheckRecord> check_oracle(const CorpusEntry& e, const RunConfig& cfg) {
  std::vector<CheckRecord> out;
  OracleComparison cmp = oracle_compare(e, 20, 1e-2, 1e-3);
  out.push_back(make_record("oracle-compare", e.name, e.curve->domain().center(),
                            cmp.max_rel_err, cfg.tol("oracle-compare", 1e-3)));
  if (e.expected.count("H_norm"))
    out.push_back(make_record("oracle-H-flat", e.name, e.curve->domain().center(),
                              cmp.max_H_oracle_norm, e.expected.at("H_norm").tol));
  return out;
}

std::vector<CheckRecord> check_flatness(const CorpusEntry& e, const RunConfig& cfg) {
  std::vector<CheckRecord> out;
  HomogeneousModel model = e.model();
  HoloCurve f0 = e.group->abelian() ? real_part_lift(*e.curve)
                                    : compose_curves(*e.curve, standard_gauge(e.group, e.curve->domain()));
  LocalConnectionData conn = build_Bphi(f0, model);
  const double h = cfg.fd_step;
  for (Complex z : interior_grid(e, cfg, 2.5 * h)) {
    double r = flatness_residual(*e.group, conn, z, h);
    out.push_back(make_record("flatness", e.name, z, r, cfg.tol("flatness", 1e-6)));
    double rs = flatness_residual_structured(f0, z, h);
    out.push_back(make_record("flatness-structured-agreement", e.name, z, std::abs(r - rs),
                              cfg.tol("flatness-structured-agreement", 1e-8)));
  }
  return out;
}

std::vector<CheckRecord> check_lift(const CorpusEntry& e, const RunConfig& cfg) {
  std::vector<CheckRecord> out;
  HomogeneousModel model = e.model();
  const ChartDomain& dom = e.curve->domain();
  HoloCurve gauge = standard_gauge(e.group, dom);
  HoloCurve f0 = compose_curves(*e.curve, gauge);
  LocalConnectionData conn = build_Bphi(f0, model);
  LiftResult lift = holomorphic_lift(f0, conn, dom.center(), 13, 13);
  out.push_back(make_record("lift-lpath-mismatch", e.name, dom.center(), lift.lpath_mismatch,
                            cfg.tol("lift-lpath-mismatch", 1e-6)));
  out.push_back(make_record("lift-holomorphy", e.name, dom.center(), lift.holomorphy_max,
                            cfg.tol("lift-holomorphy", 1e-4)));

  // round trip: fitted constant right translation back to the original curve
  int ci = lift.nx / 2, cj = lift.ny / 2;
  Mat f_at = e.curve->jet(lift.z_at(ci, cj)).f;
  Mat h0 = e.group->compose(e.group->inverse(f_at), lift.at(ci, cj));
  double worst = 0.0;
  for (int i = 0; i < lift.nx; ++i)
    for (int j = 0; j < lift.ny; ++j) {
      Mat expect = e.group->compose(e.curve->jet(lift.z_at(i, j)).f, h0);
      worst = std::max(worst, (expect - lift.at(i, j)).norm());
    }
  out.push_back(make_record("lift-roundtrip", e.name, dom.center(), worst,
                            cfg.tol("lift-roundtrip", 1e-4)));
  out.push_back(make_record("lift-gauge-in-H", e.name, dom.center(),
                            e.group->h_membership_residual(h0), 1e-6));
  return out;
}

std::vector<CheckRecord> check_holonomy_contractible(const CorpusEntry& e, const RunConfig& cfg) {
  std::vector<CheckRecord> out;
  HomogeneousModel model = e.model();
  HoloCurve f0 = e.group->abelian() ? real_part_lift(*e.curve)
                                    : compose_curves(*e.curve, standard_gauge(e.group, e.curve->domain()));
  LocalConnectionData conn = build_Bphi(f0, model);
  Complex c = e.curve->domain().center();
  double radius = 0.15;
  PathSpec loop = PathSpec::circle(c, radius, 1000);
  Mat h = holonomy(*e.group, conn, loop);
  double r = (h - e.group->identity()).norm();
  out.push_back(make_record("holonomy-contractible", e.name, c, r,
                            cfg.tol("holonomy-contractible", 1e-6)));
  out.push_back(make_record("holonomy-in-H", e.name, c, e.group->h_membership_residual(h),
                            cfg.tol("holonomy-in-H", 1e-6)));
  return out;
}

std::vector<CheckRecord> check_periods(const CorpusEntry& e, const RunConfig& cfg) {
  std::vector<CheckRecord> out;
  PeriodReport rep = torus_periods(e.beta, e.period_loops, e.lattice, cfg.quad_nodes);
  auto itp = e.expected.find("puncture_period");
  for (std::size_t i = 0; i < rep.periods.size(); ++i) {
    if (itp != e.expected.end() && i == 0) {
      const CVec& want = std::get<CVec>(itp->second.value);
      out.push_back(make_record("puncture-period", e.name, std::nullopt,
                                (rep.periods[i] - want).norm(), itp->second.tol,
                                std::string("provenance=") + provenance_name(itp->second.prov)));
    }
    if (e.expected.count("real_periods"))
      out.push_back(make_record("real-periods", e.name, std::nullopt, rep.re_norm[i],
                                e.expected.at("real_periods").tol));
    if (!e.lattice.empty())
      out.push_back(make_record("lattice-membership", e.name, std::nullopt,
                                rep.lattice_residual[i],
                                cfg.tol("lattice-membership", 1e-10)));
  }
  return out;
}

std::vector<CheckRecord> check_brackets(const CorpusEntry& e, const RunConfig& cfg) {
  std::vector<CheckRecord> out;
  HomogeneousModel model = e.model();
  Rng rng = seeded(cfg, "brackets:" + e.name);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    Mat S = e.group->group_exp(e.group->random_g_element(rng, 0.3));
    ModelPoint p = model.project(S);
    Mat gamma = model.canonical_lift(p);
    TangentAtPoint u = model.tangent_from_frame(p, gamma, e.group->random_h_element(rng));
    TangentAtPoint v = model.tangent_from_frame(p, gamma, e.group->random_h_element(rng));
    TangentAtPoint generic = model.bracket(u, v);
    TangentAtPoint closed = model.bracket_closed_form(u, v);
    worst = std::max(worst, model.tangent_distance(generic, closed));
  }
  out.push_back(make_record("bracket-closed-form", e.name, std::nullopt, worst,
                            cfg.tol("bracket-closed-form", 1e-10)));
  return out;
}

std::vector<CheckRecord> check_convergence_rk4(const CorpusEntry& e, const RunConfig& cfg) {
  (void)cfg;
  std::vector<CheckRecord> out;
  if (e.group->abelian()) return out; // quadrature is exact on constants
  Mat E = e.group->h_basis()[0];
  double e8 = rk4_transport_error(*e.group, E, 8);
  double e16 = rk4_transport_error(*e.group, E, 16);
  double ratio = (e16 > 0) ? e8 / e16 : 1e9;
  double r = std::max(0.0, 8.0 - ratio);
  out.push_back(make_record("convergence-rk4", e.name, std::nullopt, r, 0.0,
                            "ratio=" + std::to_string(ratio)));
  return out;
}

std::vector<CheckRecord> check_convergence_oracle(const CorpusEntry& e, const RunConfig& cfg) {
  (void)cfg;
  std::vector<CheckRecord> out;
  OracleComparison coarse = oracle_compare(e, 12, 2e-2, 1e-3);
  OracleComparison fine = oracle_compare(e, 12, 1e-2, 1e-3);
  double ratio = (fine.max_rel_err > 0) ? coarse.max_rel_err / fine.max_rel_err : 1e9;
  double r = std::max(0.0, 3.0 - ratio);
  out.push_back(make_record("convergence-oracle", e.name, std::nullopt, r, 0.0,
                            "ratio=" + std::to_string(ratio)));
  return out;
}

} // namespace

// --- shared builders -----------------------------------------------------------

HoloCurve standard_gauge(GroupPtr group, const ChartDomain& dom) {
  MatrixCurve mc;
  Mat Z = group->h_basis()[0];
  if (group->h_basis().size() > 1) Z = Z + 0.5 * group->h_basis()[1];
  mc.factors.push_back({Z, real_smooth_poly(0.3, 0.2, 0.15)});
  return make_matrix_curve(std::move(group), dom, std::move(mc));
}

HoloCurve random_section(GroupPtr group, const ChartDomain& dom, Rng& rng) {
  MatrixCurve mc;
  mc.left = group->group_exp(group->random_g_element(rng, 0.2));
  for (int t = 0; t < 2; ++t) {
    Poly2 p;
    p.add(1, 0, Complex(gauss(rng, 0.3), gauss(rng, 0.3)));
    p.add(0, 1, Complex(gauss(rng, 0.3), gauss(rng, 0.3)));
    p.add(1, 1, Complex(gauss(rng, 0.15), gauss(rng, 0.15)));
    mc.factors.push_back({group->random_g_element(rng, 0.5), p});
  }
  return make_matrix_curve(std::move(group), dom, std::move(mc));
}

HoloCurve random_gauge(GroupPtr group, const ChartDomain& dom, Rng& rng) {
  MatrixCurve mc;
  mc.factors.push_back(
      {group->random_h_element(rng, 0.6),
       real_smooth_poly(gauss(rng, 0.4), gauss(rng, 0.4), gauss(rng, 0.2))});
  return make_matrix_curve(std::move(group), dom, std::move(mc));
}

OracleComparison oracle_compare(const CorpusEntry& entry, int grid, double spacing,
                                double chart_step) {
  HomogeneousModel model = entry.model();
  const HoloCurve& curve = *entry.curve;
  const Complex z0 = curve.domain().center();

  ImmersionSample s0 = project_immersion(curve, model, z0);
  NormalChart chart = normal_chart(model, s0.p);
  ChartMetricField field(&model, chart, chart_step);

  const int N = grid;
  std::vector<RVec> cgrid(static_cast<std::size_t>(N) * N);
  std::vector<Complex> zs(cgrid.size());
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      Complex z = z0 + Complex((i - (N - 1) / 2.0) * spacing, (j - (N - 1) / 2.0) * spacing);
      zs[static_cast<std::size_t>(i) * N + j] = z;
      if (!curve.domain().contains(z, 0.0))
        throw OutOfDomain("oracle window leaves the curve domain");
      cgrid[static_cast<std::size_t>(i) * N + j] =
          chart.from_point(model.project(curve.jet(z).f));
    }

  TensionResult tr = tension_mean_curvature(cgrid, N, N, field, spacing);

  OracleComparison cmp;
  for (int i = 1; i + 1 < N; ++i)
    for (int j = 1; j + 1 < N; ++j) {
      const std::size_t idx = tr.idx(i, j);
      const RVec& c = tr.c[idx];
      RMat g = field.gram(c);
      auto gnorm = [&](const RVec& v) { return std::sqrt(std::abs(v.dot(g * v))); };

      Complex z = zs[static_cast<std::size_t>(i) * N + j];
      ImmersionSample s = project_immersion(curve, model, z);
      MeanCurvature mc = mean_curvature_bracket(model, s);
      RVec hb = field.components(c, mc.tangent);

      cmp.max_rel_err =
          std::max(cmp.max_rel_err, gnorm(RVec(tr.H[idx] - hb)) / (1.0 + gnorm(hb)));
      cmp.max_H_oracle_norm = std::max(cmp.max_H_oracle_norm, gnorm(tr.H[idx]));
      cmp.max_conformal_residual =
          std::max(cmp.max_conformal_residual, tr.conformal_residual[idx]);
    }
  return cmp;
}

double rk4_transport_error(const RealFormGroup& G, const Mat& E, int steps) {
  LocalConnectionData conn;
  conn.domain = ChartDomain::rectangle(-2, 2, -2, 2);
  conn.a_x = [E](Complex) { return E; };
  conn.a_y = [E](Complex) { return Mat(Mat::Zero(E.rows(), E.cols())); };
  PathSpec seg = PathSpec::segment(Complex(0, 0), Complex(1, 0), steps);
  Mat h = parallel_transport(G, conn, seg);
  return (h - expm(Mat(-E))).norm();
}

// --- registry -----------------------------------------------------------------

const std::vector<CheckDef>& check_registry() {
  static const std::vector<CheckDef> defs = [] {
    std::vector<CheckDef> v;
    auto add = [&v](std::string name, std::string suite,
                    std::function<bool(const CorpusEntry&)> app,
                    std::function<std::vector<CheckRecord>(const CorpusEntry&, const RunConfig&)> fn) {
      v.push_back({std::move(name), std::move(suite), std::move(app), std::move(fn)});
    };
    add("membership", "curve", has_curve, check_membership);
    add("holomorphy", "curve", has_curve, check_holomorphy);
    add("isotropy", "curve", has_curve, check_isotropy);
    add("spacelike", "curve", has_immersion, check_spacelike);
    add("dtheta", "curve", has_curve, check_dtheta);
    add("conformal", "meancurv", has_immersion, check_conformal);
    add("meancurv", "meancurv", has_immersion, check_meancurv);
    add("corollaries", "meancurv", has_immersion, check_corollaries_grid);
    add("expected", "meancurv", has_immersion, check_expected);
    add("zsys", "zsys", [](const CorpusEntry&) { return true; }, check_zsys);
    add("zsys-gauge", "zsys", [](const CorpusEntry&) { return true; }, check_zsys_gauge);
    add("oracle", "oracle", oracle_ready, check_oracle);
    add("flatness", "weierstrass", has_immersion, check_flatness);
    add("lift", "weierstrass",
        [](const CorpusEntry& e) {
          return has_immersion(e) &&
                 e.curve->domain().kind == ChartDomain::Kind::Rectangle;
        },
        check_lift);
    add("holonomy", "weierstrass", has_immersion, check_holonomy_contractible);
    add("periods", "weierstrass", has_periods, check_periods);
    add("brackets", "brackets", has_closed_bracket, check_brackets);
    add("convergence-rk4", "convergence", [](const CorpusEntry&) { return true; },
        check_convergence_rk4);
    add("convergence-oracle", "convergence", oracle_ready, check_convergence_oracle);
    return v;
  }();
  return defs;
}

std::vector<CheckRecord> run_checks(const CorpusEntry& entry, const RunConfig& cfg,
                                    const std::vector<std::string>& selection) {
  auto selected = [&](const CheckDef& def) {
    if (selection.empty()) return true;
    for (const std::string& s : selection)
      if (s == def.suite || s == def.name) return true;
    return false;
  };
  std::vector<CheckRecord> records;
  for (const CheckDef& def : check_registry()) {
    if (!selected(def) || !def.applicable(entry)) continue;
    try {
      auto rs = def.run(entry, cfg);
      records.insert(records.end(), rs.begin(), rs.end());
    } catch (const Error& err) {
      records.push_back(make_record(def.name, entry.name, std::nullopt, 1.0, 0.0,
                                    std::string("error: ") + err.what()));
    }
  }
  return records;
}

} // namespace nullcurve
