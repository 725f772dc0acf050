#include "nullcurve/weierstrass.hpp"

#include "nullcurve/errors.hpp"

#include <cmath>

namespace nullcurve {

// --- PathSpec -----------------------------------------------------------------

double PathSpec::length_estimate(int samples) const {
  double len = 0.0;
  for (int i = 0; i < samples; ++i) len += std::abs(dz((i + 0.5) / samples)) / samples;
  return len;
}

PathSpec PathSpec::segment(Complex a, Complex b, int steps) {
  PathSpec p;
  p.z = [a, b](double t) { return a + t * (b - a); };
  p.dz = [a, b](double) { return b - a; };
  p.steps = steps;
  return p;
}

PathSpec PathSpec::circle(Complex center, double radius, int steps, double angle0,
                          double turns) {
  PathSpec p;
  const double w = 2.0 * M_PI * turns;
  p.z = [=](double t) { return center + std::polar(radius, angle0 + w * t); };
  p.dz = [=](double t) { return Complex(0, w) * std::polar(radius, angle0 + w * t); };
  p.steps = steps;
  return p;
}

PathSpec PathSpec::polyline(std::vector<Complex> pts, int steps) {
  if (pts.size() < 2) throw OutOfDomain("polyline needs at least two points");
  PathSpec p;
  const int m = static_cast<int>(pts.size()) - 1;
  p.z = [pts, m](double t) {
    double u = std::clamp(t, 0.0, 1.0) * m;
    int k = std::min(static_cast<int>(u), m - 1);
    return pts[k] + (u - k) * (pts[k + 1] - pts[k]);
  };
  p.dz = [pts, m](double t) {
    double u = std::clamp(t, 0.0, 1.0) * m;
    int k = std::min(static_cast<int>(u), m - 1);
    return Complex(m, 0) * (pts[k + 1] - pts[k]);
  };
  p.steps = steps;
  return p;
}

PathSpec PathSpec::then(PathSpec second) const {
  PathSpec p;
  PathSpec first = *this;
  p.z = [first, second](double t) {
    return t < 0.5 ? first.z(2 * t) : second.z(2 * t - 1);
  };
  p.dz = [first, second](double t) {
    return t < 0.5 ? Complex(2, 0) * first.dz(2 * t) : Complex(2, 0) * second.dz(2 * t - 1);
  };
  p.steps = (steps > 0 && second.steps > 0) ? steps + second.steps : 0;
  return p;
}

// --- ZSys residual -------------------------------------------------------------

std::pair<double, double> zsys_residual(const RealFormGroup& G, const FrameField& data,
                                        const ChartDomain& dom, Complex z, double h) {
  (void)G; // brackets below are plain commutators, which vanish for diagonal abelian values
  if (!dom.contains(z, 2 * h)) throw OutOfDomain("zsys_residual: point too close to the boundary");
  FrameValues fpx = data(z + h), fmx = data(z - h);
  FrameValues fpy = data(z + kI * h), fmy = data(z - kI * h);
  FrameValues f = data(z);
  auto comm = [](const Mat& a, const Mat& b) { return Mat(a * b - b * a); };

  Mat d_alpha = (fpx.alpha_y - fmx.alpha_y) / (2 * h) - (fpy.alpha_x - fmy.alpha_x) / (2 * h);
  Mat r1 = d_alpha + comm(f.theta_x, f.alpha_y) - comm(f.theta_y, f.alpha_x);

  Mat d_theta = (fpx.theta_y - fmx.theta_y) / (2 * h) - (fpy.theta_x - fmy.theta_x) / (2 * h);
  Mat r2 = d_theta + comm(f.theta_x, f.theta_y) - comm(f.alpha_x, f.alpha_y);
  return {r1.norm(), r2.norm()};
}

// --- B_φ -----------------------------------------------------------------------

LocalConnectionData build_Bphi(const HoloCurve& f0, const HomogeneousModel& model,
                               const std::function<ModelPoint(Complex)>* phi,
                               int check_samples) {
  if (phi) {
    double worst = 0.0;
    auto pts = f0.domain().grid(check_samples, check_samples, 0.0);
    for (Complex z : pts) {
      ModelPoint proj = model.project(f0.jet(z).f);
      worst = std::max(worst, model.point_distance(proj, (*phi)(z)));
    }
    if (worst > 1e-8) throw NotALift("reference map does not lift the given immersion");
  }
  FrameField frames = frame_field(f0);
  LocalConnectionData conn;
  conn.domain = f0.domain();
  conn.a_x = [frames](Complex z) {
    FrameValues f = frames(z);
    return Mat(f.theta_x + f.alpha_y);
  };
  conn.a_y = [frames](Complex z) {
    FrameValues f = frames(z);
    return Mat(f.theta_y - f.alpha_x);
  };
  return conn;
}

double flatness_residual(const RealFormGroup& G, const LocalConnectionData& conn, Complex z,
                         double h) {
  if (!conn.domain.contains(z, 2 * h))
    throw OutOfDomain("flatness_residual: point too close to the boundary");
  Mat dx_ay = (conn.a_y(z + h) - conn.a_y(z - h)) / (2 * h);
  Mat dy_ax = (conn.a_x(z + kI * h) - conn.a_x(z - kI * h)) / (2 * h);
  Mat ax = conn.a_x(z), ay = conn.a_y(z);
  Mat br = G.abelian() ? Mat(Mat::Zero(ax.rows(), ax.cols())) : Mat(ax * ay - ay * ax);
  return (dx_ay - dy_ax + br).norm();
}

double flatness_residual_structured(const HoloCurve& f0, Complex z, double h) {
  if (!f0.domain().contains(z, 2 * h))
    throw OutOfDomain("flatness_residual_structured: point too close to the boundary");
  const RealFormGroup& G = f0.group();
  FrameField data = frame_field(f0);
  FrameValues fpx = data(z + h), fmx = data(z - h);
  FrameValues fpy = data(z + kI * h), fmy = data(z - kI * h);
  FrameValues f = data(z);
  auto comm = [&](const Mat& a, const Mat& b) {
    return G.abelian() ? Mat(Mat::Zero(a.rows(), a.cols())) : Mat(a * b - b * a);
  };
  // Ω_A-part + D_A(Jα)-part + ½[Jα∧Jα]-part of the translated curvature.
  Mat omega = (fpx.theta_y - fmx.theta_y) / (2 * h) - (fpy.theta_x - fmy.theta_x) / (2 * h) +
              comm(f.theta_x, f.theta_y);
  Mat dA_Jalpha = -(fpx.alpha_x - fmx.alpha_x) / (2 * h) - (fpy.alpha_y - fmy.alpha_y) / (2 * h) -
                  comm(f.theta_x, f.alpha_x) - comm(f.theta_y, f.alpha_y);
  Mat half_JJ = comm(f.alpha_x, f.alpha_y);
  return (omega + dA_Jalpha + half_JJ).norm();
}

// --- parallel transport ----------------------------------------------------------

namespace {

int auto_steps(const RealFormGroup& G, const LocalConnectionData& conn, const PathSpec& path) {
  if (path.steps > 0) return path.steps;
  double max_a = 0.0;
  for (int i = 0; i <= 16; ++i) {
    double t = i / 16.0;
    max_a = std::max(max_a, (conn.a_x(path.z(t)).norm() + conn.a_y(path.z(t)).norm()));
  }
  double len = path.length_estimate();
  double n = std::ceil(50.0 * len * std::max(max_a, 1.0));
  return static_cast<int>(std::min(n < 8 ? 8.0 : n, 1e6));
}

} // namespace

Mat parallel_transport(const RealFormGroup& G, const LocalConnectionData& conn,
                       const PathSpec& path) {
  const int N = auto_steps(G, conn, path);
  const double dt = 1.0 / N;
  const bool mult = !G.abelian();
  auto a_of = [&](double t) -> Mat {
    Complex zd = path.dz(t);
    return conn.a_x(path.z(t)) * zd.real() + conn.a_y(path.z(t)) * zd.imag();
  };
  Mat h = G.identity();
  for (int k = 0; k < N; ++k) {
    const double t = k * dt;
    Mat a1 = a_of(t), a2 = a_of(t + 0.5 * dt), a4 = a_of(t + dt);
    if (a2.norm() * dt > 0.5)
      throw StepCountTooSmall("parallel_transport: ‖a(ż)‖·Δt > 0.5, increase steps");
    if (mult) {
      Mat k1 = -a1 * h;
      Mat k2 = -a2 * (h + 0.5 * dt * k1);
      Mat k3 = -a2 * (h + 0.5 * dt * k2);
      Mat k4 = -a4 * (h + dt * k3);
      h += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    } else {
      h += -(dt / 6.0) * (a1 + 4.0 * a2 + a4);
    }
  }
  return h;
}

Mat holonomy(const RealFormGroup& G, const LocalConnectionData& conn, const PathSpec& loop) {
  if (!loop.closed()) throw OpenPath("holonomy needs a closed loop");
  return parallel_transport(G, conn, loop);
}

// --- grid lift -------------------------------------------------------------------

namespace {

// Transport along one axis-parallel grid edge.
Mat edge_transport(const RealFormGroup& G, const LocalConnectionData& conn, Complex a,
                   Complex b, int steps) {
  PathSpec seg = PathSpec::segment(a, b, steps);
  return parallel_transport(G, conn, seg);
}

} // namespace

LiftResult holomorphic_lift(const HoloCurve& f0, const LocalConnectionData& conn, Complex z0,
                            int nx, int ny, double flat_tol) {
  const RealFormGroup& G = f0.group();
  const ChartDomain& dom = conn.domain;
  if (dom.kind != ChartDomain::Kind::Rectangle)
    throw OutOfDomain("holomorphic_lift needs a simply connected rectangle domain");
  if (nx < 2 || ny < 2) throw OutOfDomain("lift grid needs at least 2×2 nodes");

  const double pad = 1e-3 * std::min(dom.x1 - dom.x0, dom.y1 - dom.y0);
  const double ax = dom.x0 + pad, bx = dom.x1 - pad;
  const double ay = dom.y0 + pad, by = dom.y1 - pad;
  const double hx = (bx - ax) / (nx - 1), hy = (by - ay) / (ny - 1);

  LiftResult out;
  out.nx = nx;
  out.ny = ny;
  out.zs.resize(static_cast<std::size_t>(nx) * ny);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      out.zs[static_cast<std::size_t>(i) * ny + j] = Complex(ax + i * hx, ay + j * hy);

  // flatness screen
  double fmax = 0.0;
  const double hfd = 1e-4;
  for (Complex z : dom.grid(5, 5, 2 * hfd + pad))
    fmax = std::max(fmax, flatness_residual(G, conn, z, hfd));
  out.flatness_max = fmax;
  if (fmax > flat_tol) throw NotFlat("connection is not flat; no single-valued lift");

  // basepoint snapped to the nearest grid node
  int i0 = std::clamp(static_cast<int>(std::round((z0.real() - ax) / hx)), 0, nx - 1);
  int j0 = std::clamp(static_cast<int>(std::round((z0.imag() - ay) / hy)), 0, ny - 1);

  const int edge_steps = 12;
  auto znode = [&](int i, int j) { return out.zs[static_cast<std::size_t>(i) * ny + j]; };

  auto march = [&](bool x_first) {
    std::vector<Mat> h(static_cast<std::size_t>(nx) * ny);
    auto at = [&](int i, int j) -> Mat& { return h[static_cast<std::size_t>(i) * ny + j]; };
    at(i0, j0) = G.identity();
    if (x_first) {
      for (int i = i0 + 1; i < nx; ++i)
        at(i, j0) = G.compose(edge_transport(G, conn, znode(i - 1, j0), znode(i, j0), edge_steps), at(i - 1, j0));
      for (int i = i0 - 1; i >= 0; --i)
        at(i, j0) = G.compose(edge_transport(G, conn, znode(i + 1, j0), znode(i, j0), edge_steps), at(i + 1, j0));
      for (int i = 0; i < nx; ++i) {
        for (int j = j0 + 1; j < ny; ++j)
          at(i, j) = G.compose(edge_transport(G, conn, znode(i, j - 1), znode(i, j), edge_steps), at(i, j - 1));
        for (int j = j0 - 1; j >= 0; --j)
          at(i, j) = G.compose(edge_transport(G, conn, znode(i, j + 1), znode(i, j), edge_steps), at(i, j + 1));
      }
    } else {
      for (int j = j0 + 1; j < ny; ++j)
        at(i0, j) = G.compose(edge_transport(G, conn, znode(i0, j - 1), znode(i0, j), edge_steps), at(i0, j - 1));
      for (int j = j0 - 1; j >= 0; --j)
        at(i0, j) = G.compose(edge_transport(G, conn, znode(i0, j + 1), znode(i0, j), edge_steps), at(i0, j + 1));
      for (int j = 0; j < ny; ++j) {
        for (int i = i0 + 1; i < nx; ++i)
          at(i, j) = G.compose(edge_transport(G, conn, znode(i - 1, j), znode(i, j), edge_steps), at(i - 1, j));
        for (int i = i0 - 1; i >= 0; --i)
          at(i, j) = G.compose(edge_transport(G, conn, znode(i + 1, j), znode(i, j), edge_steps), at(i + 1, j));
      }
    }
    return h;
  };

  std::vector<Mat> hL = march(true), hR = march(false);

  out.f.resize(hL.size());
  double mismatch = 0.0;
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      const std::size_t idx = static_cast<std::size_t>(i) * ny + j;
      Mat base = f0.jet(out.zs[idx]).f;
      out.f[idx] = G.compose(base, hL[idx]);
      mismatch = std::max(mismatch, (out.f[idx] - G.compose(base, hR[idx])).norm());
    }
  out.lpath_mismatch = mismatch;

  // holomorphy of the lifted grid (interior, grid-step central differences)
  double worst = 0.0;
  for (int i = 1; i + 1 < nx; ++i)
    for (int j = 1; j + 1 < ny; ++j) {
      CurveJet jet;
      jet.z = znode(i, j);
      jet.f = out.at(i, j);
      jet.dfx = (out.at(i + 1, j) - out.at(i - 1, j)) / (2 * hx);
      jet.dfy = (out.at(i, j + 1) - out.at(i, j - 1)) / (2 * hy);
      worst = std::max(worst, holomorphy_residual(G, jet));
    }
  out.holomorphy_max = worst;
  return out;
}

// --- periods ---------------------------------------------------------------------

PeriodReport torus_periods(const std::function<CVec(Complex)>& beta,
                           const std::vector<PathSpec>& loops,
                           const std::vector<RVec>& lattice, int quad_nodes) {
  PeriodReport rep;
  int n = quad_nodes + (quad_nodes % 2); // Simpson needs an even interval count
  for (const PathSpec& loop : loops) {
    auto integrand = [&](double t) -> CVec { return beta(loop.z(t)) * loop.dz(t); };
    CVec acc = integrand(0.0) + integrand(1.0);
    for (int k = 1; k < n; ++k) acc += ((k % 2) ? 4.0 : 2.0) * integrand(double(k) / n);
    CVec period = acc / (3.0 * n);
    rep.periods.push_back(period);
    RVec re = period.real();
    if (!lattice.empty()) {
      RMat L(re.size(), static_cast<Eigen::Index>(lattice.size()));
      for (std::size_t j = 0; j < lattice.size(); ++j)
        L.col(static_cast<Eigen::Index>(j)) = lattice[j];
      RVec c = L.colPivHouseholderQr().solve(re);
      for (Eigen::Index i = 0; i < c.size(); ++i) c[i] = std::round(c[i]);
      rep.lattice_residual.push_back((re - L * c).norm());
    } else {
      rep.lattice_residual.push_back(re.norm());
    }
    rep.re_norm.push_back(re.norm());
  }
  return rep;
}

} // namespace nullcurve
