#include "nullcurve/curve.hpp"

#include "nullcurve/errors.hpp"
#include "nullcurve/matfun.hpp"

#include <cmath>

namespace nullcurve {

// --- ChartDomain --------------------------------------------------------------

ChartDomain ChartDomain::rectangle(double x0, double x1, double y0, double y1) {
  ChartDomain d;
  d.kind = Kind::Rectangle;
  d.x0 = x0; d.x1 = x1; d.y0 = y0; d.y1 = y1;
  d.validate();
  return d;
}

ChartDomain ChartDomain::annulus_sector(double r0, double r1, double a0, double a1) {
  ChartDomain d;
  d.kind = Kind::AnnulusSector;
  d.r0 = r0; d.r1 = r1; d.a0 = a0; d.a1 = a1;
  d.validate();
  return d;
}

ChartDomain ChartDomain::punctured_rectangle(double x0, double x1, double y0, double y1,
                                             std::vector<Complex> punctures) {
  ChartDomain d;
  d.kind = Kind::PuncturedRectangle;
  d.x0 = x0; d.x1 = x1; d.y0 = y0; d.y1 = y1;
  d.punctures = std::move(punctures);
  d.validate();
  return d;
}

void ChartDomain::validate() const {
  if (kind == Kind::AnnulusSector) {
    if (!(r0 >= 0 && r1 > r0 && a1 > a0)) throw OutOfDomain("empty annulus sector");
    return;
  }
  if (!(x1 > x0 && y1 > y0)) throw OutOfDomain("empty rectangle");
  for (Complex p : punctures)
    if (!(p.real() > x0 && p.real() < x1 && p.imag() > y0 && p.imag() < y1))
      throw OutOfDomain("puncture outside the rectangle");
}

bool ChartDomain::contains(Complex z, double margin) const {
  if (kind == Kind::AnnulusSector) {
    const double r = std::abs(z);
    if (r < r0 + margin || r > r1 - margin) return false;
    const double ang = std::arg(z);
    const double am = (r0 > 0) ? margin / r0 : 0.0;
    return ang >= a0 + am && ang <= a1 - am;
  }
  if (z.real() < x0 + margin || z.real() > x1 - margin || z.imag() < y0 + margin ||
      z.imag() > y1 - margin)
    return false;
  for (Complex p : punctures)
    if (std::abs(z - p) <= margin) return false;
  return true;
}

Complex ChartDomain::center() const {
  if (kind == Kind::AnnulusSector)
    return std::polar(0.5 * (r0 + r1), 0.5 * (a0 + a1));
  Complex c(0.5 * (x0 + x1), 0.5 * (y0 + y1));
  if (!contains(c, 0.0)) c += Complex(0.25 * (x1 - x0), 0.125 * (y1 - y0));
  return c;
}

std::vector<Complex> ChartDomain::grid(int nx, int ny, double margin) const {
  std::vector<Complex> pts;
  pts.reserve(static_cast<std::size_t>(nx) * ny);
  if (kind == Kind::AnnulusSector) {
    for (int i = 0; i < nx; ++i)
      for (int j = 0; j < ny; ++j) {
        double r = r0 + (r1 - r0) * (i + 0.5) / nx;
        double a = a0 + (a1 - a0) * (j + 0.5) / ny;
        Complex z = std::polar(r, a);
        if (contains(z, margin)) pts.push_back(z);
      }
    return pts;
  }
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      Complex z(x0 + (x1 - x0) * (i + 0.5) / nx, y0 + (y1 - y0) * (j + 0.5) / ny);
      if (contains(z, margin)) pts.push_back(z);
    }
  return pts;
}

// --- HoloCurve ----------------------------------------------------------------

HoloCurve::HoloCurve(GroupPtr group, ChartDomain domain, Evaluator eval, bool closed_form,
                     double h_fd)
    : group_(std::move(group)),
      domain_(std::move(domain)),
      eval_(std::move(eval)),
      closed_form_(closed_form),
      h_fd_(h_fd) {}

CurveJet HoloCurve::jet(Complex z) const { return eval_(z); }

double HoloCurve::holomorphy_tol(const CurveJet& jet) const {
  if (closed_form_) return 1e-8;
  return 1e-4 * (jet.dfx.norm() + jet.dfy.norm() + 1e-12);
}

CurveJet MatrixCurve::jet(const RealFormGroup& G, Complex z) const {
  const Mat e = G.identity();
  Mat l = (left.size() == 0) ? e : left;
  if (G.abelian()) {
    Mat f = l, dfx = Mat::Zero(l.rows(), l.cols()), dfy = dfx;
    for (const auto& fac : factors) {
      f += fac.p.eval(z) * fac.A;
      dfx += fac.p.dx(z) * fac.A;
      dfy += fac.p.dy(z) * fac.A;
    }
    return {z, f, dfx, dfy};
  }
  std::vector<Mat> F, dFx, dFy;
  F.reserve(factors.size());
  for (const auto& fac : factors) {
    Mat Fi = expm(Complex(fac.p.eval(z)) * fac.A);
    F.push_back(Fi);
    dFx.push_back(fac.p.dx(z) * fac.A * Fi);
    dFy.push_back(fac.p.dy(z) * fac.A * Fi);
  }
  Mat f = l;
  for (const Mat& Fi : F) f = f * Fi;
  Mat dfx = Mat::Zero(f.rows(), f.cols()), dfy = dfx;
  for (std::size_t t = 0; t < F.size(); ++t) {
    Mat px = l, py = l;
    for (std::size_t s = 0; s < F.size(); ++s) {
      px = px * (s == t ? dFx[s] : F[s]);
      py = py * (s == t ? dFy[s] : F[s]);
    }
    dfx += px;
    dfy += py;
  }
  return {z, f, dfx, dfy};
}

CurveJet AbelianCurve::jet(Complex z) const {
  const int n = static_cast<int>(components.size());
  Mat f = Mat::Zero(n, n), dfx = f, dfy = f;
  for (int i = 0; i < n; ++i) {
    f(i, i) = components[i].eval(z);
    Complex d = components[i].deriv(z);
    dfx(i, i) = d;
    dfy(i, i) = kI * d;
  }
  return {z, f, dfx, dfy};
}

HoloCurve make_matrix_curve(GroupPtr G, ChartDomain dom, MatrixCurve c) {
  const RealFormGroup* g = G.get();
  return HoloCurve(G, std::move(dom),
                   [g, c = std::move(c)](Complex z) { return c.jet(*g, z); },
                   /*closed_form=*/true);
}

HoloCurve make_abelian_curve(GroupPtr G, ChartDomain dom, AbelianCurve c) {
  if (!G->abelian()) throw WrongDimension("abelian curve needs an abelian group");
  if (static_cast<int>(c.components.size()) != G->n())
    throw WrongDimension("component count must match the group dimension");
  return HoloCurve(std::move(G), std::move(dom),
                   [c = std::move(c)](Complex z) { return c.jet(z); },
                   /*closed_form=*/true);
}

HoloCurve make_numeric_curve(GroupPtr G, ChartDomain dom, std::function<Mat(Complex)> value,
                             double h_fd) {
  return HoloCurve(std::move(G), std::move(dom),
                   [value = std::move(value), h_fd](Complex z) {
                     Mat f = value(z);
                     Mat dfx = (value(z + h_fd) - value(z - h_fd)) / (2 * h_fd);
                     Mat dfy = (value(z + kI * h_fd) - value(z - kI * h_fd)) / (2 * h_fd);
                     return CurveJet{z, f, dfx, dfy};
                   },
                   /*closed_form=*/false, h_fd);
}

HoloCurve compose_curves(const HoloCurve& f1, const HoloCurve& f2) {
  GroupPtr G = f1.group_ptr();
  bool closed = f1.closed_form() && f2.closed_form();
  return HoloCurve(
      G, f1.domain(),
      [G, e1 = f1, e2 = f2](Complex z) {
        CurveJet a = e1.jet(z), b = e2.jet(z);
        if (G->abelian())
          return CurveJet{z, a.f + b.f, a.dfx + b.dfx, a.dfy + b.dfy};
        return CurveJet{z, a.f * b.f, a.dfx * b.f + a.f * b.dfx,
                        a.dfy * b.f + a.f * b.dfy};
      },
      closed, std::min(f1.fd_step(), f2.fd_step()));
}

HoloCurve right_translated(const HoloCurve& f, const Mat& h0) {
  GroupPtr G = f.group_ptr();
  return HoloCurve(G, f.domain(),
                   [G, f, h0](Complex z) {
                     CurveJet j = f.jet(z);
                     if (G->abelian())
                       return CurveJet{z, j.f + h0, j.dfx, j.dfy};
                     return CurveJet{z, j.f * h0, j.dfx * h0, j.dfy * h0};
                   },
                   f.closed_form(), f.fd_step());
}

HoloCurve real_part_lift(const HoloCurve& f) {
  if (!f.group().abelian()) throw WrongDimension("real_part_lift is abelian-only");
  return HoloCurve(f.group_ptr(), f.domain(),
                   [f](Complex z) {
                     CurveJet j = f.jet(z);
                     return CurveJet{z, j.f.real().cast<Complex>(),
                                     j.dfx.real().cast<Complex>(),
                                     j.dfy.real().cast<Complex>()};
                   },
                   f.closed_form(), f.fd_step());
}

HoloCurve reparametrized(const HoloCurve& f, Complex a) {
  // w = a z; d/dx f(az) = Re(a)·(df/du) + Im(a)·(df/dv) where u+iv = az.
  return HoloCurve(f.group_ptr(), f.domain(),
                   [f, a](Complex z) {
                     CurveJet j = f.jet(a * z);
                     Mat dfx = a.real() * j.dfx + a.imag() * j.dfy;
                     Mat dfy = -a.imag() * j.dfx + a.real() * j.dfy;
                     return CurveJet{z, j.f, dfx, dfy};
                   },
                   f.closed_form(), f.fd_step());
}

HoloCurve conjugate_parameter(const HoloCurve& f) {
  return HoloCurve(f.group_ptr(), f.domain(),
                   [f](Complex z) {
                     CurveJet j = f.jet(std::conj(z));
                     return CurveJet{z, j.f, j.dfx, Mat(-j.dfy)};
                   },
                   f.closed_form(), f.fd_step());
}

// --- pointwise analysis --------------------------------------------------------

FrameValues pullback_frames(const RealFormGroup& G, const CurveJet& jet) {
  Mat qx = G.maurer_cartan(jet.f, jet.dfx);
  Mat qy = G.maurer_cartan(jet.f, jet.dfy);
  auto [tx, ax] = G.split(qx);
  auto [ty, ay] = G.split(qy);
  return {tx, ty, ax, ay};
}

double holomorphy_residual(const RealFormGroup& G, const CurveJet& jet) {
  FrameValues fr = pullback_frames(G, jet);
  return (fr.alpha_y + fr.theta_x).norm() + (fr.theta_y - fr.alpha_x).norm();
}

double isotropy_residual(const RealFormGroup& G, const CurveJet& jet) {
  Mat q = 0.5 * (G.maurer_cartan(jet.f, jet.dfx) - kI * G.maurer_cartan(jet.f, jet.dfy));
  return std::abs(G.formC(q, q));
}

double spacelike_margin(const RealFormGroup& G, const CurveJet& jet) {
  FrameValues fr = pullback_frames(G, jet);
  return G.form(fr.alpha_x, fr.alpha_x) + G.form(fr.alpha_y, fr.alpha_y);
}

double dtheta_residual(const HoloCurve& curve, Complex z, double h) {
  if (!curve.domain().contains(z, 2 * h)) throw OutOfDomain("dtheta_residual: point too close to the boundary");
  const RealFormGroup& G = curve.group();
  auto theta_at = [&](Complex w) { return pullback_frames(G, curve.jet(w)); };
  Mat dx_ty = (theta_at(z + h).theta_y - theta_at(z - h).theta_y) / (2 * h);
  Mat dy_tx = (theta_at(z + kI * h).theta_x - theta_at(z - kI * h).theta_x) / (2 * h);
  return (dx_ty - dy_tx).norm();
}

FrameField frame_field(const HoloCurve& curve) {
  return [curve](Complex z) { return pullback_frames(curve.group(), curve.jet(z)); };
}

FrameField gauge_transform(GroupPtr G, const FrameField& F, const HoloCurve& gauge) {
  return [G, F, gauge](Complex z) {
    FrameValues fr = F(z);
    CurveJet h = gauge.jet(z);
    Mat hinv = G->inverse(h.f);
    auto ad = [&](const Mat& m) { return G->adjoint_action(hinv, m); };
    Mat dhx = G->maurer_cartan(h.f, h.dfx);
    Mat dhy = G->maurer_cartan(h.f, h.dfy);
    return FrameValues{ad(fr.theta_x) + dhx, ad(fr.theta_y) + dhy, ad(fr.alpha_x),
                       ad(fr.alpha_y)};
  };
}

} // namespace nullcurve
