#include "nullcurve/meancurv.hpp"

#include "nullcurve/errors.hpp"

#include <cmath>

namespace nullcurve {

ImmersionSample project_immersion(const HoloCurve& curve, const HomogeneousModel& model,
                                  Complex z) {
  const RealFormGroup& G = curve.group();
  CurveJet jet = curve.jet(z);
  ImmersionSample s;
  s.z = z;
  s.lift = jet.f;
  s.frames = pullback_frames(G, jet);
  s.holo_residual = (s.frames.alpha_y + s.frames.theta_x).norm() +
                    (s.frames.theta_y - s.frames.alpha_x).norm();
  s.p = model.project(jet.f);
  s.dphix = model.pushforward(jet.f, G.maurer_cartan(jet.f, jet.dfx));
  s.dphiy = model.pushforward(jet.f, G.maurer_cartan(jet.f, jet.dfy));
  s.lambda2 = G.form(s.frames.alpha_x, s.frames.alpha_x);

  const double scale = 1.0 + jet.dfx.squaredNorm() + jet.dfy.squaredNorm();
  if (s.lambda2 < 1e-10 * scale)
    throw NotImmersion("conformal factor is not positive at this point");

  const double gxx = model.metric(s.dphix, s.dphix);
  const double gyy = model.metric(s.dphiy, s.dphiy);
  const double gxy = model.metric(s.dphix, s.dphiy);
  s.lambda2_metric = gxx;
  s.conformal_residual = std::abs(gxx - gyy) + std::abs(gxy);
  return s;
}

MeanCurvature mean_curvature_bracket(const HomogeneousModel& model, const ImmersionSample& s) {
  MeanCurvature out;
  Mat br = s.frames.alpha_x * s.frames.alpha_y - s.frames.alpha_y * s.frames.alpha_x;
  out.frame = br / s.lambda2;
  out.tangent = model.tangent_scale(model.bracket(s.dphix, s.dphiy), 1.0 / s.lambda2);
  TangentAtPoint via_frame = model.tangent_from_frame(s.p, s.lift, out.frame);
  out.agreement = model.tangent_distance(out.tangent, via_frame);
  return out;
}

Mat mean_curvature_maurer(const HoloCurve& curve, const HomogeneousModel& model, Complex z,
                          double h) {
  if (!curve.domain().contains(z, 2 * h))
    throw OutOfDomain("mean_curvature_maurer: point too close to the boundary");
  const RealFormGroup& G = curve.group();
  ImmersionSample s = project_immersion(curve, model, z);
  auto frames_at = [&](Complex w) { return pullback_frames(G, curve.jet(w)); };
  FrameValues fpx = frames_at(z + h), fmx = frames_at(z - h);
  FrameValues fpy = frames_at(z + kI * h), fmy = frames_at(z - kI * h);
  Mat dx_ax = (fpx.alpha_x - fmx.alpha_x) / (2 * h);
  Mat dy_ay = (fpy.alpha_y - fmy.alpha_y) / (2 * h);
  const FrameValues& f = s.frames;
  Mat comm = (f.theta_x * f.alpha_x - f.alpha_x * f.theta_x) +
             (f.theta_y * f.alpha_y - f.alpha_y * f.theta_y);
  return (dx_ax + dy_ay + comm) / (2.0 * s.lambda2);
}

CorollaryReport check_corollaries(const HomogeneousModel& model, const ImmersionSample& s) {
  const RealFormGroup& G = model.group();
  CorollaryReport rep;
  MeanCurvature mc = mean_curvature_bracket(model, s);
  rep.gHH = G.form(mc.frame, mc.frame);
  rep.K = model.sectional_curvature(s.dphix, s.dphiy);
  rep.r1 = std::abs(rep.gHH + rep.K);

  // eq. relating [H,·]·vol to the pulled-back curvature, tested on a basis.
  Mat gamma = model.canonical_lift(s.p);
  double worst = 0.0;
  for (const Mat& e : G.h_basis()) {
    TangentAtPoint w = model.tangent_from_frame(s.p, gamma, e);
    TangentAtPoint lhs = model.tangent_scale(model.bracket(mc.tangent, w), s.lambda2);
    TangentAtPoint rhs = model.curvature(s.dphix, s.dphiy, w);
    worst = std::max(worst, model.tangent_distance(lhs, rhs));
  }
  rep.r2 = worst;

  if (G.dim_h() == 3 && !G.abelian()) {
    Mat br = s.frames.alpha_x * s.frames.alpha_y - s.frames.alpha_y * s.frames.alpha_x;
    const double B = G.form(br, br);
    if (std::abs(B) > 1e-12) {
      rep.has_scalar = true;
      rep.gauss_orientation = G.orientation_sign(s.frames.alpha_x, s.frames.alpha_y, br);
      Mat eta = br / std::sqrt(std::abs(B));
      if (rep.gauss_orientation < 0) eta = -eta;
      const double g_eta = G.form(eta, eta); // ±1
      rep.H_scalar = G.form(mc.frame, eta) / g_eta;
      rep.r3 = std::abs(rep.H_scalar - std::sqrt(std::abs(rep.K)));
    }
  }
  return rep;
}

} // namespace nullcurve
