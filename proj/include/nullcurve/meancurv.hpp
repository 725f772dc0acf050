#pragma once

#include "nullcurve/curve.hpp"
#include "nullcurve/homspace.hpp"

namespace nullcurve {

/// Pointwise data of the projected immersion φ = π∘f.
struct ImmersionSample {
  Complex z;
  ModelPoint p;
  TangentAtPoint dphix, dphiy;
  double lambda2 = 0.0;           // g(α_x, α_x) via the frame
  double lambda2_metric = 0.0;    // g_M(φ_x, φ_x) via the model metric
  FrameValues frames;
  double conformal_residual = 0.0;
  double holo_residual = 0.0;
  Mat lift;                       // the curve's own group value f(z)
};

/// Projects the curve jet at z to M; throws NotImmersion for degenerate
/// points (df = 0 or non-positive conformal factor).
ImmersionSample project_immersion(const HoloCurve& curve, const HomogeneousModel& model,
                                  Complex z);

struct MeanCurvature {
  Mat frame;              // [α_x, α_y] / λ² in the curve's own gauge
  TangentAtPoint tangent; // model-tangent value via bracket on T_M
  double agreement;       // distance between the two routes (tangent reps)
};

MeanCurvature mean_curvature_bracket(const HomogeneousModel& model, const ImmersionSample& s);

/// Mean curvature from the trivialized de Rham route:
/// (∂x α_x + ∂y α_y + [θ_x,α_x] + [θ_y,α_y]) / (2λ²), derivatives by central
/// differences of the frame fields at step h.
Mat mean_curvature_maurer(const HoloCurve& curve, const HomogeneousModel& model, Complex z,
                          double h);

struct CorollaryReport {
  double r1 = 0.0;       // |g(H,H) + K|
  double r2 = 0.0;       // max_w ‖[H,w]·λ² − R(φx,φy)w‖
  double r3 = 0.0;       // |H_scalar − √|K|| (3-dim simple case)
  double K = 0.0;
  double gHH = 0.0;
  double H_scalar = 0.0;
  int gauss_orientation = 0;
  bool has_scalar = false;
};

CorollaryReport check_corollaries(const HomogeneousModel& model, const ImmersionSample& s);

} // namespace nullcurve
