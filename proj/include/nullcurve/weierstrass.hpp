#pragma once

#include "nullcurve/curve.hpp"
#include "nullcurve/homspace.hpp"

#include <functional>
#include <vector>

namespace nullcurve {

/// An h-valued 1-form a = a_x dx + a_y dy on a chart (local connection form).
struct LocalConnectionData {
  ChartDomain domain;
  std::function<Mat(Complex)> a_x, a_y;
};

/// Piecewise-smooth parametrized path t ∈ [0,1] ↦ z(t).
struct PathSpec {
  std::function<Complex(double)> z;
  std::function<Complex(double)> dz;
  int steps = 0; // 0 = automatic

  bool closed(double tol = 1e-10) const { return std::abs(z(1.0) - z(0.0)) <= tol; }
  double length_estimate(int samples = 256) const;

  static PathSpec segment(Complex a, Complex b, int steps = 0);
  static PathSpec circle(Complex center, double radius, int steps = 0, double angle0 = 0.0,
                         double turns = 1.0);
  static PathSpec polyline(std::vector<Complex> pts, int steps = 0);
  PathSpec then(PathSpec second) const;
};

/// Residuals of the integrability system on local 1-form data (θ̂, α̂):
///   r1 = ‖dα̂(∂x,∂y) + [θ̂_x,α̂_y] − [θ̂_y,α̂_x]‖
///   r2 = ‖dθ̂(∂x,∂y) + [θ̂_x,θ̂_y] − [α̂_x,α̂_y]‖
/// with the d-terms by central differences at step h.
std::pair<double, double> zsys_residual(const RealFormGroup& G, const FrameField& data,
                                        const ChartDomain& dom, Complex z, double h);

/// Local form of the flat connection attached to φ = π∘f0 in the
/// trivialization by the smooth reference lift f0:
///   a_x = θ_x + α_y,  a_y = θ_y − α_x  (frames of f0).
/// If phi is supplied, verifies π∘f0 = φ on samples (NotALift).
LocalConnectionData build_Bphi(const HoloCurve& f0, const HomogeneousModel& model,
                               const std::function<ModelPoint(Complex)>* phi = nullptr,
                               int check_samples = 5);

/// ‖∂x a_y − ∂y a_x + [a_x,a_y]‖ by central differences.
double flatness_residual(const RealFormGroup& G, const LocalConnectionData& conn, Complex z,
                         double h);

/// Same curvature assembled from the structure-equation decomposition of the
/// frames of f0; must agree with flatness_residual(build_Bphi(f0), ·).
double flatness_residual_structured(const HoloCurve& f0, Complex z, double h);

/// Solves dh/dt = −a(ż(t))·h, h(0)=e, with classical RK4; the result lies in
/// H up to integration error. Throws StepCountTooSmall if ‖a(ż)‖·Δt > 0.5.
Mat parallel_transport(const RealFormGroup& G, const LocalConnectionData& conn,
                       const PathSpec& path);

/// Transport around a closed loop; OpenPath if the endpoints differ.
Mat holonomy(const RealFormGroup& G, const LocalConnectionData& conn, const PathSpec& loop);

/// Grid lift f = f0·h by parallel transport along axis-parallel L-paths from
/// the basepoint. Rectangle domains only; NotFlat if the connection fails the
/// flatness screen.
struct LiftResult {
  int nx = 0, ny = 0;
  std::vector<Complex> zs;  // row-major nx×ny
  std::vector<Mat> f;       // lift along x-then-y L-paths
  double lpath_mismatch = 0.0;   // vs the reversed L-path order
  double holomorphy_max = 0.0;   // grid-FD residual of the lifted curve
  double flatness_max = 0.0;

  const Mat& at(int i, int j) const { return f[static_cast<std::size_t>(i) * ny + j]; }
  Complex z_at(int i, int j) const { return zs[static_cast<std::size_t>(i) * ny + j]; }
};

LiftResult holomorphic_lift(const HoloCurve& f0, const LocalConnectionData& conn, Complex z0,
                            int nx, int ny, double flat_tol = 1e-4);

/// Periods of a closed-form Cⁿ-valued 1-form β over generator loops, with the
/// distance of each period to Λ + iRⁿ.
struct PeriodReport {
  std::vector<CVec> periods;
  std::vector<double> lattice_residual; // dist(Re(P), Λ)
  std::vector<double> re_norm;          // ‖Re(P)‖
};

PeriodReport torus_periods(const std::function<CVec(Complex)>& beta,
                           const std::vector<PathSpec>& loops,
                           const std::vector<RVec>& lattice, int quad_nodes = 10000);

} // namespace nullcurve
