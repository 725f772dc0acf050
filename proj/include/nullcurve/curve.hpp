#pragma once

#include "nullcurve/poly.hpp"
#include "nullcurve/realform.hpp"

#include <functional>
#include <vector>

namespace nullcurve {

/// Planar coordinate chart of the surface, with optional punctures.
struct ChartDomain {
  enum class Kind { Rectangle, AnnulusSector, PuncturedRectangle };

  Kind kind = Kind::Rectangle;
  double x0 = -1, x1 = 1, y0 = -1, y1 = 1; // rectangle bounds
  double r0 = 0, r1 = 0, a0 = 0, a1 = 0;   // annulus-sector bounds
  std::vector<Complex> punctures;

  static ChartDomain rectangle(double x0, double x1, double y0, double y1);
  static ChartDomain annulus_sector(double r0, double r1, double a0, double a1);
  static ChartDomain punctured_rectangle(double x0, double x1, double y0, double y1,
                                         std::vector<Complex> punctures);

  void validate() const; // non-empty interior, punctures inside
  bool contains(Complex z, double margin = 0.0) const;
  Complex center() const;
  /// Uniform interior sample points (margin from every boundary/puncture).
  std::vector<Complex> grid(int nx, int ny, double margin) const;
};

/// First-order data of a parametrized map into G at one parameter value.
struct CurveJet {
  Complex z;
  Mat f, dfx, dfy;
};

/// Values of the pulled-back forms θ_f, α_f on the coordinate fields.
struct FrameValues {
  Mat theta_x, theta_y, alpha_x, alpha_y;
};

/// A parametrized map from a planar chart into G with pointwise jets.
class HoloCurve {
public:
  using Evaluator = std::function<CurveJet(Complex)>;

  HoloCurve(GroupPtr group, ChartDomain domain, Evaluator eval, bool closed_form,
            double h_fd = 1e-5);

  CurveJet jet(Complex z) const;
  const RealFormGroup& group() const { return *group_; }
  GroupPtr group_ptr() const { return group_; }
  const ChartDomain& domain() const { return domain_; }
  bool closed_form() const { return closed_form_; }
  double fd_step() const { return h_fd_; }
  /// Default holomorphy tolerance: 1e-8 for closed forms, 1e-4·‖df‖ for
  /// numeric jets.
  double holomorphy_tol(const CurveJet& jet) const;

private:
  GroupPtr group_;
  ChartDomain domain_;
  Evaluator eval_;
  bool closed_form_;
  double h_fd_;
};

/// Closed-form matrix curve: γ0 · Π_t exp(p_t(z, z̄) A_t).
struct MatrixCurve {
  Mat left;                       // constant left factor (group identity if empty)
  struct Factor {
    Mat A;
    Poly2 p;
  };
  std::vector<Factor> factors;

  CurveJet jet(const RealFormGroup& G, Complex z) const;
};

/// Closed-form abelian curve: f = diag(w(z)) with Laurent+log components.
struct AbelianCurve {
  std::vector<LaurentLog> components;
  CurveJet jet(Complex z) const;
};

HoloCurve make_matrix_curve(GroupPtr G, ChartDomain dom, MatrixCurve c);
HoloCurve make_abelian_curve(GroupPtr G, ChartDomain dom, AbelianCurve c);
HoloCurve make_numeric_curve(GroupPtr G, ChartDomain dom,
                             std::function<Mat(Complex)> value, double h_fd = 1e-5);
/// Pointwise product f1·f2 (sum for abelian groups) with exact product-rule jets.
HoloCurve compose_curves(const HoloCurve& f1, const HoloCurve& f2);
/// f · h0 for a constant group element h0.
HoloCurve right_translated(const HoloCurve& f, const Mat& h0);
/// Re(f) entrywise; the canonical smooth lift of π∘f for abelian groups.
HoloCurve real_part_lift(const HoloCurve& f);
/// Chart substitution z ↦ a·z (precomposition).
HoloCurve reparametrized(const HoloCurve& f, Complex a);
/// Orientation flip z ↦ z̄ (jets transform as dfx ↦ dfx, dfy ↦ −dfy).
HoloCurve conjugate_parameter(const HoloCurve& f);

// --- pointwise analysis ------------------------------------------------------

/// Splits f⁻¹df into the θ/α frames; throws SingularGroupElement.
FrameValues pullback_frames(const RealFormGroup& G, const CurveJet& jet);

/// ‖α_y + θ_x‖ + ‖θ_y − α_x‖; zero iff the jet satisfies dfy = i·dfx.
double holomorphy_residual(const RealFormGroup& G, const CurveJet& jet);

/// |g^C(Q,Q)| with Q = f⁻¹(dfx − i·dfy)/2.
double isotropy_residual(const RealFormGroup& G, const CurveJet& jet);

/// g(α_x,α_x) + g(α_y,α_y); the jet is a space-like immersion point iff > 0.
double spacelike_margin(const RealFormGroup& G, const CurveJet& jet);

/// ‖dθ_f(∂x,∂y)‖ by central differences; OutOfDomain if margin < 2h.
double dtheta_residual(const HoloCurve& curve, Complex z, double h);

/// Field of frame values of a curve, and its gauge transform by a smooth
/// gauge h: chart → H (frames of f·h).
using FrameField = std::function<FrameValues(Complex)>;
FrameField frame_field(const HoloCurve& curve);
FrameField gauge_transform(GroupPtr G, const FrameField& F, const HoloCurve& gauge);

} // namespace nullcurve
