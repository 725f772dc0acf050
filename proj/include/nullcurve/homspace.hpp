#pragma once

#include "nullcurve/realform.hpp"

#include <vector>

namespace nullcurve {

enum class ModelKind { EuclideanRn, TorusRn, HermPos, RealStructures, CosetGeneric };

/// A point of M = G/H in the model's concrete representation:
///   EuclideanRn / TorusRn — real n-vector,
///   HermPos              — positive Hermitian matrix p = SS†,
///   RealStructures       — matrix R (anti-linear involution v ↦ R·v̄),
///   CosetGeneric         — a stored lift γ.
struct ModelPoint {
  ModelKind kind;
  RVec vec;
  Mat mat;
};

/// Tangent vector at a model point:
///   EuclideanRn / TorusRn — real n-vector,
///   HermPos              — χ = p⁻¹u (Hermitian with respect to p),
///   RealStructures       — matrix X of the anti-linear map (anti-commutes with R),
///   CosetGeneric         — frame representative b ∈ h at the stored lift.
struct TangentAtPoint {
  ModelPoint point;
  RVec vec;
  Mat mat;
};

/// Concrete realization of M = G/H: projection, lifting, the invariant
/// metric, the Lie bracket on T_M, and curvature.
class HomogeneousModel {
public:
  HomogeneousModel(ModelKind kind, GroupPtr group);

  ModelKind kind() const { return kind_; }
  const RealFormGroup& group() const { return *group_; }
  GroupPtr group_ptr() const { return group_; }

  ModelPoint project(const Mat& S) const;
  ModelPoint base_point() const;
  double point_residual(const ModelPoint& p) const; // model invariants
  double point_distance(const ModelPoint& a, const ModelPoint& b) const;
  double tangent_residual(const TangentAtPoint& t) const; // rep constraints
  double tangent_distance(const TangentAtPoint& a, const TangentAtPoint& b) const;
  double tangent_norm(const TangentAtPoint& t) const;
  TangentAtPoint tangent_scale(const TangentAtPoint& t, double s) const;
  TangentAtPoint tangent_add(const TangentAtPoint& a, const TangentAtPoint& b) const;

  /// Canonical lift of a point (positive Hermitian root, principal root,
  /// identity embedding). Throws NoLiftBranch when the branch fails.
  Mat canonical_lift(const ModelPoint& p) const;

  /// Pushforward of π along t ↦ S·exp(tQ); returns a tangent at project(S).
  TangentAtPoint pushforward(const Mat& S, const Mat& Q) const;

  /// Frame representative b = α(γ⁻¹w) of a tangent relative to a lift γ of
  /// its base point, and its inverse (pushforward of the horizontal lift).
  Mat frame_of_tangent(const Mat& gamma, const TangentAtPoint& t) const;
  TangentAtPoint tangent_from_frame(const ModelPoint& p, const Mat& gamma, const Mat& b) const;

  /// (γ, w) with π(γ) = p and π_*(w) = t, horizontal w.
  std::pair<Mat, Mat> lift_tangent(const ModelPoint& p, const TangentAtPoint& t) const;

  double metric(const TangentAtPoint& u, const TangentAtPoint& v) const;
  TangentAtPoint bracket(const TangentAtPoint& u, const TangentAtPoint& v) const;
  /// Closed forms (i/2)[χ,χ′] (HermPos) and −(i/2)[χ,χ̄′−…]R (RealStructures);
  /// throws WrongDimension for other kinds.
  TangentAtPoint bracket_closed_form(const TangentAtPoint& u, const TangentAtPoint& v) const;
  TangentAtPoint curvature(const TangentAtPoint& u, const TangentAtPoint& v,
                           const TangentAtPoint& w) const;
  double sectional_curvature(const TangentAtPoint& u, const TangentAtPoint& v) const;

  /// Left G-action on points and tangents (used by invariance checks).
  ModelPoint left_translate(const Mat& g, const ModelPoint& p) const;
  TangentAtPoint left_translate(const Mat& g, const TangentAtPoint& t) const;

private:
  ModelKind kind_;
  GroupPtr group_;
};

/// Chart centered at p0: c ↦ project(γ0 · exp(i Σ c_j E_j)) with a
/// g-orthogonal basis {E_j} of h; inverse via the model's principal branch.
class NormalChart {
public:
  NormalChart(const HomogeneousModel* model, Mat gamma0, std::vector<Mat> basis);

  int dim() const { return static_cast<int>(basis_.size()); }
  const HomogeneousModel& model() const { return *model_; }
  const std::vector<Mat>& basis() const { return basis_; }
  const Mat& gamma0() const { return gamma0_; }

  ModelPoint to_point(const RVec& c) const;
  RVec from_point(const ModelPoint& p) const; // ChartBranchFailure

private:
  const HomogeneousModel* model_;
  Mat gamma0_;
  std::vector<Mat> basis_;
  RMat coeff_solver_; // pseudo-inverse mapping flattened i·h values to coords
};

NormalChart normal_chart(const HomogeneousModel& model, const ModelPoint& p0);

} // namespace nullcurve
