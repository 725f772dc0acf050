#include "nullcurve/homspace.hpp"

#include "nullcurve/errors.hpp"
#include "nullcurve/matfun.hpp"

#include <cmath>

namespace nullcurve {

namespace {

RVec flatten_real(const Mat& m) {
  RVec out(2 * m.size());
  out.head(m.size()) = Eigen::Map<const CVec>(m.data(), m.size()).real();
  out.tail(m.size()) = Eigen::Map<const CVec>(m.data(), m.size()).imag();
  return out;
}

} // namespace

HomogeneousModel::HomogeneousModel(ModelKind kind, GroupPtr group)
    : kind_(kind), group_(std::move(group)) {
  switch (kind_) {
    case ModelKind::EuclideanRn:
      if (!group_->abelian()) throw WrongDimension("EuclideanRn model needs an abelian group");
      break;
    case ModelKind::TorusRn:
      if (!group_->abelian() || group_->lattice().empty())
        throw WrongDimension("TorusRn model needs an abelian group with a lattice");
      break;
    case ModelKind::HermPos:
      if (group_->sigma_kind() != SigmaKind::NegAdjoint)
        throw WrongDimension("HermPos model needs σ(X) = −X†");
      break;
    case ModelKind::RealStructures:
      if (group_->sigma_kind() != SigmaKind::EntryConj)
        throw WrongDimension("RealStructures model needs σ(X) = X̄");
      break;
    case ModelKind::CosetGeneric:
      break;
  }
}

ModelPoint HomogeneousModel::project(const Mat& S) const {
  ModelPoint p;
  p.kind = kind_;
  switch (kind_) {
    case ModelKind::EuclideanRn:
      p.vec = S.diagonal().real();
      break;
    case ModelKind::TorusRn:
      p.vec = group_->lattice_reduce(S.diagonal().real());
      break;
    case ModelKind::HermPos:
      p.mat = S * S.adjoint();
      break;
    case ModelKind::RealStructures:
      p.mat = S * safe_inverse(S.conjugate());
      break;
    case ModelKind::CosetGeneric:
      p.mat = S;
      break;
  }
  return p;
}

ModelPoint HomogeneousModel::base_point() const { return project(group_->identity()); }

double HomogeneousModel::point_residual(const ModelPoint& p) const {
  switch (kind_) {
    case ModelKind::EuclideanRn:
    case ModelKind::TorusRn:
      return 0.0;
    case ModelKind::HermPos: {
      double r = hermitian_residual(p.mat);
      Eigen::SelfAdjointEigenSolver<Mat> es(p.mat);
      if (es.eigenvalues().minCoeff() <= 0.0) r += 1.0;
      return r;
    }
    case ModelKind::RealStructures:
      return (p.mat * p.mat.conjugate() - Mat::Identity(p.mat.rows(), p.mat.cols())).norm();
    case ModelKind::CosetGeneric:
      return group_->membership_residual(p.mat);
  }
  return 0.0;
}

double HomogeneousModel::point_distance(const ModelPoint& a, const ModelPoint& b) const {
  switch (kind_) {
    case ModelKind::EuclideanRn:
      return (a.vec - b.vec).norm();
    case ModelKind::TorusRn:
      return group_->lattice_reduce(a.vec - b.vec).norm();
    case ModelKind::HermPos:
    case ModelKind::RealStructures:
      return (a.mat - b.mat).norm();
    case ModelKind::CosetGeneric: {
      auto tag = [this](const Mat& s) {
        return group_->compose(s, group_->inverse(group_->sigma_group(s)));
      };
      return (tag(a.mat) - tag(b.mat)).norm();
    }
  }
  return 0.0;
}

double HomogeneousModel::tangent_residual(const TangentAtPoint& t) const {
  switch (kind_) {
    case ModelKind::EuclideanRn:
    case ModelKind::TorusRn:
      return 0.0;
    case ModelKind::HermPos: {
      // χ Hermitian w.r.t. p: (pχ)† = pχ
      Mat m = t.point.mat * t.mat;
      return hermitian_residual(m);
    }
    case ModelKind::RealStructures: {
      // anti-commutation X·R̄ = −R·X̄
      return (t.mat * t.point.mat.conjugate() + t.point.mat * t.mat.conjugate()).norm();
    }
    case ModelKind::CosetGeneric:
      return group_->realform_residual(t.mat);
  }
  return 0.0;
}

double HomogeneousModel::tangent_distance(const TangentAtPoint& a, const TangentAtPoint& b) const {
  if (kind_ == ModelKind::EuclideanRn || kind_ == ModelKind::TorusRn)
    return (a.vec - b.vec).norm();
  return (a.mat - b.mat).norm();
}

double HomogeneousModel::tangent_norm(const TangentAtPoint& t) const {
  if (kind_ == ModelKind::EuclideanRn || kind_ == ModelKind::TorusRn) return t.vec.norm();
  return t.mat.norm();
}

TangentAtPoint HomogeneousModel::tangent_scale(const TangentAtPoint& t, double s) const {
  TangentAtPoint out = t;
  if (out.vec.size() > 0) out.vec *= s;
  if (out.mat.size() > 0) out.mat *= s;
  return out;
}

TangentAtPoint HomogeneousModel::tangent_add(const TangentAtPoint& a, const TangentAtPoint& b) const {
  TangentAtPoint out = a;
  if (out.vec.size() > 0) out.vec += b.vec;
  if (out.mat.size() > 0) out.mat += b.mat;
  return out;
}

Mat HomogeneousModel::canonical_lift(const ModelPoint& p) const {
  switch (kind_) {
    case ModelKind::EuclideanRn:
    case ModelKind::TorusRn: {
      Mat m = Mat::Zero(group_->n(), group_->n());
      m.diagonal() = p.vec.cast<Complex>();
      return m;
    }
    case ModelKind::HermPos:
      try {
        return sqrtm_spd(p.mat);
      } catch (const LogBranchFailure& e) {
        throw NoLiftBranch(e.what());
      }
    case ModelKind::RealStructures:
      try {
        return sqrtm_principal(p.mat);
      } catch (const LogBranchFailure& e) {
        throw NoLiftBranch(e.what());
      }
    case ModelKind::CosetGeneric:
      return p.mat;
  }
  return Mat();
}

TangentAtPoint HomogeneousModel::pushforward(const Mat& S, const Mat& Q) const {
  TangentAtPoint t;
  t.point = project(S);
  switch (kind_) {
    case ModelKind::EuclideanRn:
    case ModelKind::TorusRn:
      t.vec = Q.diagonal().real();
      break;
    case ModelKind::HermPos: {
      Mat sinva = safe_inverse(Mat(S.adjoint()));
      t.mat = sinva * (Q + Q.adjoint()) * S.adjoint();
      break;
    }
    case ModelKind::RealStructures:
      t.mat = S * (Q - Q.conjugate()) * safe_inverse(S.conjugate());
      break;
    case ModelKind::CosetGeneric:
      t.mat = group_->split(Q).second; // α-part at the stored lift S
      break;
  }
  return t;
}

Mat HomogeneousModel::frame_of_tangent(const Mat& gamma, const TangentAtPoint& t) const {
  switch (kind_) {
    case ModelKind::EuclideanRn:
    case ModelKind::TorusRn: {
      Mat b = Mat::Zero(group_->n(), group_->n());
      b.diagonal() = kI * t.vec.cast<Complex>();
      return b;
    }
    case ModelKind::HermPos: {
      Mat ga = gamma.adjoint();
      return 0.5 * kI * ga * t.mat * safe_inverse(ga);
    }
    case ModelKind::RealStructures:
      return 0.5 * kI * safe_inverse(gamma) * t.mat * gamma.conjugate();
    case ModelKind::CosetGeneric:
      return t.mat;
  }
  return Mat();
}

TangentAtPoint HomogeneousModel::tangent_from_frame(const ModelPoint& p, const Mat& gamma,
                                                    const Mat& b) const {
  TangentAtPoint t;
  t.point = p;
  switch (kind_) {
    case ModelKind::EuclideanRn:
    case ModelKind::TorusRn:
      t.vec = (-kI * b).eval().diagonal().real();
      break;
    case ModelKind::HermPos: {
      Mat ga = gamma.adjoint();
      t.mat = -2.0 * kI * safe_inverse(ga) * b * ga;
      break;
    }
    case ModelKind::RealStructures:
      t.mat = -2.0 * kI * gamma * b * safe_inverse(Mat(gamma.conjugate()));
      break;
    case ModelKind::CosetGeneric:
      t.mat = b;
      break;
  }
  return t;
}

std::pair<Mat, Mat> HomogeneousModel::lift_tangent(const ModelPoint& p,
                                                   const TangentAtPoint& t) const {
  Mat gamma = canonical_lift(p);
  Mat b = frame_of_tangent(gamma, t);
  Mat q = -kI * b; // horizontal: θ-part zero
  Mat w = group_->abelian() ? q : Mat(gamma * q);
  return {gamma, w};
}

double HomogeneousModel::metric(const TangentAtPoint& u, const TangentAtPoint& v) const {
  Mat gamma = canonical_lift(u.point);
  return group_->form(frame_of_tangent(gamma, u), frame_of_tangent(gamma, v));
}

TangentAtPoint HomogeneousModel::bracket(const TangentAtPoint& u, const TangentAtPoint& v) const {
  Mat gamma = canonical_lift(u.point);
  Mat bu = frame_of_tangent(gamma, u), bv = frame_of_tangent(gamma, v);
  Mat br = group_->abelian() ? Mat(Mat::Zero(bu.rows(), bu.cols())) : Mat(bu * bv - bv * bu);
  return tangent_from_frame(u.point, gamma, br);
}

TangentAtPoint HomogeneousModel::bracket_closed_form(const TangentAtPoint& u,
                                                     const TangentAtPoint& v) const {
  TangentAtPoint t;
  t.point = u.point;
  if (kind_ == ModelKind::HermPos) {
    t.mat = 0.5 * kI * (u.mat * v.mat - v.mat * u.mat);
    return t;
  }
  if (kind_ == ModelKind::RealStructures) {
    Mat lin = u.mat * v.mat.conjugate() - v.mat * u.mat.conjugate();
    t.mat = -0.5 * kI * lin * u.point.mat;
    return t;
  }
  throw WrongDimension("no closed-form bracket for this model kind");
}

TangentAtPoint HomogeneousModel::curvature(const TangentAtPoint& u, const TangentAtPoint& v,
                                           const TangentAtPoint& w) const {
  return bracket(bracket(u, v), w);
}

double HomogeneousModel::sectional_curvature(const TangentAtPoint& u,
                                             const TangentAtPoint& v) const {
  const double nu = tangent_norm(u), nv = tangent_norm(v);
  if (nu < 1e-14 || nv < 1e-14) throw DegeneratePlane("zero tangent");
  TangentAtPoint un = tangent_scale(u, 1.0 / nu), vn = tangent_scale(v, 1.0 / nv);
  const double guu = metric(un, un), gvv = metric(vn, vn), guv = metric(un, vn);
  const double denom = guu * gvv - guv * guv;
  if (std::abs(denom) < 1e-10) throw DegeneratePlane("plane is metrically degenerate");
  TangentAtPoint br = bracket(un, vn);
  return -metric(br, br) / denom;
}

ModelPoint HomogeneousModel::left_translate(const Mat& g, const ModelPoint& p) const {
  ModelPoint out;
  out.kind = kind_;
  switch (kind_) {
    case ModelKind::EuclideanRn:
      out.vec = p.vec + g.diagonal().real();
      break;
    case ModelKind::TorusRn:
      out.vec = group_->lattice_reduce(RVec(p.vec + g.diagonal().real()));
      break;
    case ModelKind::HermPos:
      out.mat = g * p.mat * g.adjoint();
      break;
    case ModelKind::RealStructures:
      out.mat = g * p.mat * safe_inverse(Mat(g.conjugate()));
      break;
    case ModelKind::CosetGeneric:
      out.mat = group_->compose(g, p.mat);
      break;
  }
  return out;
}

TangentAtPoint HomogeneousModel::left_translate(const Mat& g, const TangentAtPoint& t) const {
  TangentAtPoint out;
  out.point = left_translate(g, t.point);
  switch (kind_) {
    case ModelKind::EuclideanRn:
    case ModelKind::TorusRn:
      out.vec = t.vec;
      break;
    case ModelKind::HermPos:
      out.mat = safe_inverse(Mat(g.adjoint())) * t.mat * g.adjoint();
      break;
    case ModelKind::RealStructures:
      out.mat = g * t.mat * safe_inverse(Mat(g.conjugate()));
      break;
    case ModelKind::CosetGeneric:
      out.mat = t.mat;
      break;
  }
  return out;
}

// --- NormalChart ----------------------------------------------------------------

NormalChart::NormalChart(const HomogeneousModel* model, Mat gamma0, std::vector<Mat> basis)
    : model_(model), gamma0_(std::move(gamma0)), basis_(std::move(basis)) {
  // Pseudo-inverse recovering coords from a flattened element of i·h.
  const int n = model_->group().n();
  RMat cols(2 * n * n, dim());
  for (int j = 0; j < dim(); ++j) cols.col(j) = flatten_real(Mat(kI * basis_[j]));
  coeff_solver_ = (cols.transpose() * cols).ldlt().solve(cols.transpose());
}

ModelPoint NormalChart::to_point(const RVec& c) const {
  const RealFormGroup& G = model_->group();
  Mat X = Mat::Zero(G.n(), G.n());
  for (int j = 0; j < dim(); ++j) X += Complex(0.0, c[j]) * basis_[j];
  return model_->project(G.compose(gamma0_, G.group_exp(X)));
}

RVec NormalChart::from_point(const ModelPoint& p) const {
  const RealFormGroup& G = model_->group();
  Mat X; // = i·Σ c_j E_j, solved per model branch
  switch (model_->kind()) {
    case ModelKind::EuclideanRn:
    case ModelKind::TorusRn: {
      RVec delta = p.vec - model_->project(gamma0_).vec;
      if (model_->kind() == ModelKind::TorusRn) delta = G.lattice_reduce(delta);
      X = Mat::Zero(G.n(), G.n());
      X.diagonal() = delta.cast<Complex>(); // i·(iE) directions are real
      break;
    }
    case ModelKind::HermPos: {
      Mat g0i = safe_inverse(gamma0_);
      Mat w = g0i * p.mat * g0i.adjoint();
      try {
        X = 0.5 * logm_spd(w);
      } catch (const LogBranchFailure& e) {
        throw ChartBranchFailure(e.what());
      }
      break;
    }
    case ModelKind::RealStructures: {
      Mat w = safe_inverse(gamma0_) * p.mat * gamma0_.conjugate();
      try {
        X = 0.5 * logm_principal(w);
      } catch (const LogBranchFailure& e) {
        throw ChartBranchFailure(e.what());
      }
      break;
    }
    case ModelKind::CosetGeneric: {
      Mat m = G.compose(G.inverse(gamma0_), p.mat);
      Mat w = G.compose(m, G.inverse(G.sigma_group(m)));
      try {
        X = 0.5 * G.group_log(w);
      } catch (const LogBranchFailure& e) {
        throw ChartBranchFailure(e.what());
      }
      break;
    }
  }
  RVec c = coeff_solver_ * flatten_real(X);
  // Reject if X was not in i·h (outside the branch/injectivity domain).
  Mat back = Mat::Zero(G.n(), G.n());
  for (int j = 0; j < dim(); ++j) back += Complex(0.0, c[j]) * basis_[j];
  if ((back - X).norm() > 1e-8 * (1.0 + X.norm()))
    throw ChartBranchFailure("log of point is not in i·h");
  return c;
}

NormalChart normal_chart(const HomogeneousModel& model, const ModelPoint& p0) {
  const RealFormGroup& G = model.group();
  // g-orthogonalize the basis via the spectral decomposition of the Gram matrix.
  Eigen::SelfAdjointEigenSolver<RMat> es(G.form_gram());
  const int k = G.dim_h();
  std::vector<Mat> basis;
  basis.reserve(k);
  for (int j = 0; j < k; ++j) {
    Mat e = Mat::Zero(G.n(), G.n());
    for (int i = 0; i < k; ++i) e += Complex(es.eigenvectors()(i, j), 0.0) * G.h_basis()[i];
    basis.push_back(e);
  }
  return NormalChart(&model, model.canonical_lift(p0), std::move(basis));
}

} // namespace nullcurve
