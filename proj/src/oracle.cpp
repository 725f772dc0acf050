#include "nullcurve/oracle.hpp"

#include "nullcurve/errors.hpp"

#include <cmath>

namespace nullcurve {

ChartMetricField::ChartMetricField(const HomogeneousModel* model, NormalChart chart,
                                   double chart_step)
    : model_(model), chart_(std::move(chart)), h_(chart_step) {}

std::vector<TangentAtPoint> ChartMetricField::coordinate_frame(const RVec& c) const {
  const int k = dim();
  ModelPoint p = chart_.to_point(c);
  std::vector<TangentAtPoint> frame;
  frame.reserve(k);
  for (int j = 0; j < k; ++j) {
    RVec cp = c, cm = c;
    cp[j] += h_;
    cm[j] -= h_;
    ModelPoint pp = chart_.to_point(cp), pm = chart_.to_point(cm);
    TangentAtPoint t;
    t.point = p;
    switch (model_->kind()) {
      case ModelKind::EuclideanRn:
        t.vec = (pp.vec - pm.vec) / (2 * h_);
        break;
      case ModelKind::TorusRn:
        t.vec = model_->group().lattice_reduce(pp.vec - pm.vec) / (2 * h_);
        break;
      case ModelKind::HermPos: {
        Mat u = (pp.mat - pm.mat) / (2 * h_);
        t.mat = p.mat.inverse() * u; // χ = p⁻¹·ṗ
        break;
      }
      case ModelKind::RealStructures:
        t.mat = (pp.mat - pm.mat) / (2 * h_);
        break;
      case ModelKind::CosetGeneric:
        throw SingularMetric("chart metric field is not defined for CosetGeneric models");
    }
    frame.push_back(std::move(t));
  }
  return frame;
}

RMat ChartMetricField::gram_uncached(const RVec& c) const {
  const int k = dim();
  std::vector<TangentAtPoint> frame = coordinate_frame(c);
  RMat g(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j <= i; ++j) g(i, j) = g(j, i) = model_->metric(frame[i], frame[j]);
  return g;
}

std::vector<long long> ChartMetricField::key(const RVec& c) const {
  std::vector<long long> k(c.size());
  for (Eigen::Index i = 0; i < c.size(); ++i)
    k[static_cast<std::size_t>(i)] = std::llround(c[i] * 1e12);
  return k;
}

RMat ChartMetricField::gram(const RVec& c) const {
  auto it = cache_.find(key(c));
  if (it != cache_.end()) return it->second;
  return gram_uncached(c);
}

void ChartMetricField::prefill(const std::vector<RVec>& points) {
  for (const RVec& c : points) {
    auto k = key(c);
    if (!cache_.count(k)) cache_.emplace(std::move(k), gram_uncached(c));
  }
}

RVec ChartMetricField::components(const RVec& c, const TangentAtPoint& t) const {
  const int k = dim();
  std::vector<TangentAtPoint> frame = coordinate_frame(c);
  auto flat = [&](const TangentAtPoint& v) -> RVec {
    if (model_->kind() == ModelKind::EuclideanRn || model_->kind() == ModelKind::TorusRn)
      return v.vec;
    RVec out(2 * v.mat.size());
    out.head(v.mat.size()) = Eigen::Map<const CVec>(v.mat.data(), v.mat.size()).real();
    out.tail(v.mat.size()) = Eigen::Map<const CVec>(v.mat.data(), v.mat.size()).imag();
    return out;
  };
  RMat A(flat(frame[0]).size(), k);
  for (int j = 0; j < k; ++j) A.col(j) = flat(frame[j]);
  return A.colPivHouseholderQr().solve(flat(t));
}

std::vector<RMat> christoffels(const ChartMetricField& field, const RVec& c) {
  const int k = field.dim();
  const double h = field.step();
  RMat g0 = field.gram(c);
  Eigen::FullPivLU<RMat> lu(g0);
  if (!lu.isInvertible()) throw SingularMetric("metric Gram matrix is singular");
  RMat ginv = lu.inverse();

  std::vector<RMat> dg(k); // dg[l](i,j) = ∂_l g_ij
  for (int l = 0; l < k; ++l) {
    RVec cp = c, cm = c;
    cp[l] += h;
    cm[l] -= h;
    dg[l] = (field.gram(cp) - field.gram(cm)) / (2 * h);
  }

  std::vector<RMat> gamma(k, RMat::Zero(k, k));
  for (int kk = 0; kk < k; ++kk)
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        double s = 0.0;
        for (int l = 0; l < k; ++l) s += ginv(kk, l) * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
        gamma[kk](i, j) = 0.5 * s;
      }
  return gamma;
}

TensionResult tension_mean_curvature(const std::vector<RVec>& phi_chart, int nx, int ny,
                                     const ChartMetricField& field, double spacing,
                                     double conformal_tol) {
  if (nx < 3 || ny < 3) throw OutOfDomain("tension grid needs at least 3×3 nodes");
  const int k = field.dim();
  auto at = [&](int i, int j) -> const RVec& {
    return phi_chart[static_cast<std::size_t>(i) * ny + j];
  };

  TensionResult out;
  out.nx = nx;
  out.ny = ny;
  out.H.resize(static_cast<std::size_t>(nx - 2) * (ny - 2));
  out.c.resize(out.H.size());
  out.lambda2.resize(out.H.size());
  out.conformal_residual.resize(out.H.size());

  for (int i = 1; i + 1 < nx; ++i)
    for (int j = 1; j + 1 < ny; ++j) {
      const RVec& c0 = at(i, j);
      RVec cx = (at(i + 1, j) - at(i - 1, j)) / (2 * spacing);
      RVec cy = (at(i, j + 1) - at(i, j - 1)) / (2 * spacing);
      RVec lap = (at(i + 1, j) + at(i - 1, j) + at(i, j + 1) + at(i, j - 1) - 4.0 * c0) /
                 (spacing * spacing);

      RMat g = field.gram(c0);
      const double gx = cx.dot(g * cx), gy = cy.dot(g * cy), gxy = cx.dot(g * cy);
      const double scale = std::max({std::abs(gx), std::abs(gy), 1e-14});
      const double conf = std::abs(gx - gy) + std::abs(gxy);
      if (conf > conformal_tol * scale)
        throw NotConformal("grid map is not conformal at an interior node");
      const double lambda2 = 0.5 * (gx + gy);
      if (lambda2 <= 0.0) throw NotConformal("grid map is degenerate at an interior node");

      std::vector<RMat> gamma = christoffels(field, c0);
      RVec tau(k);
      for (int kk = 0; kk < k; ++kk) {
        double corr = cx.dot(gamma[kk] * cx) + cy.dot(gamma[kk] * cy);
        tau[kk] = lap[kk] + corr;
      }
      const std::size_t idx = out.idx(i, j);
      out.H[idx] = tau / (2.0 * lambda2);
      out.c[idx] = c0;
      out.lambda2[idx] = lambda2;
      out.conformal_residual[idx] = conf;
    }
  return out;
}

} // namespace nullcurve
