#pragma once

#include "nullcurve/homspace.hpp"

#include <map>
#include <vector>

namespace nullcurve {

/// Metric components of g_M in a normal chart, sampled through metric_eval on
/// chart coordinate frames. Deliberately ignorant of the split/bracket
/// machinery: everything downstream is plain coordinate Riemannian geometry.
class ChartMetricField {
public:
  ChartMetricField(const HomogeneousModel* model, NormalChart chart, double chart_step);

  int dim() const { return chart_.dim(); }
  const NormalChart& chart() const { return chart_; }
  double step() const { return h_; }

  /// Coordinate frame tangents T_j(c) by central differences of the chart map.
  std::vector<TangentAtPoint> coordinate_frame(const RVec& c) const;

  /// Gram matrix g_ij(c); consults the cache first.
  RMat gram(const RVec& c) const;

  /// Sequential fill phase; afterwards gram() is safe to call concurrently.
  void prefill(const std::vector<RVec>& points);

  /// Components of a model tangent in the chart coordinate frame at c.
  RVec components(const RVec& c, const TangentAtPoint& t) const;

private:
  RMat gram_uncached(const RVec& c) const;
  std::vector<long long> key(const RVec& c) const;

  const HomogeneousModel* model_;
  NormalChart chart_;
  double h_;
  std::map<std::vector<long long>, RMat> cache_;
};

/// Γ^k_{ij} = ½ g^{kl}(∂_i g_{jl} + ∂_j g_{il} − ∂_l g_{ij}), central
/// differences at the field's chart step. Γ[k](i,j). Throws SingularMetric.
std::vector<RMat> christoffels(const ChartMetricField& field, const RVec& c);

/// Tension-field mean curvature of a conformal map given as a grid of chart
/// coordinate vectors: H^k = (Δc^k + Γ^k_{ij}(∂x c^i ∂x c^j + ∂y c^i ∂y c^j)) / (2λ²).
/// Interior points only (5-point stencil). Throws NotConformal / SingularMetric.
struct TensionResult {
  int nx = 0, ny = 0;
  std::vector<RVec> H;        // interior nodes, row-major (nx-2)×(ny-2)
  std::vector<RVec> c;        // chart coordinates at those nodes
  std::vector<double> lambda2;
  std::vector<double> conformal_residual;
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * (ny - 2) + (j - 1);
  }
};

TensionResult tension_mean_curvature(const std::vector<RVec>& phi_chart, int nx, int ny,
                                     const ChartMetricField& field, double spacing,
                                     double conformal_tol = 1e-4);

} // namespace nullcurve
