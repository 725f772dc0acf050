#include "nullcurve/mesh.hpp"

#include "nullcurve/errors.hpp"
#include "nullcurve/meancurv.hpp"

#include <cmath>
#include <sstream>

namespace nullcurve {

namespace {

// Pauli coordinates of a 2×2 Hermitian matrix: X = x0·I + Σ x_k σ_k.
Eigen::Vector4d pauli_coords(const Mat& X) {
  Eigen::Vector4d x;
  x[0] = 0.5 * (X(0, 0) + X(1, 1)).real();
  x[1] = 0.5 * (X(0, 1) + X(1, 0)).real();
  x[2] = 0.5 * (kI * (X(0, 1) - X(1, 0))).real();
  x[3] = 0.5 * (X(0, 0) - X(1, 1)).real();
  return x;
}

Eigen::Vector3d embed_point(const CorpusEntry& entry, const HomogeneousModel& model,
                            const ModelPoint& p, const Mat& lift, std::string& embedding) {
  switch (entry.model_kind) {
    case ModelKind::EuclideanRn:
    case ModelKind::TorusRn: {
      embedding = "euclidean";
      Eigen::Vector3d v = Eigen::Vector3d::Zero();
      for (int i = 0; i < std::min<int>(3, static_cast<int>(p.vec.size())); ++i) v[i] = p.vec[i];
      return v;
    }
    case ModelKind::HermPos: {
      if (entry.group->n() != 2)
        throw ConfigError("mesh export supports HermPos embeddings only for n = 2 (H3)");
      // hyperboloid coordinates of p (det ≈ 1), then the Poincaré ball
      embedding = "poincare-ball";
      Eigen::Vector4d x = pauli_coords(p.mat);
      return Eigen::Vector3d(x[1], x[2], x[3]) / (1.0 + x[0]);
    }
    case ModelKind::RealStructures: {
      if (entry.group->n() != 2)
        throw ConfigError("mesh export supports RealStructures embeddings only for n = 2 (dS3)");
      // X = S·(iJ)·S† is Hermitian with det −1 and depends only on the coset;
      // emit the space part of its Minkowski coordinates.
      embedding = "minkowski-slice";
      Mat iJ(2, 2);
      iJ << 0, kI, -kI, 0;
      Mat X = lift * iJ * lift.adjoint();
      Eigen::Vector4d x = pauli_coords(X);
      return Eigen::Vector3d(x[1], x[2], x[3]);
    }
    case ModelKind::CosetGeneric:
      throw ConfigError("mesh export is not defined for CosetGeneric models");
  }
  return Eigen::Vector3d::Zero();
}

} // namespace

void MeshData::validate() const {
  const int nv = static_cast<int>(vertices.size());
  for (const auto& v : vertices)
    if (!v.allFinite()) throw Error("mesh has non-finite vertex coordinates");
  for (const auto& q : quads)
    for (int idx : q)
      if (idx < 0 || idx >= nv) throw Error("mesh face indexes a missing vertex");
}

MeshData build_mesh(const CorpusEntry& entry, int nx, int ny) {
  if (!entry.curve) throw ConfigError("entry '" + entry.name + "' carries no curve to mesh");
  if (!entry.spacelike)
    throw ConfigError("entry '" + entry.name + "' is not space-like; nothing to mesh");
  HomogeneousModel model = entry.model();
  const ChartDomain& dom = entry.curve->domain();

  MeshData mesh;
  mesh.vertices.reserve(static_cast<std::size_t>(nx) * ny);

  // structured grid over the chart (annulus sectors get polar structure)
  std::vector<std::vector<int>> index(nx, std::vector<int>(ny, -1));
  const double pad = 1e-3;
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      Complex z;
      if (dom.kind == ChartDomain::Kind::AnnulusSector) {
        double r = dom.r0 + (dom.r1 - dom.r0) * (i + 0.5) / nx;
        double a = dom.a0 + (dom.a1 - dom.a0) * (j + 0.5) / ny;
        z = std::polar(r, a);
      } else {
        z = Complex(dom.x0 + pad + (dom.x1 - dom.x0 - 2 * pad) * i / (nx - 1.0),
                    dom.y0 + pad + (dom.y1 - dom.y0 - 2 * pad) * j / (ny - 1.0));
      }
      if (!dom.contains(z, 0.0)) continue;
      ImmersionSample s = project_immersion(*entry.curve, model, z);
      MeanCurvature mc = mean_curvature_bracket(model, s);
      Mat lift = model.canonical_lift(s.p);
      index[i][j] = static_cast<int>(mesh.vertices.size());
      mesh.vertices.push_back(embed_point(entry, model, s.p, lift, mesh.embedding));
      mesh.lambda2.push_back(s.lambda2);
      mesh.gHH.push_back(entry.group->form(mc.frame, mc.frame));
    }

  for (int i = 0; i + 1 < nx; ++i)
    for (int j = 0; j + 1 < ny; ++j) {
      int a = index[i][j], b = index[i + 1][j], c = index[i + 1][j + 1], d = index[i][j + 1];
      if (a >= 0 && b >= 0 && c >= 0 && d >= 0) mesh.quads.push_back({a, b, c, d});
    }

  mesh.validate();
  return mesh;
}

std::string mesh_to_obj(const MeshData& mesh) {
  std::ostringstream out;
  out.precision(12);
  out << "# surface mesh, embedding: " << mesh.embedding << "\n";
  out << "# vertices: " << mesh.vertices.size() << " faces: " << mesh.quads.size() << "\n";
  for (const auto& v : mesh.vertices) out << "v " << v[0] << " " << v[1] << " " << v[2] << "\n";
  for (const auto& q : mesh.quads)
    out << "f " << q[0] + 1 << " " << q[1] + 1 << " " << q[2] + 1 << " " << q[3] + 1 << "\n";
  out << "# per-vertex scalars: index lambda2 gHH\n";
  for (std::size_t i = 0; i < mesh.vertices.size(); ++i)
    out << "# vdata " << i << " " << mesh.lambda2[i] << " " << mesh.gHH[i] << "\n";
  return out.str();
}

} // namespace nullcurve
