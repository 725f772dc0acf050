#pragma once

#include "nullcurve/corpus.hpp"

#include <array>
#include <string>
#include <vector>

namespace nullcurve {

/// Surface mesh in embedding coordinates with per-vertex scalars.
/// Embeddings: Rⁿ directly (n ≤ 3), H³ via Herm₊ → hyperboloid → Poincaré
/// ball, dS₃ via the Minkowski hyperboloid with the x0 coordinate dropped.
struct MeshData {
  std::vector<Eigen::Vector3d> vertices;
  std::vector<std::array<int, 4>> quads;
  std::vector<double> lambda2;
  std::vector<double> gHH;
  std::string embedding;

  void validate() const; // face indices in range, coordinates finite
};

MeshData build_mesh(const CorpusEntry& entry, int nx, int ny);

/// Plain-text polygon format (OBJ-compatible v/f lines, per-vertex scalars in
/// trailing comment lines).
std::string mesh_to_obj(const MeshData& mesh);

} // namespace nullcurve
