#pragma once

#include "nullcurve/curve.hpp"
#include "nullcurve/homspace.hpp"
#include "nullcurve/weierstrass.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace nullcurve {

enum class Provenance { Trivial, Derived, Paper };
const char* provenance_name(Provenance p);

/// One frozen expected quantity with its tolerance and where it came from.
struct ExpectedQuantity {
  std::variant<double, Mat, CVec> value;
  double tol;
  Provenance prov;
};

/// Named closed-form example shared by the whole test surface.
/// Scalar expectations ("lambda2", "gHH", "K", "H_scalar", "H_frame") refer to
/// the domain center unless the quantity is constant along the curve.
struct CorpusEntry {
  std::string name;
  std::string description;
  GroupPtr group;
  ModelKind model_kind;
  std::optional<HoloCurve> curve;
  bool spacelike = false; // screened at load time on a coarse grid
  std::map<std::string, ExpectedQuantity> expected;

  // period data (abelian entries)
  std::function<CVec(Complex)> beta;
  std::vector<PathSpec> period_loops;
  std::vector<RVec> lattice;

  HomogeneousModel model() const { return HomogeneousModel(model_kind, group); }
};

std::vector<std::string> list_entries();
const CorpusEntry& get_entry(const std::string& name); // throws UnknownEntry

} // namespace nullcurve
