#include "nullcurve/corpus.hpp"

#include "nullcurve/errors.hpp"

#include <cmath>

namespace nullcurve {

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Trivial: return "trivial";
    case Provenance::Derived: return "derived";
    case Provenance::Paper: return "paper";
  }
  return "?";
}

namespace {

void screen_spacelike(CorpusEntry& e) {
  if (!e.curve) {
    e.spacelike = false;
    return;
  }
  double worst = 1e300;
  for (Complex z : e.curve->domain().grid(6, 6, 1e-3))
    worst = std::min(worst, spacelike_margin(*e.group, e.curve->jet(z)));
  e.spacelike = worst > 1e-8;
}

CorpusEntry make_enneper() {
  CorpusEntry e;
  e.name = "enneper";
  e.description = "minimal immersion of the Enneper data into R3 (flat abelian target)";
  e.group = make_abelian(3);
  e.model_kind = ModelKind::EuclideanRn;

  AbelianCurve c;
  c.components.resize(3);
  c.components[0].add(1, 0.5).add(3, -1.0 / 6.0);
  c.components[1].add(1, Complex(0, 0.5)).add(3, Complex(0, 1.0 / 6.0));
  c.components[2].add(2, 0.5);
  e.curve = make_abelian_curve(e.group, ChartDomain::rectangle(-0.8, 0.8, -0.8, 0.8), c);

  e.expected["isotropy"] = {0.0, 1e-8, Provenance::Trivial};
  e.expected["holomorphy"] = {0.0, 1e-8, Provenance::Trivial};
  e.expected["H_norm"] = {0.0, 1e-6, Provenance::Derived};
  e.expected["K"] = {0.0, 1e-8, Provenance::Trivial};
  e.expected["lambda2"] = {0.25, 1e-10, Provenance::Derived};

  e.beta = [](Complex z) {
    CVec b(3);
    b << 0.5 * (1.0 - z * z), 0.5 * kI * (1.0 + z * z), z;
    return b;
  };
  return e;
}

CorpusEntry make_catenoid_annulus() {
  CorpusEntry e;
  e.name = "catenoid-annulus";
  e.description = "catenoid data on an annulus; nontrivial puncture period";
  e.group = make_abelian(3);
  e.model_kind = ModelKind::EuclideanRn;

  AbelianCurve c;
  c.components.resize(3);
  c.components[0].add(-1, -0.5).add(1, -0.5);
  c.components[1].add(-1, Complex(0, -0.5)).add(1, Complex(0, 0.5));
  c.components[2].add_log(1.0);
  e.curve = make_abelian_curve(e.group, ChartDomain::annulus_sector(0.5, 2.0, -2.8, 2.8), c);

  e.expected["isotropy"] = {0.0, 1e-8, Provenance::Trivial};
  e.expected["holomorphy"] = {0.0, 1e-8, Provenance::Trivial};
  e.expected["K"] = {0.0, 1e-8, Provenance::Trivial};
  CVec period(3);
  period << 0.0, 0.0, Complex(0.0, 2.0 * M_PI);
  e.expected["puncture_period"] = {period, 1e-5, Provenance::Derived};
  e.expected["real_periods"] = {0.0, 1e-8, Provenance::Paper}; // condition (C1)

  e.beta = [](Complex z) {
    CVec b(3);
    Complex iz2 = 1.0 / (z * z);
    b << 0.5 * (iz2 - 1.0), 0.5 * kI * (iz2 + 1.0), 1.0 / z;
    return b;
  };
  e.period_loops.push_back(PathSpec::circle(0.0, 1.0));
  return e;
}

CorpusEntry make_horosphere() {
  CorpusEntry e;
  e.name = "horosphere";
  e.description = "unipotent curve in SL(2,C) over H3 = SL(2,C)/SU(2), g = -2 tr";
  e.group = make_sl2c_su2(-2.0);
  e.model_kind = ModelKind::HermPos;

  MatrixCurve mc;
  Mat A(2, 2);
  A << 0, 1, 0, 0;
  mc.factors.push_back({A, Poly2::z()});
  e.curve = make_matrix_curve(e.group, ChartDomain::rectangle(-1, 1, -1, 1), mc);

  Mat H(2, 2);
  H << 0.5 * kI, 0, 0, -0.5 * kI;
  e.expected["isotropy"] = {0.0, 1e-8, Provenance::Trivial};
  e.expected["holomorphy"] = {0.0, 1e-8, Provenance::Trivial};
  e.expected["lambda2"] = {1.0, 1e-10, Provenance::Derived};
  e.expected["H_frame"] = {H, 1e-10, Provenance::Derived};
  e.expected["gHH"] = {1.0, 1e-10, Provenance::Derived};
  e.expected["K"] = {-1.0, 1e-10, Provenance::Derived};
  e.expected["H_scalar"] = {1.0, 1e-10, Provenance::Derived};
  return e;
}

CorpusEntry make_desitter_null() {
  CorpusEntry e;
  e.name = "desitter-null";
  e.description = "null direction in SL(2,C) over dS3 = SL(2,C)/SL(2,R), g = 2 tr";
  e.group = make_sl2c_sl2r(2.0);
  e.model_kind = ModelKind::RealStructures;

  MatrixCurve mc;
  Mat A(2, 2);
  A << 1.0, kI, kI, -1.0;
  mc.factors.push_back({A, Poly2::z()});
  // |z| < 1 uniform policy for split forms
  e.curve = make_matrix_curve(e.group, ChartDomain::rectangle(-0.65, 0.65, -0.65, 0.65), mc);

  Mat H(2, 2);
  H << 0, -0.5, 0.5, 0;
  e.expected["isotropy"] = {0.0, 1e-8, Provenance::Trivial};
  e.expected["holomorphy"] = {0.0, 1e-8, Provenance::Trivial};
  e.expected["lambda2"] = {4.0, 1e-10, Provenance::Derived};
  e.expected["H_frame"] = {H, 1e-10, Provenance::Derived};
  e.expected["gHH"] = {-1.0, 1e-10, Provenance::Derived};
  e.expected["K"] = {1.0, 1e-10, Provenance::Derived};
  e.expected["H_scalar"] = {1.0, 1e-10, Provenance::Derived};
  return e;
}

CorpusEntry make_hermpos3() {
  CorpusEntry e;
  e.name = "hermpos-3";
  e.description = "nilpotent-direction curve in GL(3,C) over Herm+(3), g = -tr";
  e.group = make_gl_un(3, -1.0);
  e.model_kind = ModelKind::HermPos;

  MatrixCurve mc;
  Mat A(3, 3);
  A << 0, 1, 1, 0, 0, 1, 0, 0, 0;
  mc.factors.push_back({A, Poly2::z()});
  e.curve = make_matrix_curve(e.group, ChartDomain::rectangle(-0.8, 0.8, -0.8, 0.8), mc);

  // frames are constant: λ² = tr(AA†)/2, H = (i/2)[A,A†]/λ².
  Mat comm(3, 3);
  comm << 2, 1, 0, 1, 0, -1, 0, -1, -2;
  Mat H = (kI / 3.0) * comm;
  e.expected["isotropy"] = {0.0, 1e-8, Provenance::Trivial};
  e.expected["holomorphy"] = {0.0, 1e-8, Provenance::Trivial};
  e.expected["lambda2"] = {1.5, 1e-10, Provenance::Derived};
  e.expected["H_frame"] = {H, 1e-10, Provenance::Derived};
  e.expected["gHH"] = {4.0 / 3.0, 1e-10, Provenance::Derived};
  e.expected["K"] = {-4.0 / 3.0, 1e-10, Provenance::Derived};
  return e;
}

CorpusEntry make_realstruct2() {
  CorpusEntry e;
  e.name = "realstruct-2";
  e.description =
      "GL(2,C) over the real structures R(2), g = -tr; bracket/model checks only "
      "(no space-like 2-plane exists for this signature)";
  e.group = make_gl_glnr(2, -1.0);
  e.model_kind = ModelKind::RealStructures;
  return e;
}

CorpusEntry make_flat_torus() {
  CorpusEntry e;
  e.name = "flat-torus";
  e.description = "minimal torus immersion into R2/Z2 via a constant null form";
  RVec l1(2), l2(2);
  l1 << 1, 0;
  l2 << 0, 1;
  e.group = make_abelian(2, {l1, l2});
  e.model_kind = ModelKind::TorusRn;
  e.lattice = {l1, l2};

  AbelianCurve c;
  c.components.resize(2);
  c.components[0].add(1, 1.0);
  c.components[1].add(1, kI);
  e.curve = make_abelian_curve(e.group, ChartDomain::rectangle(0.0, 1.0, 0.0, 1.0), c);

  e.expected["isotropy"] = {0.0, 1e-8, Provenance::Trivial};
  e.expected["holomorphy"] = {0.0, 1e-8, Provenance::Trivial};
  e.expected["K"] = {0.0, 1e-8, Provenance::Trivial};
  e.expected["lambda2"] = {1.0, 1e-10, Provenance::Derived};
  e.expected["lattice_membership"] = {0.0, 1e-10, Provenance::Derived};

  e.beta = [](Complex) {
    CVec b(2);
    b << 1.0, kI;
    return b;
  };
  // generators of the parameter torus C/(Z + iZ)
  e.period_loops.push_back(PathSpec::segment(Complex(0.3, 0.4), Complex(1.3, 0.4)));
  e.period_loops.push_back(PathSpec::segment(Complex(0.3, 0.4), Complex(0.3, 1.4)));
  return e;
}

std::vector<CorpusEntry> build_corpus() {
  std::vector<CorpusEntry> all;
  all.push_back(make_enneper());
  all.push_back(make_catenoid_annulus());
  all.push_back(make_horosphere());
  all.push_back(make_desitter_null());
  all.push_back(make_hermpos3());
  all.push_back(make_realstruct2());
  all.push_back(make_flat_torus());
  for (CorpusEntry& e : all) screen_spacelike(e);
  return all;
}

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build_corpus();
  return entries;
}

} // namespace

std::vector<std::string> list_entries() {
  std::vector<std::string> names;
  for (const auto& e : corpus()) names.push_back(e.name);
  return names;
}

const CorpusEntry& get_entry(const std::string& name) {
  for (const auto& e : corpus())
    if (e.name == name) return e;
  throw UnknownEntry("no corpus entry named '" + name + "'");
}

} // namespace nullcurve
