#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nullcurve/corpus.hpp"
#include "nullcurve/errors.hpp"
#include "nullcurve/meancurv.hpp"

using namespace nullcurve;

namespace {

Mat m2(Complex a, Complex b, Complex c, Complex d) {
  Mat m(2, 2);
  m << a, b, c, d;
  return m;
}

} // namespace

TEST_CASE("horosphere immersion sample at the origin") {
  const CorpusEntry& e = get_entry("horosphere");
  HomogeneousModel model = e.model();
  ImmersionSample s = project_immersion(*e.curve, model, Complex(0, 0));
  CHECK((s.p.mat - Mat::Identity(2, 2)).norm() < 1e-14);
  CHECK(s.lambda2 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.conformal_residual < 1e-10);
  CHECK(std::abs(s.lambda2 - s.lambda2_metric) < 1e-12);
}

TEST_CASE("Enneper conformal factor at the center is 1/4") {
  const CorpusEntry& e = get_entry("enneper");
  HomogeneousModel model = e.model();
  ImmersionSample s = project_immersion(*e.curve, model, Complex(0, 0));
  CHECK(s.lambda2 == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(s.conformal_residual < 1e-13);
}

TEST_CASE("constant curve is rejected as NotImmersion") {
  GroupPtr g = make_sl2c_su2(-2.0);
  MatrixCurve constant;
  HoloCurve f = make_matrix_curve(g, ChartDomain::rectangle(-1, 1, -1, 1), constant);
  HomogeneousModel model(ModelKind::HermPos, g);
  CHECK_THROWS_AS(project_immersion(f, model, Complex(0, 0)), NotImmersion);
}

TEST_CASE("mean curvature of the horosphere curve") {
  const CorpusEntry& e = get_entry("horosphere");
  HomogeneousModel model = e.model();
  for (Complex z : {Complex(0, 0), Complex(0.4, -0.6)}) {
    ImmersionSample s = project_immersion(*e.curve, model, z);
    MeanCurvature mc = mean_curvature_bracket(model, s);
    CHECK((mc.frame - m2(0.5 * kI, 0, 0, -0.5 * kI)).norm() < 1e-12);
    CHECK(mc.agreement < 1e-10);
    CHECK(e.group->form(mc.frame, mc.frame) == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("mean curvature of the de Sitter curve") {
  const CorpusEntry& e = get_entry("desitter-null");
  HomogeneousModel model = e.model();
  ImmersionSample s = project_immersion(*e.curve, model, Complex(0.1, 0.2));
  CHECK(s.lambda2 == doctest::Approx(4.0).epsilon(1e-12));
  MeanCurvature mc = mean_curvature_bracket(model, s);
  CHECK((mc.frame - m2(0, -0.5, 0.5, 0)).norm() < 1e-12);
  CHECK(mc.agreement < 1e-10);
  CHECK(e.group->form(mc.frame, mc.frame) == doctest::Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("abelian mean curvature vanishes (minimal surfaces)") {
  const CorpusEntry& e = get_entry("enneper");
  HomogeneousModel model = e.model();
  for (Complex z : {Complex(0, 0), Complex(0.3, 0.5)}) {
    ImmersionSample s = project_immersion(*e.curve, model, z);
    MeanCurvature mc = mean_curvature_bracket(model, s);
    CHECK(mc.frame.norm() < 1e-14);
    CHECK(model.tangent_norm(mc.tangent) < 1e-14);
  }
}

TEST_CASE("de Rham route agrees with the bracket route on all corpus curves") {
  for (const std::string& name : list_entries()) {
    const CorpusEntry& e = get_entry(name);
    if (!e.curve || !e.spacelike) continue;
    HomogeneousModel model = e.model();
    const double h = 1e-4;
    for (Complex z : e.curve->domain().grid(4, 4, 3 * h)) {
      ImmersionSample s = project_immersion(*e.curve, model, z);
      MeanCurvature mc = mean_curvature_bracket(model, s);
      Mat maurer = mean_curvature_maurer(*e.curve, model, z, h);
      CHECK((mc.frame - maurer).norm() < 1e-6);
    }
  }
}

TEST_CASE("de Rham route on Enneper vanishes (harmonic coordinates)") {
  const CorpusEntry& e = get_entry("enneper");
  HomogeneousModel model = e.model();
  Mat h = mean_curvature_maurer(*e.curve, model, Complex(0.2, -0.1), 1e-4);
  CHECK(h.norm() < 1e-9);
}

TEST_CASE("corollary residuals on the corpus") {
  for (const std::string& name : list_entries()) {
    const CorpusEntry& e = get_entry(name);
    if (!e.curve || !e.spacelike) continue;
    HomogeneousModel model = e.model();
    for (Complex z : e.curve->domain().grid(3, 3, 1e-3)) {
      ImmersionSample s = project_immersion(*e.curve, model, z);
      CorollaryReport rep = check_corollaries(model, s);
      CHECK(rep.r1 < 1e-8);
      CHECK(rep.r2 < 1e-6);
      if (rep.has_scalar) {
        CHECK(rep.r3 < 1e-8);
        CHECK(rep.gauss_orientation == 1);
      }
    }
  }
}

TEST_CASE("horosphere is CMC-1 with K = -1; de Sitter variant matches") {
  const CorpusEntry& horo = get_entry("horosphere");
  HomogeneousModel hm = horo.model();
  ImmersionSample hs = project_immersion(*horo.curve, hm, Complex(0.2, 0.3));
  CorollaryReport hr = check_corollaries(hm, hs);
  CHECK(hr.K == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(hr.gHH == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(hr.H_scalar == doctest::Approx(1.0).epsilon(1e-10));

  const CorpusEntry& ds = get_entry("desitter-null");
  HomogeneousModel dm = ds.model();
  ImmersionSample dss = project_immersion(*ds.curve, dm, Complex(-0.2, 0.1));
  CorollaryReport dr = check_corollaries(dm, dss);
  CHECK(dr.K == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(dr.gHH == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(dr.H_scalar == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("frame-choice independence: right translation conjugates H-frame") {
  Rng rng(61);
  const CorpusEntry& e = get_entry("horosphere");
  HomogeneousModel model = e.model();
  Mat h0 = e.group->group_exp(e.group->random_h_element(rng, 0.5));
  HoloCurve ft = right_translated(*e.curve, h0);
  Complex z(0.3, -0.2);

  ImmersionSample s1 = project_immersion(*e.curve, model, z);
  ImmersionSample s2 = project_immersion(ft, model, z);
  MeanCurvature m1 = mean_curvature_bracket(model, s1);
  MeanCurvature m2v = mean_curvature_bracket(model, s2);

  Mat conj = e.group->adjoint_action(e.group->inverse(h0), m1.frame);
  CHECK((m2v.frame - conj).norm() < 1e-11);
  // model-tangent value is unchanged
  CHECK(model.tangent_distance(m1.tangent, m2v.tangent) < 1e-11);
}

TEST_CASE("conformal-coordinate independence under z -> a z") {
  const CorpusEntry& e = get_entry("horosphere");
  HomogeneousModel model = e.model();
  Complex a(0.8, 0.45);
  HoloCurve re = reparametrized(*e.curve, a);
  Complex w(0.3, -0.1); // compares φ at a·w

  ImmersionSample s1 = project_immersion(*e.curve, model, a * w);
  ImmersionSample s2 = project_immersion(re, model, w);
  MeanCurvature m1 = mean_curvature_bracket(model, s1);
  MeanCurvature m2v = mean_curvature_bracket(model, s2);
  CHECK(model.tangent_distance(m1.tangent, m2v.tangent) < 1e-8);
  CHECK((m1.frame - m2v.frame).norm() < 1e-8);
}

TEST_CASE("orientation flip: scalar mean curvature changes sign, vector does not") {
  // both orientations exercised; the sign flip of H_scalar is recorded
  const CorpusEntry& e = get_entry("horosphere");
  HomogeneousModel model = e.model();
  HoloCurve flipped = conjugate_parameter(*e.curve);
  Complex z(0.25, 0.4);
  ImmersionSample s1 = project_immersion(*e.curve, model, std::conj(z));
  ImmersionSample s2 = project_immersion(flipped, model, z);
  CorollaryReport r1 = check_corollaries(model, s1);
  CorollaryReport r2 = check_corollaries(model, s2);
  CHECK(r1.H_scalar == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(r2.H_scalar == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(r2.gHH == doctest::Approx(r1.gHH).epsilon(1e-10));
}

TEST_CASE("maurer route needs interior margin") {
  const CorpusEntry& e = get_entry("horosphere");
  HomogeneousModel model = e.model();
  CHECK_THROWS_AS(mean_curvature_maurer(*e.curve, model, Complex(1.0, 0.0), 1e-4), OutOfDomain);
}
