#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nullcurve/errors.hpp"
#include "nullcurve/homspace.hpp"
#include "nullcurve/matfun.hpp"

using namespace nullcurve;

namespace {

Mat m2(Complex a, Complex b, Complex c, Complex d) {
  Mat m(2, 2);
  m << a, b, c, d;
  return m;
}

Mat random_group_element(const RealFormGroup& g, Rng& rng, double scale = 0.3) {
  return g.group_exp(g.random_g_element(rng, scale));
}

TangentAtPoint random_tangent(const HomogeneousModel& m, const ModelPoint& p, Rng& rng) {
  return m.tangent_from_frame(p, m.canonical_lift(p), m.group().random_h_element(rng));
}

} // namespace

TEST_CASE("projection: identity goes to the base point") {
  GroupPtr su = make_sl2c_su2(-2.0);
  HomogeneousModel herm(ModelKind::HermPos, su);
  ModelPoint base = herm.project(su->identity());
  CHECK((base.mat - Mat::Identity(2, 2)).norm() < 1e-15);

  GroupPtr slr = make_sl2c_sl2r(2.0);
  HomogeneousModel rs(ModelKind::RealStructures, slr);
  CHECK((rs.project(slr->identity()).mat - Mat::Identity(2, 2)).norm() < 1e-15);

  GroupPtr ab = make_abelian(3);
  HomogeneousModel eu(ModelKind::EuclideanRn, ab);
  CHECK(eu.project(ab->identity()).vec.norm() == 0.0);
}

TEST_CASE("projection is H-fiber invariant") {
  Rng rng(41);
  for (auto [kind, g] : {std::pair{ModelKind::HermPos, make_sl2c_su2(-2.0)},
                         std::pair{ModelKind::RealStructures, make_sl2c_sl2r(2.0)},
                         std::pair{ModelKind::HermPos, make_gl_un(3)},
                         std::pair{ModelKind::RealStructures, make_gl_glnr(2)},
                         std::pair{ModelKind::CosetGeneric, make_sl2c_su2(-2.0)}}) {
    HomogeneousModel m(kind, g);
    for (int t = 0; t < 5; ++t) {
      Mat s = random_group_element(*g, rng);
      Mat h = g->group_exp(g->random_h_element(rng, 0.4));
      CHECK(m.point_distance(m.project(s), m.project(g->compose(s, h))) < 1e-10);
    }
  }
}

TEST_CASE("HermPos projection of the unipotent example") {
  GroupPtr su = make_sl2c_su2(-2.0);
  HomogeneousModel herm(ModelKind::HermPos, su);
  Complex z(0.7, -0.4);
  ModelPoint p = herm.project(m2(1, z, 0, 1));
  Mat want = m2(1.0 + std::norm(z), z, std::conj(z), 1.0);
  CHECK((p.mat - want).norm() < 1e-14);
  CHECK(herm.point_residual(p) < 1e-12);
}

TEST_CASE("lift_tangent: base point, Hermitian direction E gives (I, E/2)") {
  GroupPtr g = make_gl_un(2, -1.0);
  HomogeneousModel m(ModelKind::HermPos, g);
  ModelPoint base = m.base_point();
  Mat E = m2(1, Complex(0.5, 0.25), Complex(0.5, -0.25), -2);
  TangentAtPoint chi;
  chi.point = base;
  chi.mat = E;
  auto [gamma, w] = m.lift_tangent(base, chi);
  CHECK((gamma - Mat::Identity(2, 2)).norm() < 1e-14);
  CHECK((w - 0.5 * E).norm() < 1e-13);
}

TEST_CASE("lift_tangent is a section of the pushforward") {
  Rng rng(43);
  for (auto [kind, g] : {std::pair{ModelKind::HermPos, make_gl_un(3)},
                         std::pair{ModelKind::RealStructures, make_gl_glnr(2)},
                         std::pair{ModelKind::EuclideanRn, make_abelian(3)}}) {
    HomogeneousModel m(kind, g);
    for (int t = 0; t < 5; ++t) {
      ModelPoint p = m.project(random_group_element(*g, rng));
      TangentAtPoint chi = random_tangent(m, p, rng);
      auto [gamma, w] = m.lift_tangent(p, chi);
      CHECK(m.point_distance(m.project(gamma), p) < 1e-10);
      TangentAtPoint back = m.pushforward(gamma, g->maurer_cartan(gamma, w));
      CHECK(m.tangent_distance(back, chi) < 1e-10);
      // horizontal: θ-part of γ⁻¹w vanishes
      Mat q = g->maurer_cartan(gamma, w);
      CHECK(g->split(q).first.norm() < 1e-11);
    }
  }
}

TEST_CASE("pushforward-of-jet finite difference consistency") {
  // d/dt project(γ·exp(tQ)) at t=0 matches the closed-form pushforward
  Rng rng(44);
  GroupPtr g = make_gl_un(2, -1.0);
  HomogeneousModel m(ModelKind::HermPos, g);
  Mat S = random_group_element(*g, rng);
  Mat Q = g->random_g_element(rng);
  const double h = 1e-6;
  Mat plus = g->compose(S, g->group_exp(Mat(h * Q)));
  Mat minus = g->compose(S, g->group_exp(Mat(-h * Q)));
  Mat fd = (m.project(plus).mat - m.project(minus).mat) / (2 * h);
  TangentAtPoint t = m.pushforward(S, Q);
  Mat u = m.project(S).mat * t.mat; // χ = p⁻¹u → u = p·χ
  CHECK((fd - u).norm() < 1e-8);
}

TEST_CASE("metric at the H3 base point matches the form value") {
  GroupPtr su = make_sl2c_su2(-2.0);
  HomogeneousModel m(ModelKind::HermPos, su);
  ModelPoint base = m.base_point();
  Mat Y = m2(0.5 * kI, 0, 0, -0.5 * kI);
  TangentAtPoint chi = m.tangent_from_frame(base, m.canonical_lift(base), Y);
  CHECK(m.metric(chi, chi) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("Euclidean metric is the standard inner product") {
  GroupPtr ab = make_abelian(3);
  HomogeneousModel m(ModelKind::EuclideanRn, ab);
  ModelPoint p = m.base_point();
  TangentAtPoint u, v;
  u.point = v.point = p;
  u.vec = RVec(3);
  u.vec << 1, 2, -1;
  v.vec = RVec(3);
  v.vec << 0.5, -1, 2;
  CHECK(m.metric(u, v) == doctest::Approx(u.vec.dot(v.vec)).epsilon(1e-13));
}

TEST_CASE("metric is independent of the lift (frame conjugation)") {
  Rng rng(45);
  GroupPtr g = make_gl_un(3);
  HomogeneousModel m(ModelKind::HermPos, g);
  ModelPoint p = m.project(random_group_element(*g, rng));
  TangentAtPoint u = random_tangent(m, p, rng), v = random_tangent(m, p, rng);
  Mat gamma = m.canonical_lift(p);
  Mat h = g->group_exp(g->random_h_element(rng, 0.5));
  Mat gamma2 = g->compose(gamma, h);
  double a = g->form(m.frame_of_tangent(gamma, u), m.frame_of_tangent(gamma, v));
  double b = g->form(m.frame_of_tangent(gamma2, u), m.frame_of_tangent(gamma2, v));
  CHECK(a == doctest::Approx(b).epsilon(1e-10));
}

TEST_CASE("bracket closed form: HermPos example at the identity") {
  GroupPtr g = make_gl_un(2, -1.0);
  HomogeneousModel m(ModelKind::HermPos, g);
  ModelPoint base = m.base_point();
  TangentAtPoint u, v;
  u.point = v.point = base;
  u.mat = m2(0, 1, 1, 0);
  v.mat = m2(1, 0, 0, -1);
  TangentAtPoint br = m.bracket(u, v);
  Mat want = m2(0, -kI, kI, 0); // (i/2)[χ,χ'] = [[0,-i],[i,0]]
  CHECK((br.mat - want).norm() < 1e-13);
  CHECK((m.bracket_closed_form(u, v).mat - want).norm() < 1e-13);
}

TEST_CASE("generic vs closed-form brackets agree on random inputs (n = 2, 3)") {
  Rng rng(46);
  for (auto [kind, g] : {std::pair{ModelKind::HermPos, make_gl_un(2)},
                         std::pair{ModelKind::HermPos, make_gl_un(3)},
                         std::pair{ModelKind::RealStructures, make_gl_glnr(2)},
                         std::pair{ModelKind::RealStructures, make_gl_glnr(3)}}) {
    HomogeneousModel m(kind, g);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
      ModelPoint p = m.project(random_group_element(*g, rng));
      TangentAtPoint u = random_tangent(m, p, rng), v = random_tangent(m, p, rng);
      worst = std::max(worst, m.tangent_distance(m.bracket(u, v), m.bracket_closed_form(u, v)));
    }
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("abelian bracket vanishes; bracket antisymmetry") {
  Rng rng(47);
  GroupPtr ab = make_abelian(2);
  HomogeneousModel m(ModelKind::EuclideanRn, ab);
  ModelPoint p = m.base_point();
  TangentAtPoint u = random_tangent(m, p, rng), v = random_tangent(m, p, rng);
  CHECK(m.tangent_norm(m.bracket(u, v)) < 1e-15);

  GroupPtr g = make_gl_un(3);
  HomogeneousModel hm(ModelKind::HermPos, g);
  ModelPoint hp = hm.project(random_group_element(*g, rng));
  TangentAtPoint hu = random_tangent(hm, hp, rng), hv = random_tangent(hm, hp, rng);
  TangentAtPoint ab1 = hm.bracket(hu, hv);
  TangentAtPoint ab2 = hm.tangent_scale(hm.bracket(hv, hu), -1.0);
  CHECK(hm.tangent_distance(ab1, ab2) < 1e-11);
}

TEST_CASE("bracket satisfies the Jacobi identity pointwise") {
  Rng rng(48);
  GroupPtr g = make_gl_un(3);
  HomogeneousModel m(ModelKind::HermPos, g);
  ModelPoint p = m.project(random_group_element(*g, rng));
  TangentAtPoint u = random_tangent(m, p, rng), v = random_tangent(m, p, rng),
                 w = random_tangent(m, p, rng);
  TangentAtPoint s = m.bracket(m.bracket(u, v), w);
  s = m.tangent_add(s, m.bracket(m.bracket(v, w), u));
  s = m.tangent_add(s, m.bracket(m.bracket(w, u), v));
  CHECK(m.tangent_norm(s) < 1e-10);
}

TEST_CASE("sectional curvature: H3 is -1, dS3 is +1, flat space is 0") {
  Rng rng(49);
  GroupPtr su = make_sl2c_su2(-2.0);
  HomogeneousModel h3(ModelKind::HermPos, su);
  for (int t = 0; t < 20; ++t) {
    ModelPoint p = h3.project(random_group_element(*su, rng));
    TangentAtPoint u = random_tangent(h3, p, rng), v = random_tangent(h3, p, rng);
    CHECK(h3.sectional_curvature(u, v) == doctest::Approx(-1.0).epsilon(1e-9));
  }

  GroupPtr slr = make_sl2c_sl2r(2.0);
  HomogeneousModel ds3(ModelKind::RealStructures, slr);
  // space-like plane spanned by the first two basis directions
  ModelPoint p = ds3.base_point();
  Mat gamma = ds3.canonical_lift(p);
  TangentAtPoint u = ds3.tangent_from_frame(p, gamma, slr->h_basis()[0]);
  TangentAtPoint v = ds3.tangent_from_frame(p, gamma, slr->h_basis()[1]);
  CHECK(ds3.sectional_curvature(u, v) == doctest::Approx(1.0).epsilon(1e-10));

  GroupPtr ab = make_abelian(3);
  HomogeneousModel eu(ModelKind::EuclideanRn, ab);
  ModelPoint q = eu.base_point();
  TangentAtPoint a = random_tangent(eu, q, rng), b = random_tangent(eu, q, rng);
  CHECK(eu.sectional_curvature(a, b) == doctest::Approx(0.0));
}

TEST_CASE("sectional curvature is basis-invariant on the same plane") {
  Rng rng(50);
  GroupPtr su = make_sl2c_su2(-2.0);
  HomogeneousModel m(ModelKind::HermPos, su);
  ModelPoint p = m.project(random_group_element(*su, rng));
  TangentAtPoint u = random_tangent(m, p, rng), v = random_tangent(m, p, rng);
  double k0 = m.sectional_curvature(u, v);
  for (int t = 0; t < 10; ++t) {
    double a = gauss(rng), b = gauss(rng), c = gauss(rng), d = gauss(rng);
    if (std::abs(a * d - b * c) < 0.1) continue;
    TangentAtPoint u2 = m.tangent_add(m.tangent_scale(u, a), m.tangent_scale(v, b));
    TangentAtPoint v2 = m.tangent_add(m.tangent_scale(u, c), m.tangent_scale(v, d));
    CHECK(m.sectional_curvature(u2, v2) == doctest::Approx(k0).epsilon(1e-8));
  }
}

TEST_CASE("degenerate planes are rejected") {
  GroupPtr su = make_sl2c_su2(-2.0);
  HomogeneousModel m(ModelKind::HermPos, su);
  ModelPoint p = m.base_point();
  Rng rng(51);
  TangentAtPoint u = random_tangent(m, p, rng);
  CHECK_THROWS_AS(m.sectional_curvature(u, u), DegeneratePlane);
}

TEST_CASE("curvature tensor antisymmetries") {
  Rng rng(52);
  GroupPtr g = make_gl_un(3);
  HomogeneousModel m(ModelKind::HermPos, g);
  ModelPoint p = m.project(random_group_element(*g, rng));
  TangentAtPoint u = random_tangent(m, p, rng), v = random_tangent(m, p, rng),
                 w = random_tangent(m, p, rng), x = random_tangent(m, p, rng);
  // antisymmetric in (u,v)
  TangentAtPoint r1 = m.curvature(u, v, w);
  TangentAtPoint r2 = m.tangent_scale(m.curvature(v, u, w), -1.0);
  CHECK(m.tangent_distance(r1, r2) < 1e-10);
  // g(R(u,v)w, x) antisymmetric in (w,x)
  double a = m.metric(m.curvature(u, v, w), x);
  double b = m.metric(m.curvature(u, v, x), w);
  CHECK(std::abs(a + b) < 1e-8 * (1 + std::abs(a)));
}

TEST_CASE("left G-action invariance of metric and bracket") {
  Rng rng(53);
  for (auto [kind, g] : {std::pair{ModelKind::HermPos, make_gl_un(2)},
                         std::pair{ModelKind::RealStructures, make_gl_glnr(2)}}) {
    HomogeneousModel m(kind, g);
    for (int t = 0; t < 5; ++t) {
      ModelPoint p = m.project(random_group_element(*g, rng));
      TangentAtPoint u = random_tangent(m, p, rng), v = random_tangent(m, p, rng);
      Mat act = random_group_element(*g, rng);
      TangentAtPoint gu = m.left_translate(act, u), gv = m.left_translate(act, v);
      CHECK(m.metric(gu, gv) == doctest::Approx(m.metric(u, v)).epsilon(1e-9));
      TangentAtPoint br = m.left_translate(act, m.bracket(u, v));
      TangentAtPoint br2 = m.bracket(gu, gv);
      CHECK(m.tangent_distance(br, br2) < 1e-9 * (1 + m.tangent_norm(br)));
    }
  }
}

TEST_CASE("tangent representation constraints hold for constructed tangents") {
  Rng rng(54);
  for (auto [kind, g] : {std::pair{ModelKind::HermPos, make_gl_un(3)},
                         std::pair{ModelKind::RealStructures, make_gl_glnr(3)}}) {
    HomogeneousModel m(kind, g);
    ModelPoint p = m.project(random_group_element(*g, rng));
    TangentAtPoint t = random_tangent(m, p, rng);
    CHECK(m.tangent_residual(t) < 1e-10);
  }
}

TEST_CASE("normal chart: center, isometry in the flat case, round trips") {
  // flat case: chart is linear
  GroupPtr ab = make_abelian(2);
  HomogeneousModel eu(ModelKind::EuclideanRn, ab);
  ModelPoint p0 = eu.base_point();
  NormalChart flat = normal_chart(eu, p0);
  RVec c(2);
  c << 0.3, -0.7;
  ModelPoint q = flat.to_point(c);
  CHECK(q.vec.norm() == doctest::Approx(c.norm()).epsilon(1e-13));
  CHECK((flat.from_point(q) - c).norm() < 1e-12);
  CHECK(eu.point_distance(flat.to_point(RVec::Zero(2)), p0) < 1e-15);

  // HermPos at I: chart(c) = exp(2·Σc_j(iE_j))
  GroupPtr g = make_gl_un(2, -1.0);
  HomogeneousModel m(ModelKind::HermPos, g);
  NormalChart chart = normal_chart(m, m.base_point());
  RVec c2 = RVec::Zero(chart.dim());
  c2[0] = 0.4;
  c2[1] = -0.2;
  Mat X = Mat::Zero(2, 2);
  for (int j = 0; j < chart.dim(); ++j) X += Complex(0, c2[j]) * chart.basis()[j];
  CHECK((chart.to_point(c2).mat - expm(Mat(2.0 * X))).norm() < 1e-12);

  Rng rng(55);
  for (int t = 0; t < 10; ++t) {
    RVec cr(chart.dim());
    for (int i = 0; i < chart.dim(); ++i) cr[i] = gauss(rng, 0.3);
    if (cr.norm() > 1.0) cr *= 1.0 / cr.norm();
    CHECK((chart.from_point(chart.to_point(cr)) - cr).norm() < 1e-8);
  }
}

TEST_CASE("normal chart round trips on RealStructures and CosetGeneric") {
  Rng rng(56);
  GroupPtr g = make_gl_glnr(2, -1.0);
  HomogeneousModel m(ModelKind::RealStructures, g);
  ModelPoint p0 = m.project(random_group_element(*g, rng, 0.2));
  NormalChart chart = normal_chart(m, p0);
  for (int t = 0; t < 10; ++t) {
    RVec c(chart.dim());
    for (int i = 0; i < chart.dim(); ++i) c[i] = gauss(rng, 0.15);
    CHECK((chart.from_point(chart.to_point(c)) - c).norm() < 1e-8);
  }

  GroupPtr su = make_sl2c_su2(-2.0);
  HomogeneousModel cm(ModelKind::CosetGeneric, su);
  NormalChart cchart = normal_chart(cm, cm.base_point());
  for (int t = 0; t < 10; ++t) {
    RVec c(cchart.dim());
    for (int i = 0; i < cchart.dim(); ++i) c[i] = gauss(rng, 0.25);
    CHECK((cchart.from_point(cchart.to_point(c)) - c).norm() < 1e-8);
  }
}

TEST_CASE("model/group compatibility is enforced") {
  CHECK_THROWS_AS(HomogeneousModel(ModelKind::HermPos, make_sl2c_sl2r()), WrongDimension);
  CHECK_THROWS_AS(HomogeneousModel(ModelKind::RealStructures, make_sl2c_su2()), WrongDimension);
  CHECK_THROWS_AS(HomogeneousModel(ModelKind::TorusRn, make_abelian(2)), WrongDimension);
  CHECK_THROWS_AS(HomogeneousModel(ModelKind::EuclideanRn, make_gl_un(2)), WrongDimension);
}

TEST_CASE("torus model reduces points into the fundamental cell") {
  RVec l1(2), l2(2);
  l1 << 1, 0;
  l2 << 0, 1;
  GroupPtr g = make_abelian(2, {l1, l2});
  HomogeneousModel m(ModelKind::TorusRn, g);
  Mat s = Mat::Zero(2, 2);
  s(0, 0) = Complex(2.3, 0.5);
  s(1, 1) = Complex(-0.6, -1.0);
  ModelPoint p = m.project(s);
  CHECK(p.vec[0] == doctest::Approx(0.3));
  CHECK(p.vec[1] == doctest::Approx(0.4));
}
