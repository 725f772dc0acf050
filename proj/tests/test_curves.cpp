#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nullcurve/curve.hpp"
#include "nullcurve/errors.hpp"
#include "nullcurve/matfun.hpp"

using namespace nullcurve;

namespace {

Mat m2(Complex a, Complex b, Complex c, Complex d) {
  Mat m(2, 2);
  m << a, b, c, d;
  return m;
}

HoloCurve exp_curve(GroupPtr g, const Mat& A, ChartDomain dom = ChartDomain::rectangle(-1, 1, -1, 1)) {
  MatrixCurve mc;
  mc.factors.push_back({A, Poly2::z()});
  return make_matrix_curve(std::move(g), std::move(dom), std::move(mc));
}

} // namespace

TEST_CASE("chart domains: membership and margins") {
  ChartDomain rect = ChartDomain::rectangle(-1, 1, -2, 2);
  CHECK(rect.contains(Complex(0, 0)));
  CHECK(!rect.contains(Complex(1.5, 0)));
  CHECK(!rect.contains(Complex(0.95, 0), 0.1));

  ChartDomain ann = ChartDomain::annulus_sector(0.5, 2.0, -2.8, 2.8);
  CHECK(ann.contains(Complex(1, 0)));
  CHECK(!ann.contains(Complex(0.2, 0)));
  CHECK(!ann.contains(Complex(-1, 1e-3))); // angle ±π excluded by the sector

  ChartDomain punc = ChartDomain::punctured_rectangle(-1, 1, -1, 1, {Complex(0, 0)});
  CHECK(punc.contains(Complex(0.5, 0.5)));
  CHECK(!punc.contains(Complex(1e-4, 0), 1e-3));
  CHECK_THROWS_AS(ChartDomain::rectangle(1, -1, 0, 1), OutOfDomain);
  CHECK_THROWS_AS(ChartDomain::punctured_rectangle(-1, 1, -1, 1, {Complex(5, 5)}), OutOfDomain);
}

TEST_CASE("pullback frames of exp(zA) in the su(2) form are constant") {
  GroupPtr g = make_sl2c_su2();
  HoloCurve f = exp_curve(g, m2(0, 1, 0, 0));
  for (Complex z : {Complex(0, 0), Complex(0.3, -0.2), Complex(-0.5, 0.4)}) {
    FrameValues fr = pullback_frames(*g, f.jet(z));
    CHECK((fr.alpha_x - m2(0, 0.5 * kI, 0.5 * kI, 0)).norm() < 1e-12);
    CHECK((fr.alpha_y - m2(0, -0.5, 0.5, 0)).norm() < 1e-12);
    CHECK((fr.theta_x - m2(0, 0.5, -0.5, 0)).norm() < 1e-12);
    CHECK((fr.theta_y - fr.alpha_x).norm() < 1e-12);
  }
}

TEST_CASE("constant curve has vanishing frames") {
  GroupPtr g = make_sl2c_su2();
  MatrixCurve mc;
  mc.left = expm(m2(0, 0.3, -0.3, 0));
  HoloCurve f = make_matrix_curve(g, ChartDomain::rectangle(-1, 1, -1, 1), mc);
  FrameValues fr = pullback_frames(*g, f.jet(Complex(0.1, 0.2)));
  CHECK(fr.theta_x.norm() < 1e-15);
  CHECK(fr.alpha_x.norm() < 1e-15);
  CHECK(fr.theta_y.norm() < 1e-15);
  CHECK(fr.alpha_y.norm() < 1e-15);
}

TEST_CASE("h-direction curve exp(z E1) has theta_x = E1 and alpha_x = 0") {
  GroupPtr g = make_sl2c_su2();
  Mat e1 = g->h_basis()[0];
  HoloCurve f = exp_curve(g, e1);
  FrameValues fr = pullback_frames(*g, f.jet(Complex(0.2, 0.1)));
  CHECK((fr.theta_x - e1).norm() < 1e-13);
  CHECK(fr.alpha_x.norm() < 1e-13);
}

TEST_CASE("holomorphy residual: holomorphic, anti-holomorphic, mixed") {
  GroupPtr g = make_sl2c_su2();
  Mat A = m2(0, 1, 0, 0);

  HoloCurve hol = exp_curve(g, A);
  CHECK(holomorphy_residual(*g, hol.jet(Complex(0.3, 0.3))) < 1e-13);

  // f(z) = exp(z̄ A): residual = 2(‖θ(A)‖ + ‖α(A)‖) = 2√2 for this A
  MatrixCurve anti;
  anti.factors.push_back({A, Poly2().add(0, 1, 1.0)});
  HoloCurve f_anti = make_matrix_curve(g, ChartDomain::rectangle(-1, 1, -1, 1), anti);
  CHECK(holomorphy_residual(*g, f_anti.jet(Complex(0.2, -0.1))) ==
        doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-10));

  // f(z) = exp((z+z̄)E1): residual = 2‖E1‖
  Mat e1 = g->h_basis()[0];
  MatrixCurve mixed;
  mixed.factors.push_back({e1, Poly2().add(1, 0, 1.0).add(0, 1, 1.0)});
  HoloCurve f_mixed = make_matrix_curve(g, ChartDomain::rectangle(-1, 1, -1, 1), mixed);
  CHECK(holomorphy_residual(*g, f_mixed.jet(Complex(0.1, 0.1))) ==
        doctest::Approx(2.0 * e1.norm()).epsilon(1e-10));
}

TEST_CASE("isotropy residual: nilpotent vs diagonal directions") {
  GroupPtr g = make_sl2c_su2(-2.0);
  CHECK(isotropy_residual(*g, exp_curve(g, m2(0, 1, 0, 0)).jet(Complex(0.4, 0.1))) < 1e-14);
  CHECK(isotropy_residual(*g, exp_curve(g, m2(1, 0, 0, -1)).jet(Complex(0.1, 0.0))) ==
        doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("Enneper direction is isotropic in the abelian group") {
  GroupPtr g = make_abelian(3);
  AbelianCurve c;
  c.components.resize(3);
  c.components[0].add(1, 0.5).add(3, -1.0 / 6.0);
  c.components[1].add(1, Complex(0, 0.5)).add(3, Complex(0, 1.0 / 6.0));
  c.components[2].add(2, 0.5);
  HoloCurve f = make_abelian_curve(g, ChartDomain::rectangle(-0.8, 0.8, -0.8, 0.8), c);
  for (Complex z : {Complex(0, 0), Complex(0.5, -0.3)}) {
    CHECK(isotropy_residual(*g, f.jet(z)) < 1e-14);
    CHECK(holomorphy_residual(*g, f.jet(z)) < 1e-14);
  }
}

TEST_CASE("spacelike margin of the horosphere and de Sitter curves") {
  GroupPtr su = make_sl2c_su2(-2.0);
  MatrixCurve horo;
  horo.factors.push_back({m2(0, 1, 0, 0), Poly2::z()});
  HoloCurve fh = make_matrix_curve(su, ChartDomain::rectangle(-1, 1, -1, 1), horo);
  CHECK(spacelike_margin(*su, fh.jet(Complex(0.2, 0.7))) == doctest::Approx(2.0).epsilon(1e-12));

  GroupPtr slr = make_sl2c_sl2r(2.0);
  HoloCurve fd = exp_curve(slr, m2(1, kI, kI, -1));
  CHECK(spacelike_margin(*slr, fd.jet(Complex(0.1, 0.1))) == doctest::Approx(8.0).epsilon(1e-12));

  MatrixCurve constant;
  HoloCurve fc = make_matrix_curve(su, ChartDomain::rectangle(-1, 1, -1, 1), constant);
  CHECK(spacelike_margin(*su, fc.jet(Complex(0, 0))) == doctest::Approx(0.0));
}

TEST_CASE("dtheta residual vanishes for holomorphic curves") {
  GroupPtr g = make_sl2c_su2();
  HoloCurve f = exp_curve(g, m2(0, 1, 0, 0));
  CHECK(dtheta_residual(f, Complex(0.1, 0.2), 1e-4) < 1e-10);

  MatrixCurve constant;
  HoloCurve fc = make_matrix_curve(g, ChartDomain::rectangle(-1, 1, -1, 1), constant);
  CHECK(dtheta_residual(fc, Complex(0, 0), 1e-4) == doctest::Approx(0.0));

  CHECK_THROWS_AS(dtheta_residual(f, Complex(1.0, 0.0), 1e-4), OutOfDomain);
}

TEST_CASE("dtheta residual detects non-holomorphic curves with non-commuting frames") {
  GroupPtr g = make_sl2c_su2();
  // f = exp(x E1) exp(y E2): dθ_f(∂x,∂y) = [Ad_{exp(-yE2)}E1, E2] ≠ 0
  MatrixCurve mc;
  mc.factors.push_back({g->h_basis()[0], Poly2::x()});
  mc.factors.push_back({g->h_basis()[1], Poly2::y()});
  HoloCurve f = make_matrix_curve(g, ChartDomain::rectangle(-1, 1, -1, 1), mc);
  CHECK(dtheta_residual(f, Complex(0.2, 0.3), 1e-4) > 0.1);
}

TEST_CASE("holomorphic jets satisfy the alpha-alpha = theta-theta bracket identity") {
  GroupPtr g = make_sl2c_su2();
  HoloCurve f = exp_curve(g, m2(0.3, 1, 0.2, -0.3));
  for (Complex z : {Complex(0, 0), Complex(0.4, -0.2)}) {
    FrameValues fr = pullback_frames(*g, f.jet(z));
    Mat aa = fr.alpha_x * fr.alpha_y - fr.alpha_y * fr.alpha_x;
    Mat tt = fr.theta_x * fr.theta_y - fr.theta_y * fr.theta_x;
    CHECK((aa - tt).norm() < 1e-10);
  }
}

TEST_CASE("right translation by a constant H-element") {
  GroupPtr g = make_sl2c_su2(-2.0);
  Rng rng(31);
  HoloCurve f = exp_curve(g, m2(0, 1, 0, 0));
  Mat h0 = g->group_exp(g->random_h_element(rng, 0.5));
  HoloCurve ft = right_translated(f, h0);
  Complex z(0.25, -0.3);

  CHECK(isotropy_residual(*g, ft.jet(z)) ==
        doctest::Approx(isotropy_residual(*g, f.jet(z))).epsilon(1e-10));
  CHECK(spacelike_margin(*g, ft.jet(z)) ==
        doctest::Approx(spacelike_margin(*g, f.jet(z))).epsilon(1e-10));

  // frames conjugate by Ad_{h0^{-1}}
  FrameValues fr = pullback_frames(*g, f.jet(z));
  FrameValues frt = pullback_frames(*g, ft.jet(z));
  Mat hinv = g->inverse(h0);
  CHECK((frt.alpha_x - g->adjoint_action(hinv, fr.alpha_x)).norm() < 1e-12);
  CHECK((frt.theta_y - g->adjoint_action(hinv, fr.theta_y)).norm() < 1e-12);
}

TEST_CASE("numeric jets approximate closed-form jets") {
  GroupPtr g = make_sl2c_su2();
  Mat A = m2(0, 1, 0, 0);
  HoloCurve closed = exp_curve(g, A);
  HoloCurve numeric = make_numeric_curve(g, ChartDomain::rectangle(-1, 1, -1, 1),
                                         [A](Complex z) { return expm(Mat(z * A)); }, 1e-5);
  CurveJet jc = closed.jet(Complex(0.3, 0.1)), jn = numeric.jet(Complex(0.3, 0.1));
  CHECK((jc.f - jn.f).norm() < 1e-14);
  CHECK((jc.dfx - jn.dfx).norm() < 1e-9);
  CHECK((jc.dfy - jn.dfy).norm() < 1e-9);
  CHECK(!numeric.closed_form());
  CHECK(holomorphy_residual(*g, jn) < numeric.holomorphy_tol(jn));
}

TEST_CASE("gauge transform of a frame field matches the frames of f·h") {
  GroupPtr g = make_sl2c_su2();
  HoloCurve f = exp_curve(g, m2(0, 1, 0, 0));
  MatrixCurve gc;
  Poly2 p;
  p.add(1, 0, 0.2).add(0, 1, 0.2); // 0.4·x, real
  gc.factors.push_back({g->h_basis()[2], p});
  HoloCurve gauge = make_matrix_curve(g, f.domain(), gc);

  FrameField F = frame_field(f);
  FrameField Fg = gauge_transform(g, F, gauge);
  HoloCurve fg = compose_curves(f, gauge);
  FrameField Fdirect = frame_field(fg);

  Complex z(0.3, -0.4);
  FrameValues a = Fg(z), b = Fdirect(z);
  CHECK((a.theta_x - b.theta_x).norm() < 1e-12);
  CHECK((a.theta_y - b.theta_y).norm() < 1e-12);
  CHECK((a.alpha_x - b.alpha_x).norm() < 1e-12);
  CHECK((a.alpha_y - b.alpha_y).norm() < 1e-12);
}

TEST_CASE("singular group value raises SingularGroupElement") {
  GroupPtr g = make_gl_un(2);
  CurveJet jet;
  jet.z = 0;
  jet.f = Mat::Zero(2, 2);
  jet.dfx = Mat::Identity(2, 2);
  jet.dfy = Mat::Identity(2, 2);
  CHECK_THROWS_AS(pullback_frames(*g, jet), SingularGroupElement);
}
