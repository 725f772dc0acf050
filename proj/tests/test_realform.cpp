#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nullcurve/errors.hpp"
#include "nullcurve/matfun.hpp"
#include "nullcurve/realform.hpp"

using namespace nullcurve;

namespace {

Mat m2(Complex a, Complex b, Complex c, Complex d) {
  Mat m(2, 2);
  m << a, b, c, d;
  return m;
}

} // namespace

TEST_CASE("constructor invariants hold for all standard groups") {
  Rng rng(3);
  for (const GroupPtr& g : {make_sl2c_su2(), make_sl2c_sl2r(), make_gl_un(2), make_gl_un(3),
                            make_gl_glnr(2), make_gl_glnr(3), make_abelian(3)}) {
    CHECK_NOTHROW(g->validate(rng));
  }
}

TEST_CASE("split: h-elements have zero alpha part") {
  GroupPtr g = make_sl2c_su2();
  Rng rng(5);
  Mat x = g->random_h_element(rng);
  auto [theta, alpha] = g->split(x);
  CHECK((theta - x).norm() < 1e-14);
  CHECK(alpha.norm() < 1e-14);
}

TEST_CASE("split: i*h elements have zero theta part and alpha = -Y") {
  GroupPtr g = make_sl2c_su2();
  Rng rng(6);
  Mat y = g->random_h_element(rng);
  auto [theta, alpha] = g->split(Mat(kI * y));
  CHECK(theta.norm() < 1e-14);
  CHECK((alpha + y).norm() < 1e-14);
}

TEST_CASE("split of the su(2) nilpotent example") {
  GroupPtr g = make_sl2c_su2();
  Mat x = m2(0, 1, 0, 0);
  auto [theta, alpha] = g->split(x);
  CHECK((theta - m2(0, 0.5, -0.5, 0)).norm() < 1e-15);
  CHECK((alpha - m2(0, 0.5 * kI, 0.5 * kI, 0)).norm() < 1e-15);
  // reconstruction is exact
  CHECK((theta - kI * alpha - x).norm() < 1e-15);
}

TEST_CASE("split reproduces (theta, alpha) for sigma-fixed parts") {
  for (const GroupPtr& g : {make_sl2c_sl2r(), make_gl_un(3)}) {
    Rng rng(9);
    Mat t = g->random_h_element(rng), a = g->random_h_element(rng);
    auto [t2, a2] = g->split(Mat(t - kI * a));
    CHECK((t2 - t).norm() < 1e-13);
    CHECK((a2 - a).norm() < 1e-13);
  }
}

TEST_CASE("form on su(2) with c = -2 is the rigged inner product") {
  GroupPtr g = make_sl2c_su2(-2.0);
  Mat a = m2(0.5 * kI, 0, 0, -0.5 * kI);
  CHECK(g->form(a, a) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("form symmetry on random pairs; formC vanishes on nilpotents") {
  GroupPtr g = make_sl2c_su2(-2.0);
  Rng rng(10);
  for (int t = 0; t < 20; ++t) {
    Mat a = g->random_h_element(rng), b = g->random_h_element(rng);
    CHECK(g->form(a, b) == doctest::Approx(g->form(b, a)).epsilon(1e-12));
  }
  Mat nil = m2(0, 1, 0, 0);
  CHECK(std::abs(g->formC(nil, nil)) < 1e-15);
}

TEST_CASE("form rejects arguments outside the real form") {
  GroupPtr g = make_sl2c_su2();
  Mat notfixed = m2(0, 1, 0, 0); // σ(X) = -X† ≠ X
  CHECK_THROWS_AS(g->form(notfixed, notfixed), NotInRealForm);
}

TEST_CASE("brute-force Killing form equals 4 tr(XY) on sl(2,C)") {
  GroupPtr g = make_sl2c_su2();
  Rng rng(12);
  for (int t = 0; t < 100; ++t) {
    Mat x = g->random_g_element(rng), y = g->random_g_element(rng);
    Complex brute = g->killing(x, y);
    Complex closed = 4.0 * (x * y).trace();
    CHECK(std::abs(brute - closed) < 1e-10 * (1.0 + std::abs(closed)));
  }
}

TEST_CASE("Killing form is symmetric; g = -B/2 matches -2 tr on su(2)") {
  GroupPtr g = make_sl2c_su2(-2.0);
  Rng rng(13);
  Mat a = g->random_h_element(rng), b = g->random_h_element(rng);
  CHECK(std::abs(g->killing(a, b) - g->killing(b, a)) < 1e-12);
  CHECK(std::abs(-0.5 * g->killing(a, b) - g->form(a, b)) < 1e-10);
}

TEST_CASE("orientation sign of the reference basis") {
  for (const GroupPtr& g : {make_sl2c_su2(-2.0), make_sl2c_sl2r(2.0)}) {
    const auto& e = g->h_basis();
    Mat br = e[0] * e[1] - e[1] * e[0];
    CHECK(g->orientation_sign(e[0], e[1], br) == 1);
    CHECK(g->orientation_sign(e[1], e[0], br) == -1);
    CHECK(g->orientation_sign(e[0], e[1], e[0]) == 0);
  }
}

TEST_CASE("orientation sign is Ad-invariant") {
  GroupPtr g = make_sl2c_su2(-2.0);
  Rng rng(14);
  const auto& e = g->h_basis();
  Mat br = e[0] * e[1] - e[1] * e[0];
  for (int t = 0; t < 10; ++t) {
    Mat h = g->group_exp(g->random_h_element(rng, 0.7));
    Mat u = g->adjoint_action(h, e[0]);
    Mat v = g->adjoint_action(h, e[1]);
    Mat w = g->adjoint_action(h, br);
    CHECK(g->orientation_sign(u, v, w) == 1);
  }
}

TEST_CASE("orientation sign requires a 3-dimensional simple form") {
  GroupPtr g = make_gl_un(2);
  const auto& e = g->h_basis();
  CHECK_THROWS_AS(g->orientation_sign(e[0], e[1], e[2]), WrongDimension);
}

TEST_CASE("group exp/log round trips") {
  GroupPtr g = make_sl2c_su2();
  Rng rng(15);
  for (int t = 0; t < 50; ++t) {
    Mat x = g->random_g_element(rng, 0.2);
    if (x.norm() > 0.5) x *= 0.5 / x.norm();
    CHECK((g->group_log(g->group_exp(x)) - x).norm() < 1e-11);
  }
  CHECK((g->group_exp(Mat(Mat::Zero(2, 2))) - Mat::Identity(2, 2)).norm() == 0.0);
}

TEST_CASE("abelian group operations are additive") {
  GroupPtr g = make_abelian(3);
  Rng rng(16);
  Mat a = g->random_g_element(rng), b = g->random_g_element(rng);
  CHECK((g->compose(a, b) - (a + b)).norm() == 0.0);
  CHECK((g->group_exp(a) - a).norm() == 0.0);
  CHECK((g->inverse(a) + a).norm() == 0.0);
  CHECK(g->identity().norm() == 0.0);
}

TEST_CASE("membership residuals") {
  GroupPtr sl = make_sl2c_su2();
  CHECK(sl->membership_residual(Mat(Mat::Identity(2, 2))) < 1e-15);
  CHECK(sl->membership_residual(m2(2, 0, 0, 1)) == doctest::Approx(1.0));

  GroupPtr ab = make_abelian(2);
  Mat off = Mat::Zero(2, 2);
  off(0, 1) = 3.0;
  CHECK(ab->membership_residual(off) == doctest::Approx(3.0));
}

TEST_CASE("lattice reduction: Babai rounding on the generators") {
  RVec l1(2), l2(2);
  l1 << 1, 0;
  l2 << 0, 1;
  GroupPtr g = make_abelian(2, {l1, l2});
  RVec x(2);
  x << 2.3, -1.4;
  RVec red = g->lattice_reduce(x);
  CHECK(red[0] == doctest::Approx(0.3));
  CHECK(red[1] == doctest::Approx(-0.4));
}

TEST_CASE("g ad-invariance residual over basis triples") {
  for (const GroupPtr& g : {make_sl2c_su2(-2.0), make_sl2c_sl2r(2.0), make_gl_un(3, -1.0)}) {
    const auto& basis = g->h_basis();
    for (const Mat& z : basis)
      for (const Mat& a : basis)
        for (const Mat& b : basis) {
          Mat za = z * a - a * z, zb = z * b - b * z;
          CHECK(std::abs(g->form(za, b) + g->form(a, zb)) < 1e-10);
        }
  }
}

TEST_CASE("explicit Gram form agrees with the trace form it encodes") {
  // su(2), g = -2 tr given explicitly in basis coordinates (identity Gram)
  RMat gram = RMat::Identity(3, 3);
  GroupPtr via_gram = make_group(2, GroupKind::SpecialLinear, SigmaKind::NegAdjoint,
                                 FormSpec::explicit_gram(gram));
  GroupPtr via_trace = make_sl2c_su2(-2.0);
  Rng rng(21);
  for (int t = 0; t < 20; ++t) {
    Mat a = via_trace->random_h_element(rng), b = via_trace->random_h_element(rng);
    CHECK(via_gram->form(a, b) == doctest::Approx(via_trace->form(a, b)).epsilon(1e-10));
  }
}
