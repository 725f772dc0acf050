#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nullcurve/errors.hpp"
#include "nullcurve/matfun.hpp"
#include "nullcurve/util.hpp"

using namespace nullcurve;

TEST_CASE("exp of zero is the identity") {
  Mat z = Mat::Zero(3, 3);
  CHECK((expm(z) - Mat::Identity(3, 3)).norm() == doctest::Approx(0.0));
}

TEST_CASE("exp of a diagonal matrix") {
  Mat d = Mat::Zero(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = -1.0;
  Mat e = expm(d);
  CHECK(std::abs(e(0, 0) - std::exp(1.0)) < 1e-14);
  CHECK(std::abs(e(1, 1) - std::exp(-1.0)) < 1e-14);
  CHECK(std::abs(e(0, 1)) == 0.0);
}

TEST_CASE("log(exp(X)) = X for random small X") {
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    Mat x(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) x(i, j) = Complex(gauss(rng, 0.2), gauss(rng, 0.2));
    if (x.norm() > 0.5) x *= 0.5 / x.norm();
    Mat back = logm_principal(expm(x));
    CHECK((back - x).norm() < 1e-12 * (1 + x.norm()));
  }
}

TEST_CASE("exp(log(S)) = S at 1e-10 relative accuracy") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Mat x(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) x(i, j) = Complex(gauss(rng, 0.4), gauss(rng, 0.4));
    Mat s = expm(x);
    CHECK((expm(logm_principal(s)) - s).norm() < 1e-10 * s.norm());
  }
}

TEST_CASE("principal log rejects eigenvalues on the negative real axis") {
  Mat s = Mat::Identity(2, 2);
  s(0, 0) = -1.0;
  CHECK_THROWS_AS(logm_principal(s), LogBranchFailure);
  CHECK_THROWS_AS(sqrtm_principal(s), LogBranchFailure);
}

TEST_CASE("spd branch: log/sqrt of positive Hermitian matrices") {
  Mat s(2, 2);
  s << 2.0, Complex(0.3, 0.1), Complex(0.3, -0.1), 1.0;
  Mat r = sqrtm_spd(s);
  CHECK((r * r - s).norm() < 1e-12);
  CHECK(hermitian_residual(r) < 1e-13);
  Mat l = logm_spd(s);
  CHECK((expm(l) - s).norm() < 1e-12);

  Mat notpos = Mat::Identity(2, 2);
  notpos(1, 1) = -2.0;
  CHECK_THROWS_AS(logm_spd(notpos), LogBranchFailure);
}

TEST_CASE("safe_inverse rejects singular matrices") {
  Mat s = Mat::Zero(2, 2);
  s(0, 0) = 1.0;
  CHECK_THROWS_AS(safe_inverse(s), SingularGroupElement);
}
