#pragma once

#include "nullcurve/types.hpp"

#include <vector>

namespace nullcurve {

/// Bivariate polynomial Σ c_{jk} z^j z̄^k; the z̄ powers make smooth
/// (non-holomorphic) gauges and sections expressible in closed form.
class Poly2 {
public:
  struct Term {
    int zpow = 0;
    int zbarpow = 0;
    Complex coeff;
  };

  Poly2() = default;
  static Poly2 constant(Complex c);
  static Poly2 z();
  static Poly2 x(); // (z + z̄)/2
  static Poly2 y(); // (z − z̄)/2i

  Poly2& add(int zpow, int zbarpow, Complex coeff);

  Complex eval(Complex z) const;
  Complex dz(Complex z) const;
  Complex dzbar(Complex z) const;
  Complex dx(Complex z) const { return dz(z) + dzbar(z); }
  Complex dy(Complex z) const { return kI * (dz(z) - dzbar(z)); }

  const std::vector<Term>& terms() const { return terms_; }

private:
  std::vector<Term> terms_;
};

/// One component of an abelian curve: Laurent series plus an optional
/// principal-branch logarithm term.
class LaurentLog {
public:
  LaurentLog& add(int power, Complex coeff);
  LaurentLog& add_log(Complex coeff);

  Complex eval(Complex z) const;
  Complex deriv(Complex z) const;

private:
  std::vector<std::pair<int, Complex>> terms_;
  Complex log_coeff_{0.0, 0.0};
};

} // namespace nullcurve
