#include "nullcurve/poly.hpp"

#include <cmath>

namespace nullcurve {

Poly2 Poly2::constant(Complex c) { return Poly2().add(0, 0, c); }
Poly2 Poly2::z() { return Poly2().add(1, 0, 1.0); }
Poly2 Poly2::x() { return Poly2().add(1, 0, 0.5).add(0, 1, 0.5); }
Poly2 Poly2::y() { return Poly2().add(1, 0, Complex(0, -0.5)).add(0, 1, Complex(0, 0.5)); }

Poly2& Poly2::add(int zpow, int zbarpow, Complex coeff) {
  terms_.push_back({zpow, zbarpow, coeff});
  return *this;
}

namespace {
Complex ipow(Complex z, int k) {
  Complex r = 1.0;
  for (int i = 0; i < k; ++i) r *= z;
  return r;
}
} // namespace

Complex Poly2::eval(Complex z) const {
  Complex zb = std::conj(z), r = 0.0;
  for (const auto& t : terms_) r += t.coeff * ipow(z, t.zpow) * ipow(zb, t.zbarpow);
  return r;
}

Complex Poly2::dz(Complex z) const {
  Complex zb = std::conj(z), r = 0.0;
  for (const auto& t : terms_)
    if (t.zpow > 0)
      r += t.coeff * double(t.zpow) * ipow(z, t.zpow - 1) * ipow(zb, t.zbarpow);
  return r;
}

Complex Poly2::dzbar(Complex z) const {
  Complex zb = std::conj(z), r = 0.0;
  for (const auto& t : terms_)
    if (t.zbarpow > 0)
      r += t.coeff * double(t.zbarpow) * ipow(z, t.zpow) * ipow(zb, t.zbarpow - 1);
  return r;
}

LaurentLog& LaurentLog::add(int power, Complex coeff) {
  terms_.emplace_back(power, coeff);
  return *this;
}

LaurentLog& LaurentLog::add_log(Complex coeff) {
  log_coeff_ += coeff;
  return *this;
}

Complex LaurentLog::eval(Complex z) const {
  Complex r = 0.0;
  for (const auto& [k, c] : terms_) r += c * std::pow(z, k);
  if (log_coeff_ != Complex(0.0)) r += log_coeff_ * std::log(z);
  return r;
}

Complex LaurentLog::deriv(Complex z) const {
  Complex r = 0.0;
  for (const auto& [k, c] : terms_)
    if (k != 0) r += c * double(k) * std::pow(z, k - 1);
  if (log_coeff_ != Complex(0.0)) r += log_coeff_ / z;
  return r;
}

} // namespace nullcurve
