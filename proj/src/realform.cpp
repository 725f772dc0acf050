#include "nullcurve/realform.hpp"

#include "nullcurve/errors.hpp"
#include "nullcurve/matfun.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace nullcurve {

RealFormGroup::RealFormGroup(int n, GroupKind gk, SigmaKind sk, std::vector<Mat> h_basis,
                             FormSpec form, std::vector<RVec> lattice)
    : n_(n),
      group_kind_(gk),
      sigma_kind_(sk),
      h_basis_(std::move(h_basis)),
      form_spec_(std::move(form)),
      lattice_(std::move(lattice)) {
  const int k = dim_h();
  if (k == 0) throw WrongDimension("real form needs a nonempty h_basis");

  basis_flat_.resize(n_ * n_, k);
  for (int j = 0; j < k; ++j)
    basis_flat_.col(j) = Eigen::Map<const CVec>(h_basis_[j].data(), n_ * n_);
  basis_qr_.compute(basis_flat_);

  gram_.resize(k, k);
  if (form_spec_.gram) {
    if (form_spec_.gram->rows() != k || form_spec_.gram->cols() != k)
      throw WrongDimension("explicit Gram matrix size must match h_basis");
    gram_ = *form_spec_.gram;
  } else {
    const double c = form_spec_.trace_coeff.value_or(1.0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j <= i; ++j)
        gram_(i, j) = gram_(j, i) = (c * (h_basis_[i] * h_basis_[j]).trace()).real();
  }

  // Reference basis for the canonical orientation: the first pair (E_i, E_j)
  // spanning a space-like plane, completed by [E_i, E_j].
  if (k == 3 && !abelian()) {
    for (int i = 0; i < 3 && !has_orientation_; ++i) {
      for (int j = i + 1; j < 3 && !has_orientation_; ++j) {
        const double gii = gram_(i, i), gjj = gram_(j, j), gij = gram_(i, j);
        if (gii > 0 && gii * gjj - gij * gij > 0) {
          Mat br = h_basis_[i] * h_basis_[j] - h_basis_[j] * h_basis_[i];
          RMat ref(3, 3);
          ref.col(0) = coords_real(h_basis_[i]);
          ref.col(1) = coords_real(h_basis_[j]);
          ref.col(2) = coords_real(br);
          if (std::abs(ref.determinant()) > 1e-12) {
            orient_ref_inv_ = ref.inverse();
            has_orientation_ = true;
          }
        }
      }
    }
  }
}

Mat RealFormGroup::sigma(const Mat& X) const {
  switch (sigma_kind_) {
    case SigmaKind::NegAdjoint: return -X.adjoint();
    case SigmaKind::EntryConj: return X.conjugate();
    case SigmaKind::AbelianImag: return -X.conjugate();
  }
  return X;
}

Mat RealFormGroup::sigma_group(const Mat& S) const {
  switch (sigma_kind_) {
    case SigmaKind::NegAdjoint: return safe_inverse(S.adjoint());
    case SigmaKind::EntryConj: return S.conjugate();
    case SigmaKind::AbelianImag: return -S.conjugate();
  }
  return S;
}

double RealFormGroup::realform_residual(const Mat& X) const { return (X - sigma(X)).norm(); }

double RealFormGroup::h_membership_residual(const Mat& h) const {
  if (abelian()) return lattice_reduce(h.diagonal().real()).norm();
  return (h - sigma_group(h)).norm();
}

Mat RealFormGroup::identity() const {
  return abelian() ? Mat(Mat::Zero(n_, n_)) : Mat(Mat::Identity(n_, n_));
}

Mat RealFormGroup::compose(const Mat& a, const Mat& b) const {
  return abelian() ? Mat(a + b) : Mat(a * b);
}

Mat RealFormGroup::inverse(const Mat& S) const {
  return abelian() ? Mat(-S) : safe_inverse(S);
}

Mat RealFormGroup::group_exp(const Mat& X) const { return abelian() ? X : expm(X); }

Mat RealFormGroup::group_log(const Mat& S) const {
  return abelian() ? S : logm_principal(S);
}

Mat RealFormGroup::adjoint_action(const Mat& S, const Mat& X) const {
  return abelian() ? X : Mat(S * X * safe_inverse(S));
}

Mat RealFormGroup::maurer_cartan(const Mat& f, const Mat& df) const {
  return abelian() ? df : Mat(safe_inverse(f) * df);
}

double RealFormGroup::membership_residual(const Mat& S) const {
  switch (group_kind_) {
    case GroupKind::SpecialLinear: return std::abs(S.determinant() - Complex(1.0));
    case GroupKind::GeneralLinear: {
      Eigen::JacobiSVD<Mat> svd(S);
      const auto& sv = svd.singularValues();
      return (sv(sv.size() - 1) <= 1e-10 * std::max(1.0, sv(0))) ? 1.0 : 0.0;
    }
    case GroupKind::AbelianDiagonal: {
      Mat off = S;
      off.diagonal().setZero();
      return off.norm();
    }
  }
  return 0.0;
}

double RealFormGroup::group_distance(const Mat& a, const Mat& b) const {
  return (a - b).norm();
}

std::pair<Mat, Mat> RealFormGroup::split(const Mat& X) const {
  Mat sX = sigma(X);
  Mat theta = 0.5 * (X + sX);
  Mat alpha = 0.5 * kI * (X - sX);
  return {theta, alpha};
}

Complex RealFormGroup::formC(const Mat& A, const Mat& B) const {
  if (form_spec_.trace_coeff)
    return *form_spec_.trace_coeff * (A * B).trace();
  CVec ca = coords(A), cb = coords(B);
  return (ca.transpose() * gram_.cast<Complex>() * cb).value();
}

double RealFormGroup::form(const Mat& a, const Mat& b) const {
  const double tol = 1e-8 * (1.0 + a.norm() + b.norm());
  if (realform_residual(a) > tol || realform_residual(b) > tol)
    throw NotInRealForm("form(): argument is not σ-fixed");
  return formC(a, b).real();
}

Complex RealFormGroup::killing(const Mat& A, const Mat& B) const {
  const int k = dim_h();
  if (abelian()) return 0.0;
  Mat adA(k, k), adB(k, k);
  for (int j = 0; j < k; ++j) {
    adA.col(j) = coords(A * h_basis_[j] - h_basis_[j] * A);
    adB.col(j) = coords(B * h_basis_[j] - h_basis_[j] * B);
  }
  return (adA * adB).trace();
}

int RealFormGroup::orientation_sign(const Mat& u, const Mat& v, const Mat& w) const {
  if (!has_orientation_)
    throw WrongDimension("orientation_sign needs a 3-dimensional simple real form");
  RMat m(3, 3);
  m.col(0) = orient_ref_inv_ * coords_real(u);
  m.col(1) = orient_ref_inv_ * coords_real(v);
  m.col(2) = orient_ref_inv_ * coords_real(w);
  double scale = 1.0;
  for (int j = 0; j < 3; ++j) {
    double cn = m.col(j).norm();
    if (cn < 1e-14) return 0;
    scale *= cn;
  }
  const double d = m.determinant() / scale;
  if (std::abs(d) < 1e-10) return 0;
  return d > 0 ? 1 : -1;
}

CVec RealFormGroup::coords(const Mat& A) const {
  return basis_qr_.solve(Eigen::Map<const CVec>(A.data(), n_ * n_));
}

RVec RealFormGroup::coords_real(const Mat& a) const { return coords(a).real(); }

Mat RealFormGroup::from_coords(const CVec& c) const {
  CVec flat = basis_flat_ * c;
  return Eigen::Map<const Mat>(flat.data(), n_, n_);
}

RVec RealFormGroup::lattice_reduce(const RVec& x) const {
  if (lattice_.empty()) return x;
  RMat L(x.size(), static_cast<Eigen::Index>(lattice_.size()));
  for (std::size_t j = 0; j < lattice_.size(); ++j) L.col(static_cast<Eigen::Index>(j)) = lattice_[j];
  RVec c = L.colPivHouseholderQr().solve(x);
  for (Eigen::Index i = 0; i < c.size(); ++i) c[i] = std::round(c[i]);
  return x - L * c;
}

Mat RealFormGroup::random_h_element(Rng& rng, double scale) const {
  Mat a = Mat::Zero(n_, n_);
  for (const Mat& e : h_basis_) a += gauss(rng, scale) * e;
  return a;
}

Mat RealFormGroup::random_g_element(Rng& rng, double scale) const {
  Mat a = Mat::Zero(n_, n_);
  for (const Mat& e : h_basis_) a += Complex(gauss(rng, scale), gauss(rng, scale)) * e;
  return a;
}

void RealFormGroup::validate(Rng& rng) const {
  const int k = dim_h();
  for (int trial = 0; trial < 8; ++trial) {
    Mat x = random_g_element(rng), y = random_g_element(rng);
    if ((sigma(sigma(x)) - x).norm() > 1e-12 * (1 + x.norm()))
      throw Error("σ is not an involution");
    if ((sigma(kI * x) + kI * sigma(x)).norm() > 1e-12 * (1 + x.norm()))
      throw Error("σ is not anti-linear");
    Mat br = x * y - y * x;
    Mat sbr = sigma(x) * sigma(y) - sigma(y) * sigma(x);
    if ((sigma(br) - sbr).norm() > 1e-10 * (1 + br.norm()))
      throw Error("σ is not a Lie algebra map");
  }
  for (const Mat& e : h_basis_)
    if (realform_residual(e) > 1e-12 * (1 + e.norm()))
      throw NotInRealForm("h_basis element is not σ-fixed");

  // R-linear independence of the basis.
  RMat real_gram(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      real_gram(i, j) = (h_basis_[i].conjugate().cwiseProduct(h_basis_[j])).sum().real();
  Eigen::JacobiSVD<RMat> bsvd(real_gram);
  if (bsvd.singularValues()(k - 1) < 1e-12 * bsvd.singularValues()(0))
    throw Error("h_basis is not linearly independent over R");

  if ((gram_ - gram_.transpose()).norm() > 1e-12 * (1 + gram_.norm()))
    throw Error("g is not symmetric");
  Eigen::JacobiSVD<RMat> gsvd(gram_);
  if (gsvd.singularValues()(k - 1) <= 1e-12)
    throw Error("g is degenerate");

  // ad-invariance over basis triples.
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c) {
        Mat za = h_basis_[a] * h_basis_[b] - h_basis_[b] * h_basis_[a];
        Mat zc = h_basis_[a] * h_basis_[c] - h_basis_[c] * h_basis_[a];
        double r = form(za, h_basis_[c]) + form(h_basis_[b], zc);
        if (std::abs(r) > 1e-10) throw Error("g is not ad-invariant");
      }

  // Ad-invariance for sampled group elements of H.
  for (int trial = 0; trial < 5; ++trial) {
    Mat z = random_h_element(rng, 0.4);
    Mat h = group_exp(z);
    Mat a = random_h_element(rng), b = random_h_element(rng);
    Mat Aa = adjoint_action(h, a), Ab = adjoint_action(h, b);
    if (std::abs(form(Aa, Ab) - form(a, b)) > 1e-9 * (1 + std::abs(form(a, b))))
      throw Error("g is not Ad_H-invariant");
  }
}

// --- standard constructions --------------------------------------------------

namespace {

Mat unit(int n, int i, int j) {
  Mat m = Mat::Zero(n, n);
  m(i, j) = 1.0;
  return m;
}

std::vector<Mat> basis_un(int n) {
  std::vector<Mat> b;
  for (int i = 0; i < n; ++i) b.push_back(kI * unit(n, i, i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      b.push_back(unit(n, i, j) - unit(n, j, i));
      b.push_back(kI * (unit(n, i, j) + unit(n, j, i)));
    }
  return b;
}

std::vector<Mat> basis_glnr(int n) {
  std::vector<Mat> b;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b.push_back(unit(n, i, j));
  return b;
}

std::vector<Mat> basis_su2() {
  Mat x1(2, 2), x2(2, 2), x3(2, 2);
  x1 << 0.5 * kI, 0, 0, -0.5 * kI;
  x2 << 0, 0.5, -0.5, 0;
  x3 << 0, 0.5 * kI, 0.5 * kI, 0;
  return {x1, x2, x3};
}

std::vector<Mat> basis_sl2r() {
  Mat e1(2, 2), e2(2, 2), e3(2, 2);
  e1 << 0.5, 0, 0, -0.5;
  e2 << 0, 0.5, 0.5, 0;
  e3 << 0, 0.5, -0.5, 0;
  return {e1, e2, e3};
}

std::vector<Mat> basis_abelian(int n) {
  std::vector<Mat> b;
  for (int i = 0; i < n; ++i) b.push_back(kI * unit(n, i, i));
  return b;
}

} // namespace

std::vector<Mat> standard_h_basis(int n, GroupKind gk, SigmaKind sk) {
  if (gk == GroupKind::AbelianDiagonal && sk == SigmaKind::AbelianImag)
    return basis_abelian(n);
  if (gk == GroupKind::GeneralLinear && sk == SigmaKind::NegAdjoint) return basis_un(n);
  if (gk == GroupKind::GeneralLinear && sk == SigmaKind::EntryConj) return basis_glnr(n);
  if (gk == GroupKind::SpecialLinear && sk == SigmaKind::NegAdjoint && n == 2)
    return basis_su2();
  if (gk == GroupKind::SpecialLinear && sk == SigmaKind::EntryConj && n == 2)
    return basis_sl2r();
  throw WrongDimension("no standard h-basis for this group/sigma combination");
}

GroupPtr make_group(int n, GroupKind gk, SigmaKind sk, FormSpec form,
                    std::vector<RVec> lattice) {
  return std::make_shared<const RealFormGroup>(n, gk, sk, standard_h_basis(n, gk, sk),
                                               std::move(form), std::move(lattice));
}

GroupPtr make_sl2c_su2(double trace_coeff) {
  return make_group(2, GroupKind::SpecialLinear, SigmaKind::NegAdjoint,
                    FormSpec::trace(trace_coeff));
}

GroupPtr make_sl2c_sl2r(double trace_coeff) {
  return make_group(2, GroupKind::SpecialLinear, SigmaKind::EntryConj,
                    FormSpec::trace(trace_coeff));
}

GroupPtr make_gl_un(int n, double trace_coeff) {
  return make_group(n, GroupKind::GeneralLinear, SigmaKind::NegAdjoint,
                    FormSpec::trace(trace_coeff));
}

GroupPtr make_gl_glnr(int n, double trace_coeff) {
  return make_group(n, GroupKind::GeneralLinear, SigmaKind::EntryConj,
                    FormSpec::trace(trace_coeff));
}

GroupPtr make_abelian(int n, std::vector<RVec> lattice) {
  return make_group(n, GroupKind::AbelianDiagonal, SigmaKind::AbelianImag,
                    FormSpec::trace(-1.0), std::move(lattice));
}

} // namespace nullcurve
