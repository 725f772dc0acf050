#pragma once

#include "nullcurve/types.hpp"
#include "nullcurve/util.hpp"

#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace nullcurve {

enum class GroupKind { SpecialLinear, GeneralLinear, AbelianDiagonal };
enum class SigmaKind { NegAdjoint, EntryConj, AbelianImag };

/// Bilinear form on the real form: either g(a,b) = c·Tr(ab) or an explicit
/// symmetric Gram matrix in h_basis coordinates.
struct FormSpec {
  std::optional<double> trace_coeff;
  std::optional<RMat> gram;
  static FormSpec trace(double c) { return {c, std::nullopt}; }
  static FormSpec explicit_gram(RMat g) { return {std::nullopt, std::move(g)}; }
};

/// A complex matrix group G with an anti-linear involution σ of its Lie
/// algebra; the fixed set of σ is the Lie algebra of the real form H, and g
/// is a non-degenerate Ad_H-invariant symmetric bilinear form on it.
///
/// The abelian kind realizes the additive group Cⁿ as diagonal matrices; all
/// group operations below dispatch on that (compose = sum, exp = identity).
class RealFormGroup {
public:
  RealFormGroup(int n, GroupKind gk, SigmaKind sk, std::vector<Mat> h_basis,
                FormSpec form, std::vector<RVec> lattice = {});

  int n() const { return n_; }
  GroupKind group_kind() const { return group_kind_; }
  SigmaKind sigma_kind() const { return sigma_kind_; }
  bool abelian() const { return group_kind_ == GroupKind::AbelianDiagonal; }
  int dim_h() const { return static_cast<int>(h_basis_.size()); }
  const std::vector<Mat>& h_basis() const { return h_basis_; }
  const std::vector<RVec>& lattice() const { return lattice_; }
  const RMat& form_gram() const { return gram_; }

  // --- involutions ---------------------------------------------------------
  Mat sigma(const Mat& X) const;        // anti-linear algebra involution
  Mat sigma_group(const Mat& S) const;  // its group-level counterpart
  double realform_residual(const Mat& X) const;   // ‖X − σX‖
  double h_membership_residual(const Mat& h) const; // distance of a group elt to H

  // --- group operations ----------------------------------------------------
  Mat identity() const;
  Mat compose(const Mat& a, const Mat& b) const;
  Mat inverse(const Mat& S) const;
  Mat group_exp(const Mat& X) const;
  Mat group_log(const Mat& S) const;     // principal branch; LogBranchFailure
  Mat adjoint_action(const Mat& S, const Mat& X) const; // Ad_S X
  Mat maurer_cartan(const Mat& f, const Mat& df) const; // η_f of a velocity
  double membership_residual(const Mat& S) const;
  double group_distance(const Mat& a, const Mat& b) const; // ‖a∘b⁻¹ − e‖-style

  // --- splitting g = h ⊕ ih ------------------------------------------------
  /// X = theta − i·alpha with both parts σ-fixed;
  /// theta = (X+σX)/2, alpha = i(X−σX)/2.
  std::pair<Mat, Mat> split(const Mat& X) const;

  // --- bilinear forms ------------------------------------------------------
  Complex formC(const Mat& A, const Mat& B) const; // C-bilinear extension
  double form(const Mat& a, const Mat& b) const;   // throws NotInRealForm
  Complex killing(const Mat& A, const Mat& B) const; // brute-force Tr(ad∘ad)

  // --- canonical orientation of 3-dimensional simple h -----------------------
  /// Sign of det(u,v,w) against a reference basis (E_i, E_j, [E_i,E_j]) with
  /// (E_i,E_j) spanning a space-like plane; 0 if degenerate.
  int orientation_sign(const Mat& u, const Mat& v, const Mat& w) const;

  // --- coordinates in h_basis ----------------------------------------------
  CVec coords(const Mat& A) const;       // complex coords (h_basis spans g over C)
  RVec coords_real(const Mat& a) const;  // for σ-fixed elements
  Mat from_coords(const CVec& c) const;

  /// Nearest-lattice-point reduction (Babai rounding) of a real vector.
  RVec lattice_reduce(const RVec& x) const;

  /// Random elements for sampling-based invariants.
  Mat random_h_element(Rng& rng, double scale = 1.0) const;
  Mat random_g_element(Rng& rng, double scale = 1.0) const;

  /// Checks the constructor invariants (involution, anti-linearity, Lie map,
  /// σ-fixed independent basis, g symmetric/non-degenerate/ad- and
  /// Ad-invariant). Throws on violation.
  void validate(Rng& rng) const;

private:
  int n_;
  GroupKind group_kind_;
  SigmaKind sigma_kind_;
  std::vector<Mat> h_basis_;
  FormSpec form_spec_;
  std::vector<RVec> lattice_;
  RMat gram_;                 // g(E_i, E_j)
  Mat basis_flat_;            // n² × k, columns = vec(E_j)
  Eigen::ColPivHouseholderQR<Mat> basis_qr_;
  RMat orient_ref_inv_;       // inverse of reference-basis coordinates (dim 3 only)
  bool has_orientation_ = false;
};

using GroupPtr = std::shared_ptr<const RealFormGroup>;

/// Standard h-basis for a (group kind, σ kind) combination; throws
/// WrongDimension for unsupported combinations.
std::vector<Mat> standard_h_basis(int n, GroupKind gk, SigmaKind sk);

GroupPtr make_group(int n, GroupKind gk, SigmaKind sk, FormSpec form,
                    std::vector<RVec> lattice = {});

/// Standard constructions used by the corpus and the CLI.
GroupPtr make_sl2c_su2(double trace_coeff = -2.0);
GroupPtr make_sl2c_sl2r(double trace_coeff = 2.0);
GroupPtr make_gl_un(int n, double trace_coeff = -1.0);
GroupPtr make_gl_glnr(int n, double trace_coeff = -1.0);
GroupPtr make_abelian(int n, std::vector<RVec> lattice = {});

} // namespace nullcurve
