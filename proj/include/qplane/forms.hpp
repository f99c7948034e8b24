#pragma once

#include <array>
#include <vector>

#include "qplane/check_result.hpp"
#include "qplane/matrix.hpp"
#include "qplane/ncpoly.hpp"

namespace qplane {

/// f1 th1 + f2 th2. The frame commutes with the algebra, so coefficients are
/// kept on the left.
struct OneForm {
  NCElement f1;
  NCElement f2;

  static OneForm zero(const Presentation& p) { return {NCElement(p), NCElement(p)}; }
  static OneForm frame(const Presentation& p, int i);

  const NCElement& operator[](int i) const { return i == 1 ? f1 : f2; }
  bool is_zero() const { return f1.is_zero() && f2.is_zero(); }

  OneForm operator-() const { return {-f1, -f2}; }
  OneForm& operator+=(const OneForm& o);
  OneForm& operator-=(const OneForm& o);
  friend OneForm operator+(OneForm a, const OneForm& b) { return a += b; }
  friend OneForm operator-(OneForm a, const OneForm& b) { return a -= b; }
  friend OneForm operator*(const NCElement& f, const OneForm& a) { return {f * a.f1, f * a.f2}; }
  friend OneForm operator*(const OneForm& a, const NCElement& f) { return {a.f1 * f, a.f2 * f}; }
  friend bool operator==(const OneForm& a, const OneForm& b) { return a.f1 == b.f1 && a.f2 == b.f2; }

  /// `f1 [th1] + f2 [th2]`
  std::string to_string() const;
};

/// g th1 th2.
struct TwoForm {
  NCElement g;

  bool is_zero() const { return g.is_zero(); }
  TwoForm operator-() const { return {-g}; }
  TwoForm& operator+=(const TwoForm& o) { g += o.g; return *this; }
  TwoForm& operator-=(const TwoForm& o) { g -= o.g; return *this; }
  friend TwoForm operator+(TwoForm a, const TwoForm& b) { return a += b; }
  friend TwoForm operator-(TwoForm a, const TwoForm& b) { return a -= b; }
  friend TwoForm operator*(const NCElement& f, const TwoForm& a) { return {f * a.g}; }
  friend TwoForm operator*(const TwoForm& a, const NCElement& f) { return {a.g * f}; }
  friend bool operator==(const TwoForm& a, const TwoForm& b) { return a.g == b.g; }

  /// `g [th1 th2]`
  std::string to_string() const;
};

/// Exterior product, reduced with th1 th1 = th2 th2 = 0, th2 th1 = -q^-1 th1 th2.
TwoForm wedge(const OneForm& a, const OneForm& b);

/// Wedge projector P (4x4, index pairs flattened as 11,12,21,22).
ScalarMatrix wedge_projector();
/// C = 1 - 2P.
ScalarMatrix c_matrix();

/// Frame calculus on a two-generator algebra: df = th^i [lambda_i, f].
class Calculus {
 public:
  /// The calculus on the u,v algebra.
  static const Calculus& uv();
  /// The same calculus carried to x,y through u -> eps2 q~^-2 x^2,
  /// v -> eps1 x^2 y^-2.
  static Calculus xy(int eps1, int eps2);

  const Presentation& presentation() const { return pres_; }
  const NCElement& lambda(int i) const { return i == 1 ? lambda_[0] : lambda_[1]; }

  OneForm d(const NCElement& f) const;
  TwoForm d(const OneForm& a) const;
  /// d th^i, derived on the u,v side from th1 = q^-1 v u^-1 du, th2 = u v^-1 dv.
  const TwoForm& dtheta(int i) const { return i == 1 ? dtheta_[0] : dtheta_[1]; }
  /// theta = -lambda_i th^i
  OneForm theta() const;

  /// Structure elements C^i_jk (j,k in 1..2) from d th^i = -1/2 C^i_jk th^j th^k,
  /// with C^i_21 = -q C^i_12 and C^i_12 = -(coefficient of d th^i).
  NCElement structure_element(int i, int j, int k) const;

  OneForm star(const OneForm& a) const;
  NCElement star(const NCElement& f) const { return qplane::star(f, StarConvention::XyInduced); }

 private:
  Calculus(Presentation p, std::array<NCElement, 2> lambda, std::array<TwoForm, 2> dtheta)
      : pres_(std::move(p)), lambda_(std::move(lambda)), dtheta_(std::move(dtheta)) {}

  Presentation pres_;
  std::array<NCElement, 2> lambda_;
  std::array<TwoForm, 2> dtheta_;
};

/// C^1_12 = (q^-1 - 1) lambda_2, C^2_12 = (q^-1 - 1) lambda_1.
NCElement expected_structure_element(int i);

/// Commutation relations between coordinates and their differentials in both
/// presentations, each as lhs - rhs.
std::vector<CheckResult> check_wz_relations(int eps1, int eps2);

/// du dv expressed on th1 th2.
TwoForm volume_form();

/// Matrix form of the relations for X = (t, r), Xi = (dt, dr) with
/// Q = [[c, s], [s, c]], c = (q^(1/2) + q^(-1/2))/2 and
/// s = orientation * (q^(1/2) - q^(-1/2))/2. Results, in order: the quadratic
/// relation X^t Q sigma2 X = 0, the coordinate-differential relation in its
/// literal outer-product reading, the same relation with the form index
/// placed consistently (X_k Xi_l = (Q^2)_lm Xi_m X_k), and Xi^t Q Xi = 0.
std::vector<CheckResult> check_xy_relations(int orientation);

}  // namespace qplane
