#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "qplane/scalars.hpp"

namespace qplane {

class PresentationMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two invertible generators with G1 G2 = Q G2 G1, Q = r^k.
struct Presentation {
  std::string g1;
  std::string g2;
  int q_r_power = 0;

  /// x y = q~ y x
  static Presentation xy() { return {"x", "y", 1}; }
  /// u v = q v u
  static Presentation uv() { return {"u", "v", -4}; }

  ScalarExpr commutation_unit() const { return ScalarExpr::var(Var::r, q_r_power); }
  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Finite sum of normal-ordered Laurent monomials c G1^a G2^b.
class NCElement {
 public:
  using Key = std::pair<int, int>;

  NCElement() : NCElement(Presentation::uv()) {}
  explicit NCElement(Presentation p) : pres_(std::move(p)) {}
  NCElement(Presentation p, const ScalarExpr& c);

  static NCElement monomial(const Presentation& p, int a, int b, const ScalarExpr& c = ScalarExpr(1));
  static NCElement u(int power = 1) { return monomial(Presentation::uv(), power, 0); }
  static NCElement v(int power = 1) { return monomial(Presentation::uv(), 0, power); }
  static NCElement x(int power = 1) { return monomial(Presentation::xy(), power, 0); }
  static NCElement y(int power = 1) { return monomial(Presentation::xy(), 0, power); }

  const Presentation& presentation() const { return pres_; }
  const std::map<Key, ScalarExpr>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// Coefficient of G1^a G2^b (zero if absent).
  ScalarExpr coefficient(int a, int b) const;

  NCElement operator-() const;
  NCElement& operator+=(const NCElement& o);
  NCElement& operator-=(const NCElement& o);
  NCElement& operator*=(const NCElement& o) { return *this = *this * o; }
  friend NCElement operator+(NCElement a, const NCElement& b) { return a += b; }
  friend NCElement operator-(NCElement a, const NCElement& b) { return a -= b; }
  friend NCElement operator*(const NCElement& a, const NCElement& b);
  friend NCElement operator*(const ScalarExpr& c, const NCElement& a) { return a.scaled(c); }
  friend bool operator==(const NCElement& a, const NCElement& b);

  NCElement scaled(const ScalarExpr& c) const;
  /// Integer power; negative powers only for monomials.
  NCElement pow(int n) const;
  /// Inverse of a monomial; throws for sums.
  NCElement monomial_inverse() const;

  template <class F>
  NCElement map_coefficients(F&& f) const {
    NCElement out(pres_);
    for (const auto& [k, c] : terms_) out.add_term(k, f(c));
    return out;
  }

  /// `coeff * u^a * v^b + ...`, or `0`.
  std::string to_string() const;

 private:
  Presentation pres_;
  std::map<Key, ScalarExpr> terms_;

  void add_term(const Key& k, const ScalarExpr& c);
  void require_same(const NCElement& o) const;
};

NCElement commutator(const NCElement& a, const NCElement& b);

enum class StarConvention {
  /// x* = x, y* = y; on (u,v) this gives u* = q^-1 u, v* = q^-1 v.
  XyInduced,
  /// u* = u, v* = v.
  UvHermitian,
};

/// Antimultiplicative conjugate-linear involution.
NCElement star(const NCElement& a, StarConvention conv);

/// u -> eps2 q~^-2 x^2, v -> eps1 x^2 y^-2.
NCElement embed_uv_in_xy(const NCElement& a, int eps1, int eps2);

/// The inner derivations lambda_1 = v^-1/(1-q^-1), lambda_2 = -u^-1/(1-q^-1).
NCElement lambda1();
NCElement lambda2();

/// t = u + v and r = u - v (the common 1/sqrt(2) normalization is dropped;
/// every relation they enter is homogeneous).
std::pair<NCElement, NCElement> tr_generators();

}  // namespace qplane
