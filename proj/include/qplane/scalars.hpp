#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qplane/gauss_rational.hpp"
#include "qplane/polynomial.hpp"

namespace qplane {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Element of the coefficient field Q(i)(r, h, zeta, ...): a reduced fraction
/// of polynomials with a monic denominator, so that equal values have equal
/// representations.
///
/// The deformation parameter is stored through r = q~ only; q = r^-4 and
/// q^(1/2) = r^-2.
class ScalarExpr {
 public:
  ScalarExpr() : den_(1) {}
  ScalarExpr(long n) : num_(GaussRational(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
  ScalarExpr(GaussRational c) : num_(std::move(c)), den_(1) {}  // NOLINT(google-explicit-constructor)
  ScalarExpr(const Poly& numerator, const Poly& denominator);

  static ScalarExpr fraction(long num, long den) { return {GaussRational::fraction(num, den)}; }
  static ScalarExpr i() { return {GaussRational::imaginary_unit()}; }
  static ScalarExpr var(Var v, int power = 1);
  /// q = r^-4
  static ScalarExpr q(int power = 1) { return var(Var::r, -4 * power); }
  /// q^(k/2) = r^(-2k)
  static ScalarExpr q_half(int k = 1) { return var(Var::r, -2 * k); }
  static ScalarExpr zeta() { return var(Var::z); }
  static ScalarExpr h() { return var(Var::h); }

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_constant() && num_.is_constant() && num_.constant_term().is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool depends_on(Var v) const { return num_.depends_on(v) || den_.depends_on(v); }

  ScalarExpr operator-() const;
  ScalarExpr& operator+=(const ScalarExpr& o);
  ScalarExpr& operator-=(const ScalarExpr& o) { return *this += -o; }
  ScalarExpr& operator*=(const ScalarExpr& o);
  ScalarExpr& operator/=(const ScalarExpr& o) { return *this *= o.inverse(); }
  friend ScalarExpr operator+(ScalarExpr a, const ScalarExpr& b) { return a += b; }
  friend ScalarExpr operator-(ScalarExpr a, const ScalarExpr& b) { return a -= b; }
  friend ScalarExpr operator*(ScalarExpr a, const ScalarExpr& b) { return a *= b; }
  friend ScalarExpr operator/(ScalarExpr a, const ScalarExpr& b) { return a /= b; }
  friend bool operator==(const ScalarExpr& a, const ScalarExpr& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  ScalarExpr inverse() const;
  ScalarExpr pow(int n) const;

  /// Field involution: i -> -i, r -> 1/r, every other variable fixed.
  ScalarExpr star() const;
  /// r -> 1/r without conjugating coefficients (q -> 1/q).
  ScalarExpr invert_q() const;
  ScalarExpr substitute(Var v, const ScalarExpr& value) const;
  ScalarExpr derivative(Var v) const;

  /// Degree in v of numerator minus degree of denominator.
  int degree_balance(Var v) const { return num_.degree(v) - den_.degree(v); }
  /// Limit as v -> infinity when it is finite; empty when it diverges.
  std::optional<ScalarExpr> limit_at_infinity(Var v) const;

  /// Numeric value; throws PoleError if the denominator vanishes there.
  std::complex<double> evaluate(std::span<const std::complex<double>, kVarCount> at) const;

  std::string to_string() const;

 private:
  Poly num_;
  Poly den_;
};

/// Point on the unit circle for r (stored as an angle, so |r| = 1 exactly)
/// together with real values for the other variables.
struct UnitEval {
  double r_angle = 0.0;
  double h = 0.0;
  double z = 0.0;
  double u = 1.0;
  double v = 1.0;

  /// r = e^{i angle}.
  static UnitEval from_angle(double angle) { return UnitEval{angle}; }
  /// q = e^{2 pi i eta}, i.e. r = e^{-i pi eta / 2}.
  static UnitEval from_eta(double eta);
  /// Same as from_eta but rejects points with r^4 = 1.
  static UnitEval deformed(double eta);

  std::complex<double> r() const { return std::polar(1.0, r_angle); }
  std::complex<double> q() const { return std::pow(r(), -4); }
  std::array<std::complex<double>, kVarCount> values() const;
};

std::complex<double> eval(const ScalarExpr& a, const UnitEval& at);

/// Parse a scalar expression.
///
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := ['-'] base ('^' exponent)?
///   base   := int | 'i' | 'r' | 'q' | 'h' | 'zeta' | '(' expr ')'
///   exponent := ['-'] int | '(' ['-'] int ')' | '(' ['-'] int '/' '2' ')'
///
/// Half-integer exponents are only accepted on `q`.
ScalarExpr parse_scalar(std::string_view text);

}  // namespace qplane
