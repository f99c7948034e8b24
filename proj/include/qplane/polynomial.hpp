#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qplane/gauss_rational.hpp"

namespace qplane {

/// Formal variables of the coefficient field.
///
/// `r` is the deformation parameter (q = r^-4), `h` the jordanian parameter and
/// `z` the family parameter. The remaining variables only appear in
/// commutative-limit computations: `u`, `v` are the commuting plane
/// coordinates, `up`, `vp` their jordanian counterparts and `h0` the formal
/// jordanian scale.
enum class Var : std::uint8_t { r, h, z, u, v, up, vp, h0 };
inline constexpr std::size_t kVarCount = 8;

std::string_view var_name(Var v);

using Exponents = std::array<std::int16_t, kVarCount>;

struct Term {
  Exponents exp{};
  GaussRational coeff;
};

/// Sparse multivariate polynomial over Q(i) with non-negative exponents.
/// Terms are kept in strictly decreasing lexicographic order of exponents and
/// never carry a zero coefficient.
class Poly {
 public:
  Poly() = default;
  Poly(GaussRational c);  // NOLINT(google-explicit-constructor)

  static Poly monomial(const Exponents& e, GaussRational c = 1);
  static Poly variable(Var v, int power = 1);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool depends_on(Var v) const;
  const Term& leading_term() const { return terms_.front(); }
  /// Constant term, or zero.
  GaussRational constant_term() const;

  int degree(Var v) const;
  /// Coefficient of v^k as a polynomial in the remaining variables.
  Poly coefficient(Var v, int k) const;
  /// Componentwise minimum exponent over all terms.
  Exponents min_exponents() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);

  Poly scaled(const GaussRational& c) const;
  /// Multiply by the monomial with exponents `e` (negative entries divide; the
  /// caller guarantees the result stays polynomial).
  Poly shifted(const Exponents& e, int sign = 1) const;
  /// Quotient when `divisor` divides this exactly, otherwise empty.
  bool divide_exact(const Poly& divisor, Poly& quotient) const;
  /// Normalized so that the leading coefficient is 1.
  Poly monic() const;
  Poly conj_coefficients() const;
  /// Replace v^k by v^(d-k) where d = degree(v).
  Poly reversed_in(Var v) const;

  std::complex<double> evaluate(std::span<const std::complex<double>, kVarCount> at) const;

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
  friend Poly gcd(const Poly& a, const Poly& b);
};

/// Greatest common divisor, normalized to be monic (1 when coprime).
Poly gcd(const Poly& a, const Poly& b);

}  // namespace qplane
