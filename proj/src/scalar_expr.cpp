#include <cmath>
#include <numbers>

#include "qplane/scalars.hpp"

namespace qplane {

namespace {

Poly poly_derivative(const Poly& p, Var v) {
  const auto k = static_cast<std::size_t>(v);
  Poly out;
  for (const auto& t : p.terms()) {
    if (t.exp[k] == 0) continue;
    Exponents e = t.exp;
    --e[k];
    out += Poly::monomial(e, t.coeff * GaussRational(t.exp[k]));
  }
  return out;
}

double magnitude_scale(const Poly& p, std::span<const std::complex<double>, kVarCount> at) {
  double s = 0.0;
  for (const auto& t : p.terms()) {
    s += std::abs(Poly::monomial(t.exp, t.coeff).evaluate(at));
  }
  return s;
}

}  // namespace

ScalarExpr::ScalarExpr(const Poly& numerator, const Poly& denominator) {
  if (denominator.is_zero()) throw DivisionByZero("division by zero scalar");
  if (numerator.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Poly g = gcd(numerator, denominator);
  Poly n, d;
  if (g.is_constant()) {
    n = numerator;
    d = denominator;
  } else {
    numerator.divide_exact(g, n);
    denominator.divide_exact(g, d);
  }
  GaussRational lc_inv = d.leading_term().coeff.inverse();
  num_ = n.scaled(lc_inv);
  den_ = d.scaled(lc_inv);
}

ScalarExpr ScalarExpr::var(Var v, int power) {
  if (power >= 0) return {Poly::variable(v, power), Poly(1)};
  return {Poly(1), Poly::variable(v, -power)};
}

ScalarExpr ScalarExpr::operator-() const {
  ScalarExpr out = *this;
  out.num_ = -out.num_;
  return out;
}

ScalarExpr& ScalarExpr::operator+=(const ScalarExpr& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    *this = ScalarExpr(num_ + o.num_, den_);
    return *this;
  }
  if (den_.is_constant() && o.den_.is_constant()) {
    // both denominators are 1 after normalization
    num_ += o.num_;
    if (num_.is_zero()) den_ = Poly(1);
    return *this;
  }
  Poly g = gcd(den_, o.den_);
  Poly a_cof, b_cof;
  o.den_.divide_exact(g, b_cof);  // o.den / g
  den_.divide_exact(g, a_cof);    // den / g
  Poly n = num_ * b_cof + o.num_ * a_cof;
  Poly d = den_ * b_cof;
  *this = ScalarExpr(n, d);
  return *this;
}

ScalarExpr& ScalarExpr::operator*=(const ScalarExpr& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = ScalarExpr();
  if (o.is_constant()) {
    num_ = num_.scaled(o.num_.constant_term());
    return *this;
  }
  if (is_constant()) {
    GaussRational c = num_.constant_term();
    *this = o;
    num_ = num_.scaled(c);
    return *this;
  }
  // Cross-cancel so the product is already reduced.
  Poly g1 = gcd(num_, o.den_);
  Poly g2 = gcd(o.num_, den_);
  Poly a, b, c, d;
  num_.divide_exact(g1, a);
  o.den_.divide_exact(g1, d);
  o.num_.divide_exact(g2, c);
  den_.divide_exact(g2, b);
  Poly n = a * c;
  Poly dd = b * d;
  GaussRational lc_inv = dd.leading_term().coeff.inverse();
  num_ = n.scaled(lc_inv);
  den_ = dd.scaled(lc_inv);
  return *this;
}

ScalarExpr ScalarExpr::inverse() const {
  if (is_zero()) throw DivisionByZero("division by zero scalar");
  GaussRational lc_inv = num_.leading_term().coeff.inverse();
  ScalarExpr out;
  out.num_ = den_.scaled(lc_inv);
  out.den_ = num_.scaled(lc_inv);
  return out;
}

ScalarExpr ScalarExpr::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  ScalarExpr result(1);
  ScalarExpr base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

ScalarExpr ScalarExpr::star() const {
  // P(1/r) = rev(P)(r) / r^deg(P), coefficients conjugated.
  Poly n = num_.conj_coefficients().reversed_in(Var::r);
  Poly d = den_.conj_coefficients().reversed_in(Var::r);
  const int shift = den_.degree(Var::r) - num_.degree(Var::r);
  if (shift >= 0) return {n * Poly::variable(Var::r, shift), d};
  return {n, d * Poly::variable(Var::r, -shift)};
}

ScalarExpr ScalarExpr::invert_q() const {
  Poly n = num_.reversed_in(Var::r);
  Poly d = den_.reversed_in(Var::r);
  const int shift = den_.degree(Var::r) - num_.degree(Var::r);
  if (shift >= 0) return {n * Poly::variable(Var::r, shift), d};
  return {n, d * Poly::variable(Var::r, -shift)};
}

ScalarExpr ScalarExpr::substitute(Var v, const ScalarExpr& value) const {
  auto horner = [&](const Poly& p) {
    ScalarExpr acc;
    for (int k = p.degree(v); k >= 0; --k) {
      acc = acc * value + ScalarExpr(p.coefficient(v, k), Poly(1));
    }
    return acc;
  };
  if (!depends_on(v)) return *this;
  return horner(num_) / horner(den_);
}

ScalarExpr ScalarExpr::derivative(Var v) const {
  Poly n = poly_derivative(num_, v) * den_ - num_ * poly_derivative(den_, v);
  if (n.is_zero()) return {};
  return {n, den_ * den_};
}

std::optional<ScalarExpr> ScalarExpr::limit_at_infinity(Var v) const {
  const int balance = degree_balance(v);
  if (balance < 0) return ScalarExpr();
  if (balance > 0) return std::nullopt;
  return ScalarExpr(num_.coefficient(v, num_.degree(v)), den_.coefficient(v, den_.degree(v)));
}

std::complex<double> ScalarExpr::evaluate(std::span<const std::complex<double>, kVarCount> at) const {
  const std::complex<double> d = den_.evaluate(at);
  if (std::abs(d) <= 1e-12 * magnitude_scale(den_, at)) {
    throw PoleError("pole of " + to_string() + " at evaluation point");
  }
  return num_.evaluate(at) / d;
}

std::string ScalarExpr::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  std::string n = num_.to_string();
  if (num_.terms().size() > 1 || n.front() == '-' || n.find('/') != std::string::npos) n = "(" + n + ")";
  return n + "/(" + den_.to_string() + ")";
}

UnitEval UnitEval::from_eta(double eta) { return UnitEval{-std::numbers::pi * eta / 2.0}; }

UnitEval UnitEval::deformed(double eta) {
  UnitEval e = from_eta(eta);
  if (std::abs(std::pow(e.r(), 4) - 1.0) < 1e-12) {
    throw std::domain_error("deformation parameter must satisfy q~^4 != 1");
  }
  return e;
}

std::array<std::complex<double>, kVarCount> UnitEval::values() const {
  std::array<std::complex<double>, kVarCount> out{};
  out[static_cast<std::size_t>(Var::r)] = r();
  out[static_cast<std::size_t>(Var::h)] = h;
  out[static_cast<std::size_t>(Var::z)] = z;
  out[static_cast<std::size_t>(Var::u)] = u;
  out[static_cast<std::size_t>(Var::v)] = v;
  return out;
}

std::complex<double> eval(const ScalarExpr& a, const UnitEval& at) {
  const auto vals = at.values();
  return a.evaluate(vals);
}

}  // namespace qplane
