#include "qplane/ncpoly.hpp"

#include <cstdlib>

namespace qplane {

namespace {

ScalarExpr q_unit(const Presentation& p, long k) { return ScalarExpr::var(Var::r, static_cast<int>(p.q_r_power * k)); }

std::string power_text(const std::string& g, int e) {
  if (e == 1) return g;
  return g + "^" + std::to_string(e);
}

}  // namespace

NCElement::NCElement(Presentation p, const ScalarExpr& c) : pres_(std::move(p)) {
  if (!c.is_zero()) terms_.emplace(Key{0, 0}, c);
}

NCElement NCElement::monomial(const Presentation& p, int a, int b, const ScalarExpr& c) {
  NCElement out(p);
  out.add_term({a, b}, c);
  return out;
}

ScalarExpr NCElement::coefficient(int a, int b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? ScalarExpr() : it->second;
}

void NCElement::add_term(const Key& k, const ScalarExpr& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void NCElement::require_same(const NCElement& o) const {
  if (!(pres_ == o.pres_)) {
    throw PresentationMismatch("elements of the " + pres_.g1 + "," + pres_.g2 + " and " + o.pres_.g1 + "," +
                               o.pres_.g2 + " presentations cannot be combined");
  }
}

NCElement NCElement::operator-() const {
  NCElement out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

NCElement& NCElement::operator+=(const NCElement& o) {
  require_same(o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

NCElement& NCElement::operator-=(const NCElement& o) {
  require_same(o);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

NCElement operator*(const NCElement& a, const NCElement& b) {
  a.require_same(b);
  NCElement out(a.pres_);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      // G2^b G1^c = Q^{-bc} G1^c G2^b
      const long swaps = static_cast<long>(ka.second) * kb.first;
      ScalarExpr c = ca * cb;
      if (swaps != 0) c *= q_unit(a.pres_, -swaps);
      out.add_term({ka.first + kb.first, ka.second + kb.second}, c);
    }
  }
  return out;
}

bool operator==(const NCElement& a, const NCElement& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.pres_ == b.pres_ && a.terms_ == b.terms_;
}

NCElement NCElement::scaled(const ScalarExpr& c) const {
  if (c.is_zero()) return NCElement(pres_);
  NCElement out = *this;
  for (auto& [k, t] : out.terms_) t *= c;
  return out;
}

NCElement NCElement::monomial_inverse() const {
  if (!is_monomial()) throw std::invalid_argument("only monomials are invertible");
  const auto& [k, c] = *terms_.begin();
  // (c G1^a G2^b)^-1 = c^-1 Q^{-ab} G1^-a G2^-b
  return monomial(pres_, -k.first, -k.second, c.inverse() * q_unit(pres_, -static_cast<long>(k.first) * k.second));
}

NCElement NCElement::pow(int n) const {
  if (n < 0) return monomial_inverse().pow(-n);
  NCElement result(pres_, ScalarExpr(1));
  NCElement base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

std::string NCElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    std::string coeff = c.to_string();
    const bool sum = c.numerator().terms().size() > 1 || !c.denominator().is_constant() ||
                     coeff.find_first_of("+-", 1) != std::string::npos;
    if (sum) coeff = "(" + coeff + ")";
    std::string term = coeff;
    if (k.first != 0) term += " * " + power_text(pres_.g1, k.first);
    if (k.second != 0) term += " * " + power_text(pres_.g2, k.second);
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

NCElement commutator(const NCElement& a, const NCElement& b) { return a * b - b * a; }

NCElement star(const NCElement& a, StarConvention conv) {
  const Presentation& p = a.presentation();
  // G1* = r^phase G1, G2* = r^phase G2
  int phase = 0;
  if (p == Presentation::uv()) {
    phase = conv == StarConvention::XyInduced ? 4 : 0;
  } else if (p == Presentation::xy()) {
    if (conv != StarConvention::XyInduced) {
      throw PresentationMismatch("the hermitian u,v convention does not act on the x,y presentation");
    }
  } else {
    throw PresentationMismatch("no star structure known for the " + p.g1 + "," + p.g2 + " presentation");
  }
  NCElement out(p);
  for (const auto& [k, c] : a.terms()) {
    // (G1^a G2^b)* = (G2*)^b (G1*)^a = phase^{a+b} Q^{-ab} G1^a G2^b
    const long e = static_cast<long>(phase) * (k.first + k.second) -
                   static_cast<long>(p.q_r_power) * k.first * k.second;
    out += NCElement::monomial(p, k.first, k.second, c.star() * ScalarExpr::var(Var::r, static_cast<int>(e)));
  }
  return out;
}

NCElement embed_uv_in_xy(const NCElement& a, int eps1, int eps2) {
  if (!(a.presentation() == Presentation::uv())) throw PresentationMismatch("embedding expects a u,v element");
  if (std::abs(eps1) != 1 || std::abs(eps2) != 1) throw std::invalid_argument("signs must be +1 or -1");
  const Presentation xy = Presentation::xy();
  const NCElement u_img = NCElement::monomial(xy, 2, 0, ScalarExpr(eps2) * ScalarExpr::var(Var::r, -2));
  const NCElement v_img = NCElement::monomial(xy, 2, -2, ScalarExpr(eps1));
  NCElement out(xy);
  for (const auto& [k, c] : a.terms()) out += (u_img.pow(k.first) * v_img.pow(k.second)).scaled(c);
  return out;
}

NCElement lambda1() {
  const ScalarExpr c = (1 - ScalarExpr::q(-1)).inverse();
  return NCElement::v(-1).scaled(c);
}

NCElement lambda2() {
  const ScalarExpr c = (1 - ScalarExpr::q(-1)).inverse();
  return NCElement::u(-1).scaled(-c);
}

std::pair<NCElement, NCElement> tr_generators() { return {NCElement::u() + NCElement::v(), NCElement::u() - NCElement::v()}; }

}  // namespace qplane
