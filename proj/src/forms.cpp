#include "qplane/forms.hpp"

#include <stdexcept>

namespace qplane {

namespace {

NCElement scalar_element(const Presentation& p, const ScalarExpr& c) { return NCElement(p, c); }

CheckResult element_check(std::string name, const NCElement& residual) {
  return {std::move(name), residual.is_zero(), residual.to_string()};
}

CheckResult form_check(std::string name, const OneForm& residual) {
  return {std::move(name), residual.is_zero(), residual.to_string()};
}

}  // namespace

OneForm OneForm::frame(const Presentation& p, int i) {
  OneForm out = zero(p);
  (i == 1 ? out.f1 : out.f2) = NCElement(p, ScalarExpr(1));
  return out;
}

OneForm& OneForm::operator+=(const OneForm& o) {
  f1 += o.f1;
  f2 += o.f2;
  return *this;
}

OneForm& OneForm::operator-=(const OneForm& o) {
  f1 -= o.f1;
  f2 -= o.f2;
  return *this;
}

std::string OneForm::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  if (!f1.is_zero()) out = "(" + f1.to_string() + ") [th1]";
  if (!f2.is_zero()) out += std::string(out.empty() ? "" : " + ") + "(" + f2.to_string() + ") [th2]";
  return out;
}

std::string TwoForm::to_string() const {
  if (is_zero()) return "0";
  return "(" + g.to_string() + ") [th1 th2]";
}

TwoForm wedge(const OneForm& a, const OneForm& b) {
  return {a.f1 * b.f2 - (a.f2 * b.f1).scaled(ScalarExpr::q(-1))};
}

ScalarMatrix wedge_projector() {
  const ScalarExpr q = ScalarExpr::q();
  const ScalarExpr half = ScalarExpr::fraction(1, 2);
  ScalarMatrix p(4, 4);
  p(1, 1) = half;
  p(1, 2) = -half * q;
  p(2, 1) = -half * q.inverse();
  p(2, 2) = half;
  return p;
}

ScalarMatrix c_matrix() { return ScalarMatrix::identity(4) - ScalarExpr(2) * wedge_projector(); }

const Calculus& Calculus::uv() {
  static const Calculus calc = [] {
    const Presentation p = Presentation::uv();
    Calculus c(p, {lambda1(), lambda2()}, {TwoForm{NCElement(p)}, TwoForm{NCElement(p)}});
    const NCElement u = NCElement::u();
    const NCElement v = NCElement::v();
    // th1 = q^-1 v u^-1 du, th2 = u v^-1 dv, and d(f dg) = df dg
    const NCElement a1 = (v * u.pow(-1)).scaled(ScalarExpr::q(-1));
    const NCElement a2 = u * v.pow(-1);
    c.dtheta_[0] = wedge(c.d(a1), c.d(u));
    c.dtheta_[1] = wedge(c.d(a2), c.d(v));
    return c;
  }();
  return calc;
}

Calculus Calculus::xy(int eps1, int eps2) {
  const Calculus& base = uv();
  auto emb = [&](const NCElement& f) { return embed_uv_in_xy(f, eps1, eps2); };
  return Calculus(Presentation::xy(), {emb(base.lambda(1)), emb(base.lambda(2))},
                  {TwoForm{emb(base.dtheta(1).g)}, TwoForm{emb(base.dtheta(2).g)}});
}

OneForm Calculus::d(const NCElement& f) const {
  if (!(f.presentation() == pres_)) throw PresentationMismatch("element does not belong to this calculus");
  return {commutator(lambda_[0], f), commutator(lambda_[1], f)};
}

TwoForm Calculus::d(const OneForm& a) const {
  TwoForm out{NCElement(pres_)};
  for (int i = 1; i <= 2; ++i) {
    out += wedge(d(a[i]), OneForm::frame(pres_, i));
    out += a[i] * dtheta(i);
  }
  return out;
}

OneForm Calculus::theta() const { return {-lambda_[0], -lambda_[1]}; }

NCElement Calculus::structure_element(int i, int j, int k) const {
  if (i < 1 || i > 2 || j < 1 || j > 2 || k < 1 || k > 2) throw std::out_of_range("frame index out of range");
  if (j == k) return NCElement(pres_);
  const NCElement c12 = -dtheta(i).g;
  if (j == 1) return c12;
  return c12.scaled(-ScalarExpr::q());
}

OneForm Calculus::star(const OneForm& a) const { return {star(a.f1), star(a.f2)}; }

NCElement expected_structure_element(int i) {
  const ScalarExpr c = ScalarExpr::q(-1) - 1;
  return (i == 1 ? lambda2() : lambda1()).scaled(c);
}

std::vector<CheckResult> check_wz_relations(int eps1, int eps2) {
  std::vector<CheckResult> out;
  const Calculus xyc = Calculus::xy(eps1, eps2);
  const NCElement x = NCElement::x();
  const NCElement y = NCElement::y();
  const OneForm dx = xyc.d(x);
  const OneForm dy = xyc.d(y);
  const NCElement r = NCElement(Presentation::xy(), ScalarExpr::var(Var::r));
  const NCElement r2 = NCElement(Presentation::xy(), ScalarExpr::var(Var::r, 2));
  const NCElement r2m1 = NCElement(Presentation::xy(), ScalarExpr::var(Var::r, 2) - 1);
  out.push_back(form_check("x dx = q~^2 dx x", x * dx - r2 * (dx * x)));
  out.push_back(form_check("x dy = q~ dy x + (q~^2 - 1) dx y", x * dy - r * (dy * x) - r2m1 * (dx * y)));
  out.push_back(form_check("y dx = q~ dx y", y * dx - r * (dx * y)));
  out.push_back(form_check("y dy = q~^2 dy y", y * dy - r2 * (dy * y)));

  const Calculus& uvc = Calculus::uv();
  const Presentation p = Presentation::uv();
  const NCElement u = NCElement::u();
  const NCElement v = NCElement::v();
  const OneForm du = uvc.d(u);
  const OneForm dv = uvc.d(v);
  const NCElement q = scalar_element(p, ScalarExpr::q());
  const NCElement qi = scalar_element(p, ScalarExpr::q(-1));
  out.push_back(form_check("u du = q^-1 du u", u * du - qi * (du * u)));
  out.push_back(form_check("u dv = q dv u", u * dv - q * (dv * u)));
  out.push_back(form_check("v du = q^-1 du v", v * du - qi * (du * v)));
  out.push_back(form_check("v dv = q dv v", v * dv - q * (dv * v)));
  return out;
}

TwoForm volume_form() {
  const Calculus& c = Calculus::uv();
  return wedge(c.d(NCElement::u()), c.d(NCElement::v()));
}

std::vector<CheckResult> check_xy_relations(int orientation) {
  if (orientation != 1 && orientation != -1) throw std::invalid_argument("orientation must be +1 or -1");
  const Presentation p = Presentation::uv();
  const Calculus& calc = Calculus::uv();
  const auto [t, rr] = tr_generators();
  const std::array<NCElement, 2> X{t, rr};
  const std::array<OneForm, 2> Xi{calc.d(t), calc.d(rr)};

  const ScalarExpr a = ScalarExpr::q_half();
  const ScalarExpr c = (a + a.inverse()) / 2;
  const ScalarExpr s = ScalarExpr(orientation) * (a - a.inverse()) / 2;
  ScalarMatrix Q(2, 2, {c, s, s, c});
  const ScalarExpr i = ScalarExpr::i();
  ScalarMatrix sigma2(2, 2, {ScalarExpr(), -i, i, ScalarExpr()});
  const ScalarMatrix Qs = Q * sigma2;
  const ScalarMatrix Q2 = Q * Q;

  std::vector<CheckResult> out;
  NCElement quad(p);
  for (std::size_t k = 0; k < 2; ++k) {
    for (std::size_t l = 0; l < 2; ++l) quad += (X[k] * X[l]).scaled(Qs(k, l));
  }
  out.push_back(element_check("X^t (Q sigma2) X = 0", quad));

  // literal outer-product reading: X_k Xi_l = Xi_k (Q^2 X)_l
  // index-consistent reading: X_k Xi_l = (Q^2)_lm Xi_m X_k
  bool literal_ok = true, moved_ok = true;
  std::string literal_text, moved_text;
  for (std::size_t k = 0; k < 2; ++k) {
    for (std::size_t l = 0; l < 2; ++l) {
      NCElement q2x(p);
      OneForm moved = OneForm::zero(p);
      for (std::size_t m = 0; m < 2; ++m) {
        q2x += X[m].scaled(Q2(l, m));
        moved += NCElement(p, Q2(l, m)) * (Xi[m] * X[k]);
      }
      const std::string at = "[" + std::to_string(k + 1) + "," + std::to_string(l + 1) + "] ";
      const OneForm res = X[k] * Xi[l] - Xi[k] * q2x;
      if (!res.is_zero()) {
        literal_ok = false;
        literal_text += at + res.to_string() + "; ";
      }
      const OneForm res2 = X[k] * Xi[l] - moved;
      if (!res2.is_zero()) {
        moved_ok = false;
        moved_text += at + res2.to_string() + "; ";
      }
    }
  }
  out.push_back({"X Xi^t = Xi (Q^2 X)^t", literal_ok, literal_ok ? "0" : literal_text});
  out.push_back({"X_k Xi_l = (Q^2)_lm Xi_m X_k", moved_ok, moved_ok ? "0" : moved_text});

  TwoForm forms{NCElement(p)};
  for (std::size_t k = 0; k < 2; ++k) {
    for (std::size_t l = 0; l < 2; ++l) forms += TwoForm{wedge(Xi[k], Xi[l]).g.scaled(Q(k, l))};
  }
  out.push_back({"Xi^t Q Xi = 0", forms.is_zero(), forms.to_string()});
  return out;
}

}  // namespace qplane
