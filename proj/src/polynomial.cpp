#include "qplane/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace qplane {

std::string_view var_name(Var v) {
  switch (v) {
    case Var::r: return "r";
    case Var::h: return "h";
    case Var::z: return "zeta";
    case Var::u: return "u";
    case Var::v: return "v";
    case Var::up: return "u'";
    case Var::vp: return "v'";
    case Var::h0: return "h0";
  }
  return "?";
}

namespace {

constexpr auto idx(Var v) { return static_cast<std::size_t>(v); }

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t k = 0; k < kVarCount; ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

Exponents add_exp(const Exponents& a, const Exponents& b, int sign) {
  Exponents out{};
  for (std::size_t k = 0; k < kVarCount; ++k) {
    int e = a[k] + sign * b[k];
    if (e < 0 || e > INT16_MAX) throw std::overflow_error("polynomial exponent out of range");
    out[k] = static_cast<std::int16_t>(e);
  }
  return out;
}

}  // namespace

Poly::Poly(GaussRational c) {
  if (!c.is_zero()) terms_.push_back({Exponents{}, std::move(c)});
}

Poly Poly::monomial(const Exponents& e, GaussRational c) {
  Poly p;
  if (!c.is_zero()) p.terms_.push_back({e, std::move(c)});
  return p;
}

Poly Poly::variable(Var v, int power) {
  Exponents e{};
  e[idx(v)] = static_cast<std::int16_t>(power);
  return monomial(e);
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().exp == Exponents{});
}

bool Poly::depends_on(Var v) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.exp[idx(v)] != 0; });
}

GaussRational Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().exp == Exponents{}) return terms_.back().coeff;
  return 0;
}

int Poly::degree(Var v) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max<int>(d, t.exp[idx(v)]);
  return d;
}

Poly Poly::coefficient(Var v, int k) const {
  Poly out;
  for (const auto& t : terms_) {
    if (t.exp[idx(v)] != k) continue;
    Term c = t;
    c.exp[idx(v)] = 0;
    out.terms_.push_back(std::move(c));
  }
  // All kept terms agree in coordinate v, so zeroing it preserves the order.
  return out;
}

Exponents Poly::min_exponents() const {
  if (terms_.empty()) return {};
  Exponents m = terms_.front().exp;
  for (const auto& t : terms_) {
    for (std::size_t k = 0; k < kVarCount; ++k) m[k] = std::min(m[k], t.exp[k]);
  }
  return m;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->exp > b->exp)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exp > a->exp) {
      merged.push_back(*b++);
    } else {
      GaussRational c = a->coeff + b->coeff;
      if (!c.is_zero()) merged.push_back({a->exp, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_monomial()) return a.shifted(b.leading_term().exp).scaled(b.leading_term().coeff);
  if (a.is_monomial()) return b.shifted(a.leading_term().exp).scaled(a.leading_term().coeff);
  std::map<Exponents, GaussRational, std::greater<>> acc;
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      acc[add_exp(s.exp, t.exp, 1)] += s.coeff * t.coeff;
    }
  }
  Poly out;
  out.terms_.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (!c.is_zero()) out.terms_.push_back({e, std::move(c)});
  }
  return out;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (a.terms_[k].exp != b.terms_[k].exp || !(a.terms_[k].coeff == b.terms_[k].coeff)) return false;
  }
  return true;
}

Poly Poly::scaled(const GaussRational& c) const {
  if (c.is_zero()) return {};
  if (c.is_one()) return *this;
  Poly out = *this;
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

Poly Poly::shifted(const Exponents& e, int sign) const {
  if (e == Exponents{}) return *this;
  Poly out = *this;
  for (auto& t : out.terms_) t.exp = add_exp(t.exp, e, sign);
  return out;
}

bool Poly::divide_exact(const Poly& divisor, Poly& quotient) const {
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
  quotient = Poly{};
  if (divisor.is_monomial()) {
    const Term& d = divisor.leading_term();
    for (const auto& t : terms_) {
      if (!divides(d.exp, t.exp)) return false;
    }
    quotient = shifted(d.exp, -1).scaled(d.coeff.inverse());
    return true;
  }
  const Term& lead = divisor.leading_term();
  GaussRational lead_inv = lead.coeff.inverse();
  Poly rem = *this;
  std::vector<Term> q;
  while (!rem.is_zero()) {
    const Term& t = rem.leading_term();
    if (!divides(lead.exp, t.exp)) return false;
    Term step{add_exp(t.exp, lead.exp, -1), t.coeff * lead_inv};
    rem -= divisor.shifted(step.exp).scaled(step.coeff);
    q.push_back(std::move(step));
  }
  quotient.terms_ = std::move(q);
  return true;
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  return scaled(leading_term().coeff.inverse());
}

Poly Poly::conj_coefficients() const {
  Poly out = *this;
  for (auto& t : out.terms_) t.coeff = t.coeff.conj();
  return out;
}

Poly Poly::reversed_in(Var v) const {
  const int d = degree(v);
  std::map<Exponents, GaussRational, std::greater<>> acc;
  for (const auto& t : terms_) {
    Exponents e = t.exp;
    e[idx(v)] = static_cast<std::int16_t>(d - e[idx(v)]);
    acc.emplace(e, t.coeff);
  }
  Poly out;
  for (auto& [e, c] : acc) out.terms_.push_back({e, c});
  return out;
}

std::complex<double> Poly::evaluate(std::span<const std::complex<double>, kVarCount> at) const {
  std::complex<double> sum = 0;
  for (const auto& t : terms_) {
    std::complex<double> m = t.coeff.to_complex();
    for (std::size_t k = 0; k < kVarCount; ++k) {
      if (t.exp[k] != 0) m *= std::pow(at[k], static_cast<int>(t.exp[k]));
    }
    sum += m;
  }
  return sum;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool constant = t.exp == Exponents{};
    GaussRational c = t.coeff;
    bool negative = false;
    if (c.is_real() ? sgn(c.re()) < 0 : (sgn(c.re()) == 0 && sgn(c.im()) < 0)) {
      negative = true;
      c = -c;
    }
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    bool parens = false;
    std::string cs = c.to_string(&parens);
    if (parens) cs = "(" + cs + ")";
    std::string mono;
    for (std::size_t k = 0; k < kVarCount; ++k) {
      if (t.exp[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(static_cast<Var>(k));
      if (t.exp[k] != 1) mono += "^" + std::to_string(t.exp[k]);
    }
    if (constant) {
      out += cs;
    } else if (c.is_one()) {
      out += mono;
    } else {
      out += cs + "*" + mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Multivariate gcd: recursive content / primitive-part splitting with a
// primitive pseudo-remainder sequence in one main variable at a time.

namespace {

Poly pseudo_remainder(Poly a, const Poly& b, Var x) {
  const int db = b.degree(x);
  const Poly lcb = b.coefficient(x, db);
  while (!a.is_zero() && a.degree(x) >= db) {
    const int da = a.degree(x);
    Poly lca = a.coefficient(x, da);
    Exponents shift{};
    shift[idx(x)] = static_cast<std::int16_t>(da - db);
    a = lcb * a - lca * b.shifted(shift);
  }
  return a;
}

Poly content_in(const Poly& p, Var x) {
  const int d = p.degree(x);
  Poly c;
  for (int k = d; k >= 0; --k) {
    Poly ck = p.coefficient(x, k);
    if (ck.is_zero()) continue;
    c = gcd(c, ck);
    if (c.is_constant()) break;
  }
  return c;
}

Poly primitive_part_in(const Poly& p, Var x) {
  if (p.is_zero()) return {};
  if (p.degree(x) == 0) return Poly(1);
  Poly c = content_in(p, x);
  Poly q;
  if (!p.divide_exact(c, q)) throw std::logic_error("content does not divide polynomial");
  return q.monic();
}

using Dense = std::vector<GaussRational>;  // coefficient of x^k at index k

void trim(Dense& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

/// Image of p under substituting `point` for every variable except x.
Dense univariate_image(const Poly& p, Var x, const std::array<long, kVarCount>& point) {
  Dense out(static_cast<std::size_t>(p.degree(x)) + 1);
  for (const auto& t : p.terms()) {
    mpq_class m = 1;
    for (std::size_t k = 0; k < kVarCount; ++k) {
      if (k == idx(x) || t.exp[k] == 0) continue;
      mpz_class pw;
      mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(std::labs(point[k])), t.exp[k]);
      if (point[k] < 0 && (t.exp[k] % 2) != 0) pw = -pw;
      m *= pw;
    }
    out[static_cast<std::size_t>(t.exp[idx(x)])] += t.coeff * GaussRational(m);
  }
  trim(out);
  return out;
}

/// Degree of the gcd of two univariate polynomials over Q(i).
int univariate_gcd_degree(Dense a, Dense b) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    const GaussRational inv = b.back().inverse();
    while (a.size() >= b.size() && !a.empty()) {
      const GaussRational f = a.back() * inv;
      const std::size_t shift = a.size() - b.size();
      for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= f * b[k];
      a.pop_back();
      trim(a);
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

/// True when the gcd of a and b provably has degree 0 in x. Uses one image
/// at a point where the leading coefficient of a in x does not vanish, which
/// makes a degree-0 image gcd conclusive.
bool coprime_in(const Poly& a, const Poly& b, Var x, std::uint64_t& seed) {
  const int da = a.degree(x);
  const Poly lca = a.coefficient(x, da);
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::array<long, kVarCount> point{};
    for (auto& p : point) {
      seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
      p = static_cast<long>((seed >> 33) % 23) - 11;
      if (p == 0) p = 13;
    }
    if (univariate_image(lca, x, point).empty()) continue;
    return univariate_gcd_degree(univariate_image(a, x, point), univariate_image(b, x, point)) == 0;
  }
  return false;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (a == b) return a.monic();

  const Exponents ma = a.min_exponents();
  const Exponents mb = b.min_exponents();
  Exponents m{};
  for (std::size_t k = 0; k < kVarCount; ++k) m[k] = std::min(ma[k], mb[k]);
  const Poly mono = Poly::monomial(m);
  const Poly a1 = a.shifted(ma, -1);
  const Poly b1 = b.shifted(mb, -1);
  if (a1.is_constant() || b1.is_constant()) return mono;

  // Main variable: one shared by both operands in which they are not
  // provably coprime. If every shared variable is ruled out the gcd is the
  // monomial part alone.
  int main = -1;
  bool any_shared = false;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
  for (std::size_t k = 0; k < kVarCount; ++k) {
    const Var v = static_cast<Var>(k);
    if (!(a1.depends_on(v) && b1.depends_on(v))) continue;
    any_shared = true;
    if (coprime_in(a1, b1, v, seed)) continue;
    main = static_cast<int>(k);
    break;
  }
  if (any_shared && main < 0) return mono;
  if (main < 0) {
    for (std::size_t k = 0; k < kVarCount && main < 0; ++k) {
      if (a1.depends_on(static_cast<Var>(k))) main = static_cast<int>(k);
    }
  }
  const Var x = static_cast<Var>(main);

  const Poly ca = a1.degree(x) == 0 ? a1 : content_in(a1, x);
  const Poly cb = b1.degree(x) == 0 ? b1 : content_in(b1, x);
  const Poly c = gcd(ca, cb);

  Poly pa = primitive_part_in(a1, x);
  Poly pb = primitive_part_in(b1, x);
  if (pa.degree(x) < pb.degree(x)) std::swap(pa, pb);
  while (!pb.is_zero() && pb.degree(x) > 0) {
    Poly rem = pseudo_remainder(pa, pb, x);
    pa = std::move(pb);
    pb = primitive_part_in(rem, x);
  }
  const Poly g = pb.is_zero() ? pa : Poly(1);
  return (mono * c * g).monic();
}

}  // namespace qplane
