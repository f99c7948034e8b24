#include "qplane/rep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qplane {

namespace {

constexpr double kSameK = 1e-13;

bool same_k(cdouble a, cdouble b) { return std::abs(a - b) <= kSameK * std::max(1.0, std::abs(a)); }

}  // namespace

RepParams RepParams::make(double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0)) throw std::invalid_argument("alpha and beta must be positive");
  RepParams p{alpha, beta};
  if (std::abs(std::pow(p.q(), 4) - 1.0) < 1e-12) throw std::invalid_argument("q^4 = 1 for these alpha, beta");
  return p;
}

cdouble RepParams::q() const { return std::polar(1.0, 2.0 * std::numbers::pi * gamma()); }

Ket Ket::basis(cdouble k) {
  Ket s;
  s.add(k, 1.0);
  return s;
}

void Ket::add(cdouble k, cdouble amplitude) {
  if (!(k.real() > 0.0)) throw std::invalid_argument("ket requires Re k > 0");
  for (auto& t : terms_) {
    if (same_k(t.k, k)) {
      t.amplitude += amplitude;
      return;
    }
  }
  terms_.push_back({k, amplitude});
}

cdouble Ket::amplitude(cdouble k) const {
  for (const auto& t : terms_) {
    if (same_k(t.k, k)) return t.amplitude;
  }
  return 0.0;
}

Ket apply_u(const RepParams& p, const Ket& s) { return apply_u_power(p, s, 1); }

Ket apply_u_power(const RepParams& p, const Ket& s, int n) {
  Ket out;
  const cdouble i{0.0, 1.0};
  for (const auto& t : s.terms()) out.add(t.k, t.amplitude * std::exp(i * static_cast<double>(n) * p.beta * t.k));
  return out;
}

Ket apply_v(const RepParams& p, const Ket& s) {
  Ket out;
  for (const auto& t : s.terms()) out.add(t.k + 2.0 * std::numbers::pi * p.alpha, t.amplitude);
  return out;
}

double commutation_residual(const RepParams& p, const Ket& s) {
  const Ket uv = apply_u(p, apply_v(p, s));
  const Ket vu = apply_v(p, apply_u(p, s));
  double num = 0.0;
  double den = 0.0;
  for (const auto& t : uv.terms()) {
    num = std::max(num, std::abs(t.amplitude - p.q() * vu.amplitude(t.k)));
    den = std::max(den, std::abs(t.amplitude));
  }
  // terms of vu missing from uv
  for (const auto& t : vu.terms()) {
    if (uv.amplitude(t.k) == 0.0) num = std::max(num, std::abs(p.q() * t.amplitude));
  }
  return den == 0.0 ? num : num / den;
}

NumericMatrix evaluate_metric(const Metric& g, const UnitEval& at) {
  require_metric(g);
  NumericMatrix m{};
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) m[i][j] = eval(g(i, j), at);
  }
  return m;
}

cdouble distance(const NumericMatrix& g, const std::array<cdouble, 2>& xi) {
  cdouble out = 0.0;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) out += g[i][j] * xi[i] * xi[j];
  }
  return out;
}

}  // namespace qplane
