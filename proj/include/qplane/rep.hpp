#pragma once

#include <array>
#include <complex>
#include <vector>

#include "qplane/conditions.hpp"
#include "qplane/geometry.hpp"

namespace qplane {

using cdouble = std::complex<double>;

/// alpha, beta > 0 with q = e^{2 pi i alpha beta}.
struct RepParams {
  double alpha = 1.0;
  double beta = 1.0;

  /// Throws std::invalid_argument unless alpha, beta > 0 and q^4 != 1.
  static RepParams make(double alpha, double beta);
  double gamma() const { return alpha * beta; }
  cdouble q() const;
};

struct KetTerm {
  cdouble k;
  cdouble amplitude;
};

/// Finite combination sum_j a_j e^{-k_j x}, Re k_j > 0, no repeated k_j.
class Ket {
 public:
  Ket() = default;
  static Ket basis(cdouble k);

  /// Adds a term, merging with an existing one at the same k. Throws
  /// std::invalid_argument if Re k <= 0.
  void add(cdouble k, cdouble amplitude);
  const std::vector<KetTerm>& terms() const { return terms_; }
  /// Amplitude at k (zero if absent).
  cdouble amplitude(cdouble k) const;

 private:
  std::vector<KetTerm> terms_;
};

/// (u f)(x) = f(x - i beta): the amplitude of |k> picks up e^{i beta k}.
/// This orientation gives u v = q v u.
Ket apply_u(const RepParams& p, const Ket& s);
/// u^n in one step: e^{i n beta k}.
Ket apply_u_power(const RepParams& p, const Ket& s, int n);
/// (v f)(x) = e^{-2 pi alpha x} f(x): |k> -> |k + 2 pi alpha>.
Ket apply_v(const RepParams& p, const Ket& s);

/// max_k |(uv - q vu)s|_k / max_k |(uv s)|_k, compared amplitude-wise.
double commutation_residual(const RepParams& p, const Ket& s);

NumericMatrix evaluate_metric(const Metric& g, const UnitEval& at);

/// g^ij xi_i xi_j
cdouble distance(const NumericMatrix& g, const std::array<cdouble, 2>& xi);

}  // namespace qplane
