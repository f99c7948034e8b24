#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace qplane {

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact Gaussian rational a + b·i with a, b in Q.
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(long n) : re_(n), im_(0) {}  // NOLINT(google-explicit-constructor)
  GaussRational(mpq_class re, mpq_class im = 0);

  static GaussRational fraction(long num, long den);
  static GaussRational imaginary_unit() { return GaussRational(0, 1); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussRational conj() const { return {re_, -im_}; }
  GaussRational inverse() const;

  GaussRational operator-() const { return {-re_, -im_}; }
  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o) { return *this *= o.inverse(); }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// Text form accepted by the expression parser: `3`, `-1/2`, `2*i`, `(1/2-3*i)`.
  /// `needs_parens` is set when the text is a sum and must be wrapped before
  /// being multiplied by a monomial.
  std::string to_string(bool* needs_parens = nullptr) const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

}  // namespace qplane
