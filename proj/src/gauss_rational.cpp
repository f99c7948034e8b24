#include "qplane/gauss_rational.hpp"

namespace qplane {

GaussRational::GaussRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussRational GaussRational::fraction(long num, long den) {
  if (den == 0) throw DivisionByZero("zero denominator in rational constant");
  mpq_class v(num, den);
  v.canonicalize();
  return {v, 0};
}

GaussRational GaussRational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  mpq_class norm = re_ * re_ + im_ * im_;
  return {re_ / norm, -im_ / norm};
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string GaussRational::to_string(bool* needs_parens) const {
  if (needs_parens) *needs_parens = false;
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = im_.get_str() + "*i";
  }
  if (sgn(re_) == 0) return imag;
  if (needs_parens) *needs_parens = true;
  std::string out = re_.get_str();
  if (imag.front() != '-') out += "+";
  return out + imag;
}

}  // namespace qplane
