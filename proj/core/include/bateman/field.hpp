#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace bateman {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "3", "-1/5" or "0.25" into an exact rational.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

/// Element a + b*sqrt(2) of the real quadratic field Q(sqrt 2).
class Quad {
 public:
  Quad() = default;
  Quad(Rational rational, Rational sqrt2 = 0);
  Quad(long value) : Quad(Rational(value)) {}
  Quad(int value) : Quad(Rational(value)) {}

  static Quad sqrt2() { return Quad(0, 1); }
  /// 1/sqrt(2) = sqrt(2)/2
  static Quad inv_sqrt2() { return Quad(0, Rational(1, 2)); }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt2_part() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  /// Exact sign under the real embedding sqrt(2) > 0.
  int sign() const;
  /// Galois conjugate a - b*sqrt(2).
  Quad galois() const { return Quad(a_, -b_); }
  /// Field norm a^2 - 2 b^2; nonzero for every nonzero element.
  Rational field_norm() const { return a_ * a_ - 2 * b_ * b_; }
  Quad inverse() const;
  Quad abs() const { return sign() < 0 ? -*this : *this; }
  double to_double() const;
  long double to_long_double() const;
  std::string str() const;

  Quad operator-() const { return Quad(-a_, -b_); }
  Quad& operator+=(const Quad& o);
  Quad& operator-=(const Quad& o);
  Quad& operator*=(const Quad& o);
  Quad& operator/=(const Quad& o);

  friend Quad operator+(Quad l, const Quad& r) { return l += r; }
  friend Quad operator-(Quad l, const Quad& r) { return l -= r; }
  friend Quad operator*(Quad l, const Quad& r) { return l *= r; }
  friend Quad operator/(Quad l, const Quad& r) { return l /= r; }
  friend bool operator==(const Quad& l, const Quad& r) { return l.a_ == r.a_ && l.b_ == r.b_; }
  friend bool operator<(const Quad& l, const Quad& r) { return (l - r).sign() < 0; }
  friend bool operator>(const Quad& l, const Quad& r) { return r < l; }
  friend bool operator<=(const Quad& l, const Quad& r) { return !(r < l); }
  friend bool operator>=(const Quad& l, const Quad& r) { return !(l < r); }

 private:
  Rational a_;
  Rational b_;
};

/// Exact scalar in Q(sqrt 2, i): re + i*im with re, im in Q(sqrt 2).
class Coeff {
 public:
  Coeff() = default;
  Coeff(Quad re, Quad im = Quad()) : re_(std::move(re)), im_(std::move(im)) {}
  Coeff(Rational re) : re_(std::move(re)) {}
  Coeff(long value) : re_(value) {}
  Coeff(int value) : re_(value) {}

  static Coeff i() { return Coeff(Quad(), Quad(1)); }
  static Coeff inv_sqrt2() { return Coeff(Quad::inv_sqrt2()); }

  const Quad& re() const { return re_; }
  const Quad& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  Coeff conj() const { return Coeff(re_, -im_); }
  /// Throws std::domain_error on zero.
  Coeff inverse() const;
  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }
  std::string str() const;

  Coeff operator-() const { return Coeff(-re_, -im_); }
  Coeff& operator+=(const Coeff& o);
  Coeff& operator-=(const Coeff& o);
  Coeff& operator*=(const Coeff& o);
  Coeff& operator/=(const Coeff& o) { return *this *= o.inverse(); }

  friend Coeff operator+(Coeff l, const Coeff& r) { return l += r; }
  friend Coeff operator-(Coeff l, const Coeff& r) { return l -= r; }
  friend Coeff operator*(Coeff l, const Coeff& r) { return l *= r; }
  friend Coeff operator/(Coeff l, const Coeff& r) { return l /= r; }
  friend bool operator==(const Coeff& l, const Coeff& r) { return l.re_ == r.re_ && l.im_ == r.im_; }

 private:
  Quad re_;
  Quad im_;
};

}  // namespace bateman
