#include "bateman/field.hpp"

#include <cmath>
#include <stdexcept>

namespace bateman {

Rational parse_rational(const std::string& text) {
  if (text.empty()) {
    throw std::invalid_argument("empty rational literal");
  }
  const auto dot = text.find('.');
  Rational value;
  try {
    if (dot == std::string::npos) {
      value = Rational(text, 10);
    } else {
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      const auto fraction_len = text.size() - dot - 1;
      if (digits.empty() || digits == "-" || digits == "+") {
        throw std::invalid_argument(text);
      }
      if (digits.front() == '+') digits.erase(0, 1);
      Integer denominator;
      mpz_ui_pow_ui(denominator.get_mpz_t(), 10, fraction_len);
      value = Rational(Integer(digits, 10), denominator);
    }
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational literal: '" + text + "'");
  }
  if (sgn(value.get_den()) == 0) {
    throw std::invalid_argument("zero denominator in '" + text + "'");
  }
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Quad::Quad(Rational rational, Rational sqrt2) : a_(std::move(rational)), b_(std::move(sqrt2)) {
  a_.canonicalize();
  b_.canonicalize();
}

int Quad::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare a^2 with 2 b^2
  const int cmp_value = cmp(Rational(a_ * a_), Rational(2 * b_ * b_));
  return cmp_value > 0 ? sa : sb;
}

Quad Quad::inverse() const {
  if (is_zero()) {
    throw std::domain_error("inverse of zero in Q(sqrt2)");
  }
  const Rational n = field_norm();
  return Quad(a_ / n, -b_ / n);
}

double Quad::to_double() const { return static_cast<double>(to_long_double()); }

long double Quad::to_long_double() const {
  // a + b sqrt2 == (a^2 - 2b^2) / (a - b sqrt2) avoids cancellation when a ~ -b sqrt2
  const long double a = a_.get_d();
  const long double b = b_.get_d();
  const long double root2 = std::sqrt(2.0L);
  if (sgn(a_) * sgn(b_) < 0) {
    return static_cast<long double>(field_norm().get_d()) / (a - b * root2);
  }
  return a + b * root2;
}

std::string Quad::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (sgn(a_) != 0) out = a_.get_str();
  if (sgn(b_) != 0) {
    std::string b = b_.get_str();
    if (b == "1") {
      b = "sqrt2";
    } else if (b == "-1") {
      b = "-sqrt2";
    } else {
      b += "*sqrt2";
    }
    if (out.empty()) {
      out = b;
    } else if (b.front() == '-') {
      out += " - " + b.substr(1);
    } else {
      out += " + " + b;
    }
  }
  return out;
}

Quad& Quad::operator+=(const Quad& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Quad& Quad::operator-=(const Quad& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Quad& Quad::operator*=(const Quad& o) {
  Rational a = a_ * o.a_ + 2 * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

Quad& Quad::operator/=(const Quad& o) { return *this *= o.inverse(); }

Coeff Coeff::inverse() const {
  if (is_zero()) {
    throw std::domain_error("inverse of zero in Q(sqrt2, i)");
  }
  // |z|^2 is a nonzero element of Q(sqrt2)
  const Quad modulus = (re_ * re_ + im_ * im_).inverse();
  return Coeff(re_ * modulus, -im_ * modulus);
}

std::string Coeff::str() const {
  if (im_.is_zero()) return re_.str();
  std::string imag;
  if (im_ == Quad(1)) {
    imag = "i";
  } else if (im_ == Quad(-1)) {
    imag = "-i";
  } else if (im_.is_rational() || im_.rational_part() == 0) {
    imag = im_.str() + "*i";
  } else {
    imag = "(" + im_.str() + ")*i";
  }
  if (re_.is_zero()) return imag;
  return "(" + re_.str() + (imag.front() == '-' ? " - " + imag.substr(1) : " + " + imag) + ")";
}

Coeff& Coeff::operator+=(const Coeff& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Coeff& Coeff::operator-=(const Coeff& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Coeff& Coeff::operator*=(const Coeff& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  Quad re = re_ * o.re_ - im_ * o.im_;
  Quad im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

}  // namespace bateman
