#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "bateman/polynomial.hpp"

namespace bateman {

using CoeffMatrix = std::vector<std::vector<Coeff>>;

CoeffMatrix zero_matrix(int n);
CoeffMatrix identity_matrix(int n);

/// P(x) * exp(-1/2 x^T S x + t^T x). S is kept symmetric; the function is zero iff P is.
class PolyGauss {
 public:
  /// Symmetrizes `quad` as (S + S^T)/2.
  PolyGauss(Polynomial poly, CoeffMatrix quad, std::vector<Coeff> lin);

  /// exp(-|x|^2/2), the two-mode (or n-mode) oscillator ground state without normalization.
  static PolyGauss standard_vacuum(int nvars);
  /// exp(-1/2 x^T S x + t^T x) with unit prefactor.
  static PolyGauss gaussian(CoeffMatrix quad, std::vector<Coeff> lin);

  int nvars() const { return poly_.nvars(); }
  const Polynomial& poly() const { return poly_; }
  const CoeffMatrix& quad() const { return quad_; }
  const std::vector<Coeff>& lin() const { return lin_; }
  bool is_zero() const { return poly_.is_zero(); }
  /// True when S and t are real, i.e. the envelope is a genuine real Gaussian.
  bool has_real_exponent() const;

  /// d/dx_k Q where Q = -1/2 x^T S x + t^T x.
  Polynomial exponent_gradient(int k) const;
  PolyGauss derivative(int k) const;
  PolyGauss times_variable(int k) const;
  PolyGauss with_poly(Polynomial poly) const;
  /// True when both share the same exponent (S, t), so polynomial parts can be compared.
  bool same_exponent(const PolyGauss& o) const;

  std::complex<double> evaluate(std::span<const double> x) const;
  std::string str() const;

  friend PolyGauss operator+(const PolyGauss& l, const PolyGauss& r);
  friend PolyGauss operator*(const Coeff& c, const PolyGauss& f) { return f.with_poly(c * f.poly_); }
  friend bool operator==(const PolyGauss& l, const PolyGauss& r) {
    return l.poly_ == r.poly_ && (l.is_zero() || l.same_exponent(r));
  }

 private:
  Polynomial poly_;
  CoeffMatrix quad_;
  std::vector<Coeff> lin_;
};

}  // namespace bateman
