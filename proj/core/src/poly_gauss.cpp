#include "bateman/poly_gauss.hpp"

#include <cmath>
#include <stdexcept>

namespace bateman {

CoeffMatrix zero_matrix(int n) {
  return CoeffMatrix(static_cast<std::size_t>(n), std::vector<Coeff>(static_cast<std::size_t>(n)));
}

CoeffMatrix identity_matrix(int n) {
  CoeffMatrix m = zero_matrix(n);
  for (std::size_t i = 0; i < m.size(); ++i) m[i][i] = Coeff(1);
  return m;
}

PolyGauss::PolyGauss(Polynomial poly, CoeffMatrix quad, std::vector<Coeff> lin)
    : poly_(std::move(poly)), quad_(std::move(quad)), lin_(std::move(lin)) {
  const auto n = static_cast<std::size_t>(poly_.nvars());
  if (quad_.size() != n || lin_.size() != n) {
    throw std::invalid_argument("Gaussian exponent does not match polynomial arity");
  }
  for (const auto& row : quad_) {
    if (row.size() != n) throw std::invalid_argument("quadratic form must be square");
  }
  const Coeff half(Rational(1, 2));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!(quad_[i][j] == quad_[j][i])) {
        const Coeff mean = half * (quad_[i][j] + quad_[j][i]);
        quad_[i][j] = mean;
        quad_[j][i] = mean;
      }
    }
  }
}

PolyGauss PolyGauss::standard_vacuum(int nvars) {
  return PolyGauss(Polynomial::constant(nvars, Coeff(1)), identity_matrix(nvars),
                   std::vector<Coeff>(static_cast<std::size_t>(nvars)));
}

PolyGauss PolyGauss::gaussian(CoeffMatrix quad, std::vector<Coeff> lin) {
  const int n = static_cast<int>(lin.size());
  return PolyGauss(Polynomial::constant(n, Coeff(1)), std::move(quad), std::move(lin));
}

bool PolyGauss::has_real_exponent() const {
  for (std::size_t i = 0; i < quad_.size(); ++i) {
    if (!lin_[i].is_real()) return false;
    for (const auto& c : quad_[i]) {
      if (!c.is_real()) return false;
    }
  }
  return true;
}

Polynomial PolyGauss::exponent_gradient(int k) const {
  const int n = nvars();
  const auto row = static_cast<std::size_t>(k);
  Polynomial grad = Polynomial::constant(n, lin_.at(row));
  for (int j = 0; j < n; ++j) {
    grad.add_term(unit_index(n, j), -quad_[row][static_cast<std::size_t>(j)]);
  }
  return grad;
}

PolyGauss PolyGauss::derivative(int k) const {
  if (k < 0 || k >= nvars()) throw std::out_of_range("derivative index out of range");
  // d_k [P e^Q] = (d_k P + P d_k Q) e^Q
  return with_poly(poly_.derivative(k) + poly_ * exponent_gradient(k));
}

PolyGauss PolyGauss::times_variable(int k) const { return with_poly(poly_.times_variable(k)); }

PolyGauss PolyGauss::with_poly(Polynomial poly) const { return PolyGauss(std::move(poly), quad_, lin_); }

bool PolyGauss::same_exponent(const PolyGauss& o) const { return quad_ == o.quad_ && lin_ == o.lin_; }

std::complex<double> PolyGauss::evaluate(std::span<const double> x) const {
  std::complex<double> q = 0.0;
  const auto n = quad_.size();
  for (std::size_t i = 0; i < n; ++i) {
    q += lin_[i].to_complex() * x[i];
    for (std::size_t j = 0; j < n; ++j) q -= 0.5 * quad_[i][j].to_complex() * x[i] * x[j];
  }
  return poly_.evaluate(x) * std::exp(q);
}

std::string PolyGauss::str() const {
  std::string exponent;
  const auto n = quad_.size();
  Polynomial q(nvars());
  const Coeff minus_half(Rational(-1, 2));
  for (std::size_t i = 0; i < n; ++i) {
    q.add_term(unit_index(nvars(), static_cast<int>(i)), lin_[i]);
    for (std::size_t j = 0; j < n; ++j) {
      MultiIndex index = zero_index(nvars());
      index[i] += 1;
      index[j] += 1;
      q.add_term(index, minus_half * quad_[i][j]);
    }
  }
  return "(" + poly_.str() + ")*exp(" + q.str() + ")";
}

PolyGauss operator+(const PolyGauss& l, const PolyGauss& r) {
  if (!l.same_exponent(r)) {
    throw std::invalid_argument("cannot add PolyGauss functions with different exponents");
  }
  return l.with_poly(l.poly_ + r.poly_);
}

}  // namespace bateman
