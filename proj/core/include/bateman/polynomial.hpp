#pragma once

#include <complex>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "bateman/field.hpp"

namespace bateman {

/// Exponent vector of a monomial x1^e1 ... xn^en.
using MultiIndex = std::vector<int>;

MultiIndex zero_index(int nvars);
MultiIndex unit_index(int nvars, int k);
int total_degree(const MultiIndex& index);

/// Multivariate polynomial with coefficients in Q(sqrt2, i). Zero terms are never stored.
class Polynomial {
 public:
  using Terms = std::map<MultiIndex, Coeff>;

  explicit Polynomial(int nvars = 1);
  static Polynomial constant(int nvars, const Coeff& c);
  /// The coordinate function x_k (0-based k).
  static Polynomial variable(int nvars, int k);
  static Polynomial monomial(const MultiIndex& index, const Coeff& c);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coeff coefficient(const MultiIndex& index) const;
  int degree() const;

  void add_term(const MultiIndex& index, const Coeff& c);

  Polynomial derivative(int k) const;
  Polynomial times_variable(int k) const;
  Polynomial times_monomial(const MultiIndex& index) const;
  Polynomial conj() const;
  std::complex<double> evaluate(std::span<const double> x) const;
  std::string str() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Coeff& c);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial l, const Polynomial& r) { return l += r; }
  friend Polynomial operator-(Polynomial l, const Polynomial& r) { return l -= r; }
  friend Polynomial operator*(Polynomial l, const Coeff& c) { return l *= c; }
  friend Polynomial operator*(const Coeff& c, Polynomial r) { return r *= c; }
  friend Polynomial operator*(const Polynomial& l, const Polynomial& r);
  friend bool operator==(const Polynomial& l, const Polynomial& r) {
    return l.nvars_ == r.nvars_ && l.terms_ == r.terms_;
  }

 private:
  int nvars_;
  Terms terms_;
};

std::string monomial_str(const MultiIndex& index, const char* symbol = "x");

}  // namespace bateman
