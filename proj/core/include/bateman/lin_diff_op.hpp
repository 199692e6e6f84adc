#pragma once

#include <map>
#include <string>
#include <utility>

#include "bateman/poly_gauss.hpp"

namespace bateman {

/// Linear differential operator with polynomial coefficients,
///   sum_{alpha, beta} c_{alpha beta} x^alpha d^beta,
/// stored in normal order (every multiplication left of every derivative). Two operators are
/// equal iff their normal-ordered term maps are equal.
class LinDiffOp {
 public:
  /// (alpha, beta): multiplication exponents, derivative exponents.
  using Key = std::pair<MultiIndex, MultiIndex>;
  using Terms = std::map<Key, Coeff>;

  explicit LinDiffOp(int nvars = 1);

  static LinDiffOp identity(int nvars);
  static LinDiffOp scalar(int nvars, const Coeff& c);
  /// Multiplication by x_k.
  static LinDiffOp position(int nvars, int k);
  /// d/dx_k.
  static LinDiffOp derivative(int nvars, int k);
  static LinDiffOp term(const MultiIndex& alpha, const MultiIndex& beta, const Coeff& c);
  static LinDiffOp multiplication(const Polynomial& p);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coeff coefficient(const MultiIndex& alpha, const MultiIndex& beta) const;
  /// Highest |beta| over all terms; -1 for the zero operator.
  int derivative_order() const;
  /// Highest |alpha| over all terms; -1 for the zero operator.
  int polynomial_degree() const;

  /// Terms with beta == 0, as a polynomial.
  Polynomial multiplication_part() const;
  /// Terms with beta != 0.
  LinDiffOp derivative_part() const;
  bool is_multiplication() const { return derivative_part().is_zero(); }

  void add_term(const MultiIndex& alpha, const MultiIndex& beta, const Coeff& c);

  PolyGauss apply(const PolyGauss& f) const;
  /// Formal L2 adjoint: x_k -> x_k, d_k -> -d_k, scalars conjugated, order reversed.
  LinDiffOp adjoint() const;
  std::string str() const;

  LinDiffOp& operator+=(const LinDiffOp& o);
  LinDiffOp& operator-=(const LinDiffOp& o);
  LinDiffOp& operator*=(const Coeff& c);
  LinDiffOp operator-() const { return *this * Coeff(-1); }

  friend LinDiffOp operator+(LinDiffOp l, const LinDiffOp& r) { return l += r; }
  friend LinDiffOp operator-(LinDiffOp l, const LinDiffOp& r) { return l -= r; }
  friend LinDiffOp operator*(LinDiffOp l, const Coeff& c) { return l *= c; }
  friend LinDiffOp operator*(const Coeff& c, LinDiffOp r) { return r *= c; }
  /// Operator product (composition) in normal order.
  friend LinDiffOp operator*(const LinDiffOp& left, const LinDiffOp& right);
  friend bool operator==(const LinDiffOp& l, const LinDiffOp& r) {
    return l.nvars_ == r.nvars_ && l.terms_ == r.terms_;
  }

 private:
  int nvars_;
  Terms terms_;
};

/// Free-function spellings used throughout the reporting code.
PolyGauss op_apply(const LinDiffOp& op, const PolyGauss& f);
LinDiffOp op_compose(const LinDiffOp& left, const LinDiffOp& right);
LinDiffOp op_adjoint(const LinDiffOp& op);
LinDiffOp commutator(const LinDiffOp& x, const LinDiffOp& y);

}  // namespace bateman
