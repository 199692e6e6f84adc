#include "bateman/lin_diff_op.hpp"

#include <stdexcept>

namespace bateman {
namespace {

void require_same_arity(int l, int r) {
  if (l != r) {
    throw std::invalid_argument("operator dimension mismatch: " + std::to_string(l) + " vs " +
                                std::to_string(r) + " variables");
  }
}

// Coefficient of x^{c-j} d^{b-j} in the normal-ordered expansion of d^b x^c:
// binom(b, j) * c! / (c - j)!.
Integer exchange_weight(int b, int c, int j) {
  Integer binom;
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(j));
  Integer falling = 1;
  for (int s = 0; s < j; ++s) falling *= (c - s);
  return binom * falling;
}

struct ComposeContext {
  const MultiIndex& alpha;
  const MultiIndex& beta;
  const MultiIndex& gamma;
  const MultiIndex& delta;
  Coeff weight;
  LinDiffOp& out;
};

void expand_variable(ComposeContext& ctx, std::size_t var, MultiIndex& mul, MultiIndex& der,
                     const Integer& acc) {
  if (var == mul.size()) {
    ctx.out.add_term(mul, der, ctx.weight * Coeff(Rational(acc)));
    return;
  }
  const int b = ctx.beta[var];
  const int c = ctx.gamma[var];
  for (int j = 0; j <= std::min(b, c); ++j) {
    mul[var] = ctx.alpha[var] + c - j;
    der[var] = b - j + ctx.delta[var];
    expand_variable(ctx, var + 1, mul, der, acc * exchange_weight(b, c, j));
  }
}

}  // namespace

LinDiffOp::LinDiffOp(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw std::invalid_argument("operator needs at least one variable");
}

LinDiffOp LinDiffOp::identity(int nvars) { return scalar(nvars, Coeff(1)); }

LinDiffOp LinDiffOp::scalar(int nvars, const Coeff& c) {
  LinDiffOp op(nvars);
  op.add_term(zero_index(nvars), zero_index(nvars), c);
  return op;
}

LinDiffOp LinDiffOp::position(int nvars, int k) {
  LinDiffOp op(nvars);
  op.add_term(unit_index(nvars, k), zero_index(nvars), Coeff(1));
  return op;
}

LinDiffOp LinDiffOp::derivative(int nvars, int k) {
  LinDiffOp op(nvars);
  op.add_term(zero_index(nvars), unit_index(nvars, k), Coeff(1));
  return op;
}

LinDiffOp LinDiffOp::term(const MultiIndex& alpha, const MultiIndex& beta, const Coeff& c) {
  LinDiffOp op(static_cast<int>(alpha.size()));
  op.add_term(alpha, beta, c);
  return op;
}

LinDiffOp LinDiffOp::multiplication(const Polynomial& p) {
  LinDiffOp op(p.nvars());
  for (const auto& [index, c] : p.terms()) op.add_term(index, zero_index(p.nvars()), c);
  return op;
}

Coeff LinDiffOp::coefficient(const MultiIndex& alpha, const MultiIndex& beta) const {
  const auto it = terms_.find(Key{alpha, beta});
  return it == terms_.end() ? Coeff() : it->second;
}

int LinDiffOp::derivative_order() const {
  int order = -1;
  for (const auto& [key, c] : terms_) order = std::max(order, total_degree(key.second));
  return order;
}

int LinDiffOp::polynomial_degree() const {
  int degree = -1;
  for (const auto& [key, c] : terms_) degree = std::max(degree, total_degree(key.first));
  return degree;
}

Polynomial LinDiffOp::multiplication_part() const {
  Polynomial p(nvars_);
  for (const auto& [key, c] : terms_) {
    if (total_degree(key.second) == 0) p.add_term(key.first, c);
  }
  return p;
}

LinDiffOp LinDiffOp::derivative_part() const {
  LinDiffOp op(nvars_);
  for (const auto& [key, c] : terms_) {
    if (total_degree(key.second) > 0) op.terms_.emplace(key, c);
  }
  return op;
}

void LinDiffOp::add_term(const MultiIndex& alpha, const MultiIndex& beta, const Coeff& c) {
  if (static_cast<int>(alpha.size()) != nvars_ || static_cast<int>(beta.size()) != nvars_) {
    throw std::invalid_argument("multi-index arity does not match operator");
  }
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    if (alpha[k] < 0 || beta[k] < 0) throw std::invalid_argument("negative exponent in operator term");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{alpha, beta}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolyGauss LinDiffOp::apply(const PolyGauss& f) const {
  require_same_arity(nvars_, f.nvars());
  Polynomial result(nvars_);
  for (const auto& [key, c] : terms_) {
    PolyGauss g = f;
    for (int k = 0; k < nvars_; ++k) {
      for (int e = 0; e < key.second[static_cast<std::size_t>(k)]; ++e) g = g.derivative(k);
    }
    result += c * g.poly().times_monomial(key.first);
  }
  return f.with_poly(std::move(result));
}

LinDiffOp LinDiffOp::adjoint() const {
  LinDiffOp out(nvars_);
  const MultiIndex zero = zero_index(nvars_);
  for (const auto& [key, c] : terms_) {
    // (c x^a d^b)^dagger = conj(c) (-1)^{|b|} d^b x^a
    const Coeff sign = total_degree(key.second) % 2 == 0 ? Coeff(1) : Coeff(-1);
    out += term(zero, key.second, sign * c.conj()) * term(key.first, zero, Coeff(1));
  }
  return out;
}

std::string LinDiffOp::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    std::string mono = monomial_str(key.first);
    const std::string der = monomial_str(key.second, "d");
    if (!der.empty()) mono = mono.empty() ? der : mono + "*" + der;
    std::string coeff = c.str();
    std::string piece;
    if (mono.empty()) {
      piece = coeff;
    } else if (coeff == "1") {
      piece = mono;
    } else if (coeff == "-1") {
      piece = "-" + mono;
    } else {
      if (coeff.find(' ') != std::string::npos && coeff.front() != '(') coeff = "(" + coeff + ")";
      piece = coeff + "*" + mono;
    }
    if (out.empty()) {
      out = piece;
    } else if (piece.front() == '-') {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
  }
  return out;
}

LinDiffOp& LinDiffOp::operator+=(const LinDiffOp& o) {
  require_same_arity(nvars_, o.nvars_);
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
  return *this;
}

LinDiffOp& LinDiffOp::operator-=(const LinDiffOp& o) {
  require_same_arity(nvars_, o.nvars_);
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
  return *this;
}

LinDiffOp& LinDiffOp::operator*=(const Coeff& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, value] : terms_) value *= c;
  return *this;
}

LinDiffOp operator*(const LinDiffOp& left, const LinDiffOp& right) {
  require_same_arity(left.nvars_, right.nvars_);
  LinDiffOp out(left.nvars_);
  const auto n = static_cast<std::size_t>(left.nvars_);
  MultiIndex mul(n), der(n);
  for (const auto& [lk, lc] : left.terms_) {
    for (const auto& [rk, rc] : right.terms_) {
      ComposeContext ctx{lk.first, lk.second, rk.first, rk.second, lc * rc, out};
      expand_variable(ctx, 0, mul, der, Integer(1));
    }
  }
  return out;
}

PolyGauss op_apply(const LinDiffOp& op, const PolyGauss& f) { return op.apply(f); }
LinDiffOp op_compose(const LinDiffOp& left, const LinDiffOp& right) { return left * right; }
LinDiffOp op_adjoint(const LinDiffOp& op) { return op.adjoint(); }
LinDiffOp commutator(const LinDiffOp& x, const LinDiffOp& y) { return x * y - y * x; }

}  // namespace bateman
