#include "bateman/polynomial.hpp"

#include <numeric>
#include <stdexcept>

namespace bateman {

MultiIndex zero_index(int nvars) { return MultiIndex(static_cast<std::size_t>(nvars), 0); }

MultiIndex unit_index(int nvars, int k) {
  if (k < 0 || k >= nvars) {
    throw std::out_of_range("variable index " + std::to_string(k) + " outside [0, " +
                            std::to_string(nvars) + ")");
  }
  MultiIndex index = zero_index(nvars);
  index[static_cast<std::size_t>(k)] = 1;
  return index;
}

int total_degree(const MultiIndex& index) { return std::accumulate(index.begin(), index.end(), 0); }

std::string monomial_str(const MultiIndex& index, const char* symbol) {
  std::string out;
  for (std::size_t k = 0; k < index.size(); ++k) {
    if (index[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += symbol + std::to_string(k + 1);
    if (index[k] > 1) out += "^" + std::to_string(index[k]);
  }
  return out;
}

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  if (nvars < 1) {
    throw std::invalid_argument("polynomial needs at least one variable");
  }
}

Polynomial Polynomial::constant(int nvars, const Coeff& c) {
  Polynomial p(nvars);
  p.add_term(zero_index(nvars), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int k) {
  Polynomial p(nvars);
  p.add_term(unit_index(nvars, k), Coeff(1));
  return p;
}

Polynomial Polynomial::monomial(const MultiIndex& index, const Coeff& c) {
  Polynomial p(static_cast<int>(index.size()));
  p.add_term(index, c);
  return p;
}

Coeff Polynomial::coefficient(const MultiIndex& index) const {
  const auto it = terms_.find(index);
  return it == terms_.end() ? Coeff() : it->second;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [index, c] : terms_) d = std::max(d, total_degree(index));
  return d;
}

void Polynomial::add_term(const MultiIndex& index, const Coeff& c) {
  if (static_cast<int>(index.size()) != nvars_) {
    throw std::invalid_argument("monomial arity does not match polynomial");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::derivative(int k) const {
  Polynomial out(nvars_);
  const auto slot = static_cast<std::size_t>(k);
  for (const auto& [index, c] : terms_) {
    if (index[slot] == 0) continue;
    MultiIndex lowered = index;
    lowered[slot] -= 1;
    out.add_term(lowered, c * Coeff(index[slot]));
  }
  return out;
}

Polynomial Polynomial::times_variable(int k) const { return times_monomial(unit_index(nvars_, k)); }

Polynomial Polynomial::times_monomial(const MultiIndex& shift) const {
  Polynomial out(nvars_);
  for (const auto& [index, c] : terms_) {
    MultiIndex raised = index;
    for (std::size_t j = 0; j < raised.size(); ++j) raised[j] += shift[j];
    out.terms_.emplace(std::move(raised), c);
  }
  return out;
}

Polynomial Polynomial::conj() const {
  Polynomial out(nvars_);
  for (const auto& [index, c] : terms_) out.terms_.emplace(index, c.conj());
  return out;
}

std::complex<double> Polynomial::evaluate(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != nvars_) {
    throw std::invalid_argument("evaluation point has wrong dimension");
  }
  std::complex<double> sum = 0.0;
  for (const auto& [index, c] : terms_) {
    double mono = 1.0;
    for (std::size_t j = 0; j < index.size(); ++j) {
      for (int e = 0; e < index[j]; ++e) mono *= x[j];
    }
    sum += c.to_complex() * mono;
  }
  return sum;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [index, c] : terms_) {
    const std::string mono = monomial_str(index);
    std::string coeff = c.str();
    std::string piece;
    if (mono.empty()) {
      piece = coeff;
    } else if (coeff == "1") {
      piece = mono;
    } else if (coeff == "-1") {
      piece = "-" + mono;
    } else {
      if (coeff.find_first_of(" ") != std::string::npos && coeff.front() != '(') coeff = "(" + coeff + ")";
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

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial arity mismatch");
  for (const auto& [index, c] : o.terms_) add_term(index, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial arity mismatch");
  for (const auto& [index, c] : o.terms_) add_term(index, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Coeff& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [index, value] : terms_) value *= c;
  return *this;
}

Polynomial Polynomial::operator-() const { return *this * Coeff(-1); }

Polynomial operator*(const Polynomial& l, const Polynomial& r) {
  if (l.nvars_ != r.nvars_) throw std::invalid_argument("polynomial arity mismatch");
  Polynomial out(l.nvars_);
  for (const auto& [li, lc] : l.terms_) {
    for (const auto& [ri, rc] : r.terms_) {
      MultiIndex index = li;
      for (std::size_t j = 0; j < index.size(); ++j) index[j] += ri[j];
      out.add_term(index, lc * rc);
    }
  }
  return out;
}

}  // namespace bateman
