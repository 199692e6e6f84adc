#include "bateman/vacuum.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <stdexcept>

#include "bateman/quadrature.hpp"

namespace bateman {
namespace {

void require_first_order_family(std::span<const LinDiffOp> ops) {
  if (ops.empty()) throw std::invalid_argument("operator family is empty");
  const int n = ops.front().nvars();
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].nvars() != n) throw std::invalid_argument("operators act on different numbers of variables");
    if (ops[i].derivative_order() > 1) {
      throw std::invalid_argument("operator " + std::to_string(i) + " is not first order: " + ops[i].str());
    }
    if (ops[i].polynomial_degree() > 1) {
      throw std::invalid_argument("operator " + std::to_string(i) +
                                  " has polynomial coefficients of degree > 1: " + ops[i].str());
    }
  }
}

// Unknown layout: S_ij for i <= j in row-major order, then t_1..t_n.
struct AnsatzUnknowns {
  int n;
  std::size_t quad_index(int i, int j) const {
    if (i > j) std::swap(i, j);
    // rows 0..i-1 contribute n, n-1, ..., n-i+1 entries
    return static_cast<std::size_t>(i * n - i * (i - 1) / 2 + (j - i));
  }
  std::size_t lin_index(int k) const { return static_cast<std::size_t>(n * (n + 1) / 2 + k); }
  std::size_t count() const { return static_cast<std::size_t>(n * (n + 1) / 2 + n); }

  std::vector<std::string> names() const {
    std::vector<std::string> out(count());
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) out[quad_index(i, j)] = "S" + std::to_string(i + 1) + std::to_string(j + 1);
      out[lin_index(i)] = "t" + std::to_string(i + 1);
    }
    return out;
  }
};

struct AffineForm {
  CoeffRow coeffs;
  Coeff constant;
};

double quad_abs(const Quad& q) { return std::abs(q.to_double()); }

// Integrand restricted to the hyperplane, as R(y) exp(-1/2 y^T S y + t^T y + q0) on the
// free coordinates y.
struct Restriction {
  int free_dims = 0;
  Polynomial poly{1};
  CoeffMatrix quad;
  std::vector<Coeff> lin;
  Coeff q0;
  Coeff constant_value;  // used when free_dims == 0
  double jacobian = 1.0;
};

Restriction restrict_to_hyperplane(const DeltaDist& dist, const PolyGauss& f) {
  const int n = f.nvars();
  int pivot = 0;
  while (pivot < n && dist.normal[static_cast<std::size_t>(pivot)].is_zero()) ++pivot;
  if (pivot == n) throw std::invalid_argument("delta hyperplane normal is zero");

  const Quad inv_pivot = dist.normal[static_cast<std::size_t>(pivot)].inverse();
  std::vector<int> free_vars;
  for (int j = 0; j < n; ++j) {
    if (j != pivot) free_vars.push_back(j);
  }
  const int d = static_cast<int>(free_vars.size());

  Restriction r;
  r.free_dims = d;
  r.jacobian = 1.0 / quad_abs(dist.normal[static_cast<std::size_t>(pivot)]);

  // x = x0 + E y
  std::vector<Coeff> x0(static_cast<std::size_t>(n));
  x0[static_cast<std::size_t>(pivot)] = Coeff(dist.offset * inv_pivot);
  std::vector<std::vector<Coeff>> embed(static_cast<std::size_t>(n), std::vector<Coeff>(static_cast<std::size_t>(d)));
  for (int i = 0; i < d; ++i) {
    const auto j = static_cast<std::size_t>(free_vars[static_cast<std::size_t>(i)]);
    embed[j][static_cast<std::size_t>(i)] = Coeff(1);
    embed[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(i)] = Coeff(-dist.normal[j] * inv_pivot);
  }

  const auto& s = f.quad();
  const auto& t = f.lin();
  // q0 = -1/2 x0^T S x0 + t^T x0
  const Coeff half(Rational(1, 2));
  for (std::size_t i = 0; i < x0.size(); ++i) {
    r.q0 += t[i] * x0[i];
    for (std::size_t j = 0; j < x0.size(); ++j) r.q0 -= half * x0[i] * s[i][j] * x0[j];
  }

  if (d == 0) {
    Coeff value;
    for (const auto& [index, c] : f.poly().terms()) {
      Coeff mono = c;
      for (std::size_t k = 0; k < index.size(); ++k) {
        for (int e = 0; e < index[k]; ++e) mono *= x0[k];
      }
      value += mono;
    }
    r.constant_value = value;
    return r;
  }

  // S' = E^T S E, t' = E^T (t - S x0)
  r.quad = zero_matrix(d);
  r.lin.assign(static_cast<std::size_t>(d), Coeff());
  std::vector<Coeff> shifted = t;
  for (std::size_t i = 0; i < x0.size(); ++i) {
    for (std::size_t j = 0; j < x0.size(); ++j) shifted[i] -= s[i][j] * x0[j];
  }
  for (std::size_t a = 0; a < static_cast<std::size_t>(d); ++a) {
    for (std::size_t i = 0; i < x0.size(); ++i) r.lin[a] += embed[i][a] * shifted[i];
    for (std::size_t b = 0; b < static_cast<std::size_t>(d); ++b) {
      for (std::size_t i = 0; i < x0.size(); ++i) {
        if (embed[i][a].is_zero()) continue;
        for (std::size_t j = 0; j < x0.size(); ++j) r.quad[a][b] += embed[i][a] * s[i][j] * embed[j][b];
      }
    }
  }

  // substitute each x_i by its affine expression in y
  std::vector<Polynomial> coord;
  for (std::size_t i = 0; i < x0.size(); ++i) {
    Polynomial p = Polynomial::constant(d, x0[i]);
    for (int a = 0; a < d; ++a) p.add_term(unit_index(d, a), embed[i][static_cast<std::size_t>(a)]);
    coord.push_back(std::move(p));
  }
  Polynomial restricted(d);
  for (const auto& [index, c] : f.poly().terms()) {
    Polynomial mono = Polynomial::constant(d, c);
    for (std::size_t k = 0; k < index.size(); ++k) {
      for (int e = 0; e < index[k]; ++e) mono = mono * coord[k];
    }
    restricted += mono;
  }
  r.poly = std::move(restricted);
  return r;
}

std::complex<double> integrate_restriction(const Restriction& r, double tolerance, double& estimate) {
  const int d = r.free_dims;
  Eigen::MatrixXd s(d, d);
  Eigen::VectorXd t(d);
  for (int a = 0; a < d; ++a) {
    if (!r.lin[static_cast<std::size_t>(a)].is_real()) {
      throw std::invalid_argument("pairing requires a real Gaussian exponent");
    }
    t(a) = r.lin[static_cast<std::size_t>(a)].re().to_double();
    for (int b = 0; b < d; ++b) {
      const Coeff& v = r.quad[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      if (!v.is_real()) throw std::invalid_argument("pairing requires a real Gaussian exponent");
      s(a, b) = v.re().to_double();
    }
  }
  const Eigen::LLT<Eigen::MatrixXd> llt(s);
  if (llt.info() != Eigen::Success) {
    throw std::invalid_argument("restricted Gaussian is not integrable (quadratic form not positive definite)");
  }
  const Eigen::VectorXd mu = llt.solve(t);
  const Eigen::MatrixXd lower = llt.matrixL();
  // y = mu + L^{-T} z turns the exponent into -|z|^2/2 + const
  const Eigen::MatrixXd map = lower.transpose().triangularView<Eigen::Upper>().solve(
      Eigen::MatrixXd::Identity(d, d));
  const double log_det_map = -lower.diagonal().array().log().sum();
  const std::complex<double> prefactor =
      std::exp(r.q0.to_complex() + 0.5 * t.dot(mu) + log_det_map) * r.jacobian;

  const int degree = std::max(0, r.poly.degree());
  int order = std::max(4, degree / 2 + 2);
  const int max_order = d <= 2 ? 256 : 48;

  auto tensor_sum = [&](int q) {
    const GaussHermiteRule rule = gauss_hermite_rule(q);
    std::vector<int> idx(static_cast<std::size_t>(d), 0);
    std::vector<double> y(static_cast<std::size_t>(d));
    std::complex<double> sum = 0.0;
    while (true) {
      double w = 1.0;
      Eigen::VectorXd z(d);
      for (int a = 0; a < d; ++a) {
        z(a) = rule.nodes[static_cast<std::size_t>(idx[static_cast<std::size_t>(a)])];
        w *= rule.weights[static_cast<std::size_t>(idx[static_cast<std::size_t>(a)])];
      }
      const Eigen::VectorXd point = mu + map * z;
      for (int a = 0; a < d; ++a) y[static_cast<std::size_t>(a)] = point(a);
      sum += w * r.poly.evaluate(y);
      int a = 0;
      while (a < d && ++idx[static_cast<std::size_t>(a)] == q) idx[static_cast<std::size_t>(a++)] = 0;
      if (a == d) break;
    }
    return sum * prefactor;
  };

  std::complex<double> previous = tensor_sum(order);
  while (order * 2 <= max_order) {
    order *= 2;
    const std::complex<double> current = tensor_sum(order);
    estimate = std::abs(current - previous);
    if (estimate <= std::max(tolerance, 1e-13 * std::abs(current))) return current;
    previous = current;
  }
  throw QuadratureError("Gauss-Hermite refinement did not converge", estimate);
}

}  // namespace

AnsatzReport gaussian_ansatz_solve(std::span<const LinDiffOp> ops, std::span<const std::string> names) {
  require_first_order_family(ops);
  const int n = ops.front().nvars();
  const AnsatzUnknowns unknowns{n};

  std::vector<LinearEquation> system;
  for (std::size_t op_i = 0; op_i < ops.size(); ++op_i) {
    std::map<MultiIndex, AffineForm> forms;
    auto form_at = [&](const MultiIndex& m) -> AffineForm& {
      auto [it, inserted] = forms.try_emplace(m);
      if (inserted) it->second.coeffs.assign(unknowns.count(), Coeff());
      return it->second;
    };
    for (const auto& [key, c] : ops[op_i].terms()) {
      const auto& [alpha, beta] = key;
      if (total_degree(beta) == 0) {
        form_at(alpha).constant += c;
        continue;
      }
      int k = 0;
      while (beta[static_cast<std::size_t>(k)] == 0) ++k;
      // c x^alpha (t_k - sum_j S_kj x_j)
      form_at(alpha).coeffs[unknowns.lin_index(k)] += c;
      for (int j = 0; j < n; ++j) {
        MultiIndex raised = alpha;
        raised[static_cast<std::size_t>(j)] += 1;
        form_at(raised).coeffs[unknowns.quad_index(k, j)] -= c;
      }
    }
    const std::string op_name = op_i < names.size() ? names[op_i] : "op" + std::to_string(op_i + 1);
    for (auto& [mono, form] : forms) {
      bool trivial = form.constant.is_zero();
      for (const auto& v : form.coeffs) trivial = trivial && v.is_zero();
      if (trivial) continue;
      const std::string m = monomial_str(mono);
      system.push_back(LinearEquation{std::move(form.coeffs), -form.constant,
                                      op_name + ": coefficient of " + (m.empty() ? "1" : m)});
    }
  }

  AnsatzReport report;
  report.unknown_names = unknowns.names();
  const LinearSolveResult solved = solve_linear_system(system, unknowns.count());
  if (!solved.consistent) {
    for (const auto i : solved.inconsistent_subset) report.inconsistency.push_back(system[i]);
    return report;
  }

  GaussianWitness witness{zero_matrix(n), std::vector<Coeff>(static_cast<std::size_t>(n))};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      witness.quad[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = solved.solution[unknowns.quad_index(i, j)];
    }
    witness.lin[static_cast<std::size_t>(i)] = solved.solution[unknowns.lin_index(i)];
  }
  const PolyGauss psi = witness.function();
  for (const auto& op : ops) {
    if (!op.apply(psi).is_zero()) {
      throw std::logic_error("ansatz witness failed re-check against " + op.str());
    }
  }
  report.solvable = true;
  report.witness = std::move(witness);
  return report;
}

LinDiffOp MultiplierCert::recompose(std::span<const LinDiffOp> ops) const {
  if (ops.size() != combo.size()) throw std::invalid_argument("certificate/operator count mismatch");
  LinDiffOp sum(ops.front().nvars());
  for (std::size_t j = 0; j < ops.size(); ++j) sum += combo[j] * ops[j];
  return sum;
}

std::vector<MultiplierCert> multiplier_reduction(std::span<const LinDiffOp> ops) {
  require_first_order_family(ops);
  std::map<LinDiffOp::Key, std::size_t> columns;
  std::vector<LinDiffOp> derivative_parts;
  for (const auto& op : ops) {
    derivative_parts.push_back(op.derivative_part());
    for (const auto& [key, c] : derivative_parts.back().terms()) columns.try_emplace(key, columns.size());
  }
  // rows: derivative terms, columns: operators
  std::vector<CoeffRow> matrix(columns.size(), CoeffRow(ops.size()));
  for (std::size_t j = 0; j < ops.size(); ++j) {
    for (const auto& [key, c] : derivative_parts[j].terms()) matrix[columns.at(key)][j] = c;
  }
  std::vector<MultiplierCert> certs;
  for (auto& combo : null_space(matrix, ops.size())) {
    MultiplierCert cert{std::move(combo), Polynomial(ops.front().nvars())};
    const LinDiffOp sum = cert.recompose(ops);
    if (!sum.is_multiplication()) throw std::logic_error("null-space combination kept a derivative part");
    cert.multiplier = sum.multiplication_part();
    if (!cert.multiplier.is_zero()) certs.push_back(std::move(cert));
  }
  return certs;
}

DeltaDist DeltaDist::coordinate_plane(int nvars, int k) {
  std::vector<Quad> normal(static_cast<std::size_t>(nvars));
  normal.at(static_cast<std::size_t>(k)) = Quad(1);
  PolyGauss one(Polynomial::constant(nvars, Coeff(1)), zero_matrix(nvars),
                std::vector<Coeff>(static_cast<std::size_t>(nvars)));
  return DeltaDist{std::move(normal), Quad(), std::move(one)};
}

PairingResult delta_pair(const DeltaDist& dist, const PolyGauss& test, double tolerance) {
  const int n = test.nvars();
  if (static_cast<int>(dist.normal.size()) != n || dist.envelope.nvars() != n) {
    throw std::invalid_argument("delta distribution and test function have different dimensions");
  }
  const PolyGauss& env = dist.envelope;
  CoeffMatrix s = test.quad();
  std::vector<Coeff> t = test.lin();
  for (std::size_t i = 0; i < s.size(); ++i) {
    t[i] += env.lin()[i].conj();
    for (std::size_t j = 0; j < s.size(); ++j) s[i][j] += env.quad()[i][j].conj();
  }
  const PolyGauss integrand(env.poly().conj() * test.poly(), std::move(s), std::move(t));

  const Restriction r = restrict_to_hyperplane(dist, integrand);
  PairingResult result;
  if (r.free_dims == 0) {
    result.exactly_zero = r.constant_value.is_zero();
    result.value = result.exactly_zero ? 0.0 : r.constant_value.to_complex() * std::exp(r.q0.to_complex()) * r.jacobian;
    return result;
  }
  if (r.poly.is_zero()) {
    result.exactly_zero = true;
    result.value = 0.0;
    return result;
  }
  result.value = integrate_restriction(r, tolerance, result.error_estimate);
  return result;
}

DistributionalCheck distributional_vacuum_check(std::span<const LinDiffOp> ops, const DeltaDist& dist,
                                                std::span<const PolyGauss> tests, double tolerance) {
  if (ops.empty() || tests.empty()) throw std::invalid_argument("need at least one operator and one test function");
  DistributionalCheck check;
  check.tolerance = tolerance;
  for (const auto& op : ops) {
    const LinDiffOp adj = op.adjoint();
    auto& row = check.pairings.emplace_back();
    for (const auto& f : tests) {
      const PairingResult p = delta_pair(dist, adj.apply(f), tolerance);
      row.push_back(p.value);
      check.max_abs = std::max(check.max_abs, std::abs(p.value));
    }
  }
  check.passes = check.max_abs <= tolerance;
  return check;
}

std::vector<PolyGauss> pairing_test_family(int nvars, int count) {
  if (nvars < 1 || count < 1) throw std::invalid_argument("test family needs nvars >= 1 and count >= 1");
  std::vector<PolyGauss> family;
  for (int j = 0; j < count; ++j) {
    Polynomial poly = Polynomial::constant(nvars, Coeff(1));
    CoeffMatrix s = zero_matrix(nvars);
    std::vector<Coeff> t(static_cast<std::size_t>(nvars));
    for (int i = 0; i < nvars; ++i) {
      poly.add_term(unit_index(nvars, i), Coeff(Rational(j + i + 1, 4)));
      s[i][i] = Coeff(Rational(4 + j + i, 4));
      t[i] = Coeff(Rational(j - 4 + i, 5));
      // off-diagonal 1/8 keeps S diagonally dominant
      for (int l = 0; l < nvars; ++l) {
        if (l != i) s[i][l] = Coeff(Rational(1, 8));
      }
    }
    MultiIndex square = zero_index(nvars);
    square[static_cast<std::size_t>(j % nvars)] = 2;
    poly.add_term(square, Coeff(Rational(j % 3, 2)));
    family.push_back(PolyGauss(std::move(poly), std::move(s), std::move(t)));
  }
  return family;
}

}  // namespace bateman
