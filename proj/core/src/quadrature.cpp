#include "bateman/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

namespace bateman {

GaussHermiteRule gauss_hermite_rule(int order) {
  if (order < 1) throw std::invalid_argument("Gauss-Hermite order must be positive");
  // Jacobi matrix of the monic probabilists' Hermite recurrence He_{k+1} = z He_k - k He_{k-1}
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(order, order);
  for (int k = 1; k < order; ++k) {
    jacobi(k, k - 1) = std::sqrt(static_cast<double>(k));
    jacobi(k - 1, k) = jacobi(k, k - 1);
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  if (solver.info() != Eigen::Success) {
    throw QuadratureError("Golub-Welsch eigensolve failed", 0.0);
  }
  const double mass = std::sqrt(2.0 * std::numbers::pi);
  GaussHermiteRule rule;
  rule.nodes.resize(static_cast<std::size_t>(order));
  rule.weights.resize(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) {
    rule.nodes[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    const double v0 = solver.eigenvectors()(0, i);
    rule.weights[static_cast<std::size_t>(i)] = mass * v0 * v0;
  }
  return rule;
}

}  // namespace bateman
