#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bateman {

/// Nodes and weights for  integral f(z) exp(-z^2/2) dz  over the real line (probabilists'
/// Hermite weight), via Golub-Welsch. Exact for polynomials of degree < 2 * order.
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussHermiteRule gauss_hermite_rule(int order);

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  /// Last difference between successive refinements.
  double residual() const { return residual_; }

 private:
  double residual_;
};

}  // namespace bateman
