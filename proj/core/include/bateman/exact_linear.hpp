#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bateman/field.hpp"

// Gauss-Jordan elimination over Q(sqrt2, i).

namespace bateman {

using CoeffRow = std::vector<Coeff>;

/// sum_j coeffs[j] * u_j = rhs, tagged with where it came from.
struct LinearEquation {
  CoeffRow coeffs;
  Coeff rhs;
  std::string label;

  std::string str(const std::vector<std::string>& unknown_names) const;
};

struct LinearSolveResult {
  bool consistent = false;
  std::size_t rank = 0;
  /// Particular solution with every free unknown set to zero (when consistent).
  CoeffRow solution;
  /// Indices into the input system forming an irreducible inconsistent subset (when not).
  std::vector<std::size_t> inconsistent_subset;
};

LinearSolveResult solve_linear_system(const std::vector<LinearEquation>& system, std::size_t unknowns);

/// Basis of {v : M v = 0} for a rows x cols matrix, each vector normalized so its first nonzero
/// entry is 1.
std::vector<CoeffRow> null_space(const std::vector<CoeffRow>& matrix, std::size_t cols);

}  // namespace bateman
