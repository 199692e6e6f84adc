#include "bateman/exact_linear.hpp"

#include <stdexcept>

namespace bateman {
namespace {

struct Tableau {
  std::vector<CoeffRow> rows;  // coefficients | rhs | provenance weights
  std::size_t cols = 0;
  std::vector<std::size_t> pivot_cols;
};

// Reduces the first `cols` columns to reduced row-echelon form; remaining columns ride along.
void row_reduce(Tableau& t) {
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < t.cols && pivot_row < t.rows.size(); ++col) {
    std::size_t found = pivot_row;
    while (found < t.rows.size() && t.rows[found][col].is_zero()) ++found;
    if (found == t.rows.size()) continue;
    std::swap(t.rows[pivot_row], t.rows[found]);
    const Coeff inv = t.rows[pivot_row][col].inverse();
    for (auto& v : t.rows[pivot_row]) v *= inv;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      if (r == pivot_row || t.rows[r][col].is_zero()) continue;
      const Coeff factor = t.rows[r][col];
      for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
        if (!t.rows[pivot_row][c].is_zero()) t.rows[r][c] -= factor * t.rows[pivot_row][c];
      }
    }
    t.pivot_cols.push_back(col);
    ++pivot_row;
  }
}

Tableau build(const std::vector<LinearEquation>& system, const std::vector<std::size_t>& subset,
              std::size_t unknowns) {
  Tableau t;
  t.cols = unknowns;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    const LinearEquation& eq = system[subset[i]];
    if (eq.coeffs.size() != unknowns) {
      throw std::invalid_argument("equation '" + eq.label + "' has the wrong number of unknowns");
    }
    CoeffRow row = eq.coeffs;
    row.push_back(eq.rhs);
    row.resize(unknowns + 1 + subset.size());
    row[unknowns + 1 + i] = Coeff(1);
    t.rows.push_back(std::move(row));
  }
  return t;
}

// Row of the reduced tableau reading 0 = nonzero, if any.
const CoeffRow* contradiction(const Tableau& t) {
  for (std::size_t r = t.pivot_cols.size(); r < t.rows.size(); ++r) {
    if (!t.rows[r][t.cols].is_zero()) return &t.rows[r];
  }
  return nullptr;
}

bool is_consistent(const std::vector<LinearEquation>& system, const std::vector<std::size_t>& subset,
                   std::size_t unknowns) {
  Tableau t = build(system, subset, unknowns);
  row_reduce(t);
  return contradiction(t) == nullptr;
}

}  // namespace

std::string LinearEquation::str(const std::vector<std::string>& unknown_names) const {
  std::string lhs;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j].is_zero()) continue;
    std::string c = coeffs[j].str();
    const std::string& name = j < unknown_names.size() ? unknown_names[j] : "u" + std::to_string(j);
    std::string piece = c == "1" ? name : c == "-1" ? "-" + name : c + "*" + name;
    if (lhs.empty()) {
      lhs = piece;
    } else if (piece.front() == '-') {
      lhs += " - " + piece.substr(1);
    } else {
      lhs += " + " + piece;
    }
  }
  if (lhs.empty()) lhs = "0";
  return lhs + " = " + rhs.str();
}

LinearSolveResult solve_linear_system(const std::vector<LinearEquation>& system, std::size_t unknowns) {
  std::vector<std::size_t> all(system.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  Tableau t = build(system, all, unknowns);
  row_reduce(t);

  LinearSolveResult result;
  result.rank = t.pivot_cols.size();
  if (const CoeffRow* bad = contradiction(t)) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < system.size(); ++i) {
      if (!(*bad)[unknowns + 1 + i].is_zero()) subset.push_back(i);
    }
    // deletion filter: drop equations whose removal keeps the subset contradictory
    for (std::size_t k = 0; k < subset.size();) {
      std::vector<std::size_t> trial = subset;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(k));
      if (!trial.empty() && !is_consistent(system, trial, unknowns)) {
        subset = std::move(trial);
      } else {
        ++k;
      }
    }
    result.inconsistent_subset = std::move(subset);
    return result;
  }
  result.consistent = true;
  result.solution.assign(unknowns, Coeff());
  for (std::size_t r = 0; r < t.pivot_cols.size(); ++r) {
    result.solution[t.pivot_cols[r]] = t.rows[r][unknowns];
  }
  return result;
}

std::vector<CoeffRow> null_space(const std::vector<CoeffRow>& matrix, std::size_t cols) {
  Tableau t;
  t.cols = cols;
  for (const auto& row : matrix) {
    if (row.size() != cols) throw std::invalid_argument("ragged matrix in null_space");
    t.rows.push_back(row);
  }
  row_reduce(t);
  std::vector<bool> is_pivot(cols, false);
  for (const auto c : t.pivot_cols) is_pivot[c] = true;

  std::vector<CoeffRow> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    CoeffRow v(cols);
    v[free] = Coeff(1);
    for (std::size_t r = 0; r < t.pivot_cols.size(); ++r) v[t.pivot_cols[r]] = -t.rows[r][free];
    std::size_t lead = 0;
    while (v[lead].is_zero()) ++lead;
    const Coeff inv = v[lead].inverse();
    for (auto& x : v) x *= inv;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace bateman
