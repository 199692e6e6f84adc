#include "bateman/fock.hpp"

#include "bateman/csv.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace bateman {
namespace {

using cd = std::complex<double>;

ComplexMatrix single_lower(int n) {
  ComplexMatrix a = ComplexMatrix::Zero(n, n);
  for (int k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  return a;
}

ComplexMatrix kron(const ComplexMatrix& l, const ComplexMatrix& r) {
  ComplexMatrix out(l.rows() * r.rows(), l.cols() * r.cols());
  for (Eigen::Index i = 0; i < l.rows(); ++i) {
    for (Eigen::Index j = 0; j < l.cols(); ++j) {
      out.block(i * r.rows(), j * r.cols(), r.rows(), r.cols()) = l(i, j) * r;
    }
  }
  return out;
}

struct TwoModeLadders {
  ComplexMatrix a1, a2, a1d, a2d;

  explicit TwoModeLadders(int n) {
    const ComplexMatrix a = single_lower(n);
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);
    a1 = kron(a, id);
    a2 = kron(id, a);
    a1d = a1.adjoint();
    a2d = a2.adjoint();
  }

  // (s1 * x + s2 * y) / sqrt2, the pattern shared by A_j and B_j
  static ComplexMatrix combine(double s1, const ComplexMatrix& x, double s2, const ComplexMatrix& y) {
    return (s1 * x + s2 * y) / std::sqrt(2.0);
  }
  ComplexMatrix A1() const { return combine(1, a1, -1, a2d); }
  ComplexMatrix A2() const { return combine(-1, a1d, 1, a2); }
  ComplexMatrix B1() const { return combine(1, a1d, 1, a2); }
  ComplexMatrix B2() const { return combine(1, a1, 1, a2d); }
};

ComplexMatrix hamiltonian_matrix(const ExactOscillatorParams& params, HamiltonianForm form, int n) {
  params.validate();
  const TwoModeLadders l(n);
  const double omega = params.omega.get_d();
  const cd strength = cd(0.0, 1.0) * Rational(params.gamma / (2 * params.m)).get_d();
  const auto dim = l.a1.rows();
  if (form == HamiltonianForm::Ladder) {
    return omega * (l.a1d * l.a1 - l.a2d * l.a2) + strength * (l.a1 * l.a2 - l.a1d * l.a2d);
  }
  const ComplexMatrix n1 = l.B1() * l.A1();
  const ComplexMatrix n2 = l.B2() * l.A2();
  return omega * (n1 - n2) + strength * (n1 + n2 + ComplexMatrix::Identity(dim, dim));
}

ComplexMatrix restrict(const ComplexMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  ComplexMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
  }
  return out;
}

double spectral_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

int total_excitation(int modes, int cutoff, int index) {
  return modes == 1 ? index : index / cutoff + index % cutoff;
}

const std::map<std::string, FockOpKind>& kind_names() {
  static const std::map<std::string, FockOpKind> names{
      {"a", FockOpKind::Lower},          {"adag", FockOpKind::Raise},
      {"x", FockOpKind::Position},       {"p", FockOpKind::Momentum},
      {"X_squeeze", FockOpKind::Squeeze}, {"X_unitary", FockOpKind::UnitarySqueeze},
      {"a1", FockOpKind::Lower1},        {"a2", FockOpKind::Lower2},
      {"a1dag", FockOpKind::Raise1},     {"a2dag", FockOpKind::Raise2},
      {"A1", FockOpKind::A1},            {"A2", FockOpKind::A2},
      {"B1", FockOpKind::B1},            {"B2", FockOpKind::B2},
      {"H", FockOpKind::Hamiltonian},
  };
  return names;
}

}  // namespace

FockOpKind fock_kind_from_name(const std::string& name) {
  const auto it = kind_names().find(name);
  if (it == kind_names().end()) throw std::invalid_argument("unknown Fock operator '" + name + "'");
  return it->second;
}

int fock_modes(FockOpKind kind) {
  switch (kind) {
    case FockOpKind::Lower:
    case FockOpKind::Raise:
    case FockOpKind::Position:
    case FockOpKind::Momentum:
    case FockOpKind::Squeeze:
    case FockOpKind::UnitarySqueeze:
      return 1;
    default:
      return 2;
  }
}

FockOp build_fock(const FockOpSpec& spec, int cutoff) {
  if (cutoff < 2) throw std::invalid_argument("Fock cutoff must be at least 2, got " + std::to_string(cutoff));
  FockOp op{fock_modes(spec.kind), cutoff, {}};
  if (op.modes == 1) {
    const ComplexMatrix a = single_lower(cutoff);
    const ComplexMatrix ad = a.adjoint();
    switch (spec.kind) {
      case FockOpKind::Lower: op.matrix = a; break;
      case FockOpKind::Raise: op.matrix = ad; break;
      case FockOpKind::Position: op.matrix = (a + ad) / std::sqrt(2.0); break;
      case FockOpKind::Momentum: op.matrix = cd(0.0, -1.0) * (a - ad) / std::sqrt(2.0); break;
      case FockOpKind::Squeeze: op.matrix = a * a + ad * ad; break;
      case FockOpKind::UnitarySqueeze: op.matrix = a * a - ad * ad; break;
      default: break;
    }
    return op;
  }
  if (spec.kind == FockOpKind::Hamiltonian) {
    if (!spec.params) throw std::invalid_argument("Hamiltonian Fock matrix requires oscillator parameters");
    op.matrix = hamiltonian_matrix(*spec.params, spec.form, cutoff);
    return op;
  }
  const TwoModeLadders l(cutoff);
  switch (spec.kind) {
    case FockOpKind::Lower1: op.matrix = l.a1; break;
    case FockOpKind::Lower2: op.matrix = l.a2; break;
    case FockOpKind::Raise1: op.matrix = l.a1d; break;
    case FockOpKind::Raise2: op.matrix = l.a2d; break;
    case FockOpKind::A1: op.matrix = l.A1(); break;
    case FockOpKind::A2: op.matrix = l.A2(); break;
    case FockOpKind::B1: op.matrix = l.B1(); break;
    case FockOpKind::B2: op.matrix = l.B2(); break;
    default: throw std::invalid_argument("unhandled Fock operator kind");
  }
  return op;
}

std::vector<int> interior_indices(int modes, int cutoff, int bound) {
  if (bound < 0 || bound > cutoff - 2) {
    throw std::invalid_argument("interior bound " + std::to_string(bound) + " exceeds cutoff - 2 = " +
                                std::to_string(cutoff - 2));
  }
  const int dim = modes == 1 ? cutoff : cutoff * cutoff;
  std::vector<int> out;
  for (int i = 0; i < dim; ++i) {
    if (total_excitation(modes, cutoff, i) < bound) out.push_back(i);
  }
  std::stable_sort(out.begin(), out.end(), [&](int l, int r) {
    return total_excitation(modes, cutoff, l) < total_excitation(modes, cutoff, r);
  });
  return out;
}

double commutator_residual(const FockOp& x, const FockOp& y, std::complex<double> expected, int bound) {
  if (x.modes != y.modes || x.cutoff != y.cutoff || x.matrix.rows() != y.matrix.rows()) {
    throw std::invalid_argument("commutator of Fock operators with different dimensions");
  }
  const auto dim = x.matrix.rows();
  const ComplexMatrix c =
      x.matrix * y.matrix - y.matrix * x.matrix - expected * ComplexMatrix::Identity(dim, dim);
  const std::vector<int> idx = interior_indices(x.modes, x.cutoff, bound);
  return spectral_norm(restrict(c, idx, idx));
}

double hamiltonian_equiv_residual(const ExactOscillatorParams& params, int cutoff, int bound) {
  const ComplexMatrix diff = hamiltonian_matrix(params, HamiltonianForm::Ladder, cutoff) -
                             hamiltonian_matrix(params, HamiltonianForm::PseudoNumber, cutoff);
  const std::vector<int> idx = interior_indices(2, cutoff, bound);
  return spectral_norm(restrict(diff, idx, idx));
}

NullExperimentReport joint_null_experiment(const std::vector<int>& cutoffs, LoweringFamily family) {
  if (cutoffs.empty()) throw std::invalid_argument("null experiment needs at least one cutoff");
  for (std::size_t i = 0; i < cutoffs.size(); ++i) {
    if (cutoffs[i] < 8) throw std::invalid_argument("null experiment cutoffs must be at least 8");
    if (i > 0 && cutoffs[i] <= cutoffs[i - 1]) {
      throw std::invalid_argument("null experiment cutoffs must be strictly increasing");
    }
  }
  NullExperimentReport report{family, {}};
  for (const int n : cutoffs) {
    const int bound = n - 2;
    const TwoModeLadders l(n);
    const ComplexMatrix first = family == LoweringFamily::Pseudo ? l.A1() : l.a1;
    const ComplexMatrix second = family == LoweringFamily::Pseudo ? l.A2() : l.a2;
    const std::vector<int> cols = interior_indices(2, n, bound);

    // Rows span the full space so that nothing leaving the interior is discarded.
    const auto dim = first.rows();
    ComplexMatrix stacked(2 * dim, static_cast<Eigen::Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
      stacked.col(j).head(dim) = first.col(cols[j]);
      stacked.col(j).tail(dim) = second.col(cols[j]);
    }
    Eigen::BDCSVD<ComplexMatrix> svd(stacked, Eigen::ComputeThinV);
    if (svd.info() != Eigen::Success) {
      throw std::runtime_error("singular value decomposition failed at cutoff " + std::to_string(n));
    }
    const auto& sv = svd.singularValues();
    const Eigen::Index last = sv.size() - 1;

    NullExperimentRecord rec;
    rec.cutoff = n;
    rec.interior_bound = bound;
    rec.sigma_min = sv(last);
    rec.sigma_next = sv(last - 1);
    rec.minimizer = svd.matrixV().col(last).normalized();

    const int tail_start = bound - bound / 4;
    double tail = 0.0;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (total_excitation(2, n, cols[j]) >= tail_start) tail += std::norm(rec.minimizer(j));
    }
    rec.tail_mass = tail;
    // interior_indices lists |0,0> first
    rec.vacuum_overlap = std::norm(rec.minimizer(0));
    report.records.push_back(std::move(rec));
  }
  return report;
}

std::string null_experiment_csv(const NullExperimentReport& report) {
  CsvTable table({"cutoff", "sigma_min", "sigma_next", "tail_mass", "vacuum_overlap"});
  for (const auto& rec : report.records) {
    table.add_row({std::to_string(rec.cutoff), format_real(rec.sigma_min), format_real(rec.sigma_next),
                   format_real(rec.tail_mass), format_real(rec.vacuum_overlap)});
  }
  return table.str();
}

}  // namespace bateman
