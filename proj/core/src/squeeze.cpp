#include "bateman/squeeze.hpp"

#include "bateman/csv.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>
#include <cmath>
#include <stdexcept>

namespace bateman {

RadicalPair& RadicalPair::times_sqrt(const Integer& m) {
  if (sgn(m) <= 0) throw std::invalid_argument("radicand must be positive, got " + m.get_str());
  auto [s, q] = squarefree_split(m);
  // n and q are squarefree, so n*q = g^2 * (n/g)(q/g) with a squarefree cofactor.
  Integer g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), q.get_mpz_t());
  r *= Rational(s * g);
  n = (n / g) * (q / g);
  if (sgn(r) == 0) n = 1;
  return *this;
}

long double RadicalPair::to_long_double() const {
  return static_cast<long double>(r.get_d()) * std::sqrt(static_cast<long double>(n.get_d()));
}

std::string RadicalPair::str() const {
  if (sgn(r) == 0) return "0";
  if (n == 1) return r.get_str();
  return r.get_str() + "*sqrt(" + n.get_str() + ")";
}

std::pair<Integer, Integer> squarefree_split(const Integer& m) {
  if (sgn(m) <= 0) throw std::invalid_argument("squarefree_split requires m >= 1");
  Integer rest = m, s = 1, q = 1;
  for (Integer p = 2; p * p <= rest; ++p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) s *= p;
    if (e % 2 == 1) q *= p;
  }
  q *= rest;
  return {s, q};
}

std::vector<RadicalPair> squeeze_factored_action(int kmax) {
  if (kmax < 1) throw std::invalid_argument("kmax must be at least 1, got " + std::to_string(kmax));
  std::vector<RadicalPair> out;
  out.reserve(kmax + 1);
  // state = (c^dag)^(2k)|0> / k! * (-1/2)^k, tracked as its single nonzero coefficient on |2k>.
  RadicalPair state{1, 1};
  out.push_back(state);
  for (int k = 1; k <= kmax; ++k) {
    state.times_sqrt(2 * k - 1);
    state.times_sqrt(2 * k);
    state *= Rational(-1, 2 * k);
    out.push_back(state);
  }
  return out;
}

std::vector<TruncatedNormRecord> squeeze_truncated_norms(double theta, const std::vector<int>& cutoffs,
                                                         FockOpKind generator) {
  if (fock_modes(generator) != 1) throw std::invalid_argument("squeeze generator must be single-mode");
  for (std::size_t i = 1; i < cutoffs.size(); ++i) {
    if (cutoffs[i] <= cutoffs[i - 1]) throw std::invalid_argument("cutoffs must be strictly increasing");
  }
  constexpr int kCompared = 3;
  const std::vector<RadicalPair> exact = squeeze_factored_action(kCompared);
  const long double global = std::pow(2.0L, 0.25L);

  std::vector<TruncatedNormRecord> out;
  for (const int n : cutoffs) {
    const Eigen::MatrixXd x = build_fock(generator, n).matrix.real();
    double shift = 0.0;
    if (x.isApprox(x.transpose())) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(x, Eigen::EigenvaluesOnly);
      shift = theta >= 0 ? eig.eigenvalues().maxCoeff() : eig.eigenvalues().minCoeff();
    }
    // Pade scaling-and-squaring; the shifted argument has spectrum in (-inf, 0].
    const Eigen::MatrixXd scaled = theta * (x - shift * Eigen::MatrixXd::Identity(n, n));
    const Eigen::VectorXd v = scaled.exp().col(0);
    if (!v.allFinite()) {
      throw std::runtime_error("matrix exponential is not finite at cutoff " + std::to_string(n));
    }
    const long double exponent = static_cast<long double>(theta) * shift;

    TruncatedNormRecord rec;
    rec.cutoff = n;
    rec.log10_norm = exponent / std::log(10.0L) + std::log10(static_cast<long double>(v.norm()));
    rec.norm = std::exp(exponent) * static_cast<long double>(v.norm());
    for (int k = 0; k <= kCompared && 2 * k < n; ++k) {
      const long double ck = exact[k].to_long_double();
      const long double vk = std::exp(exponent) * static_cast<long double>(v(2 * k)) / global;
      rec.coeff_gap.push_back(static_cast<double>(std::fabs(vk - ck) / std::fabs(ck)));
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::string squeeze_norms_csv(const std::vector<TruncatedNormRecord>& records) {
  CsvTable table({"cutoff", "norm", "log10_norm"});
  for (const auto& rec : records) {
    table.add_row({std::to_string(rec.cutoff), format_real(rec.norm), format_real(rec.log10_norm)});
  }
  return table.str();
}

}  // namespace bateman
