// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The waveletn Authors

#include "linalg.hpp"

#include <algorithm>
#include <cmath>

namespace waveletn::detail {

bool to_window(const LaurentPoly& p, int d, Eigen::VectorXcd& out, bool strict) {
  out = Eigen::VectorXcd::Zero(2 * d + 1);
  bool inside = true;
  for (const auto& [k, a] : p.coeffs()) {
    if (k < -d || k > d) {
      inside = false;
      if (strict) return false;
      continue;
    }
    out(k + d) = a;
  }
  return inside;
}

Eigen::VectorXcd to_window(const LaurentPoly& p, int d) {
  Eigen::VectorXcd v;
  to_window(p, d, v, false);
  return v;
}

LaurentPoly from_window(const Eigen::VectorXcd& v, int d, double tol) {
  LaurentPoly::map_type out;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (std::abs(v(i)) >= tol) out.emplace(static_cast<int>(i) - d, v(i));
  return LaurentPoly(std::move(out));
}

bool window_matrix(int d, const std::function<LaurentPoly(const LaurentPoly&)>& op,
                   Eigen::MatrixXcd& out) {
  const int n = 2 * d + 1;
  out = Eigen::MatrixXcd::Zero(n, n);
  Eigen::VectorXcd col;
  for (int k = -d; k <= d; ++k) {
    if (!to_window(op(LaurentPoly::monomial(k)), d, col, true)) return false;
    out.col(k + d) = col;
  }
  return true;
}

Eigen::MatrixXcd null_space(const Eigen::MatrixXcd& A, double tol) {
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const Eigen::Index n = A.cols();
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > tol) ++rank;
  return svd.matrixV().rightCols(n - rank);
}

std::vector<Eigenspace> unimodular_eigenspaces(const Eigen::MatrixXcd& A,
                                               double unimodular_tol, double kernel_tol) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(A, false);
  std::vector<cplx> values;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const cplx mu = es.eigenvalues()(i);
    if (std::abs(std::abs(mu) - 1.0) > unimodular_tol) continue;
    const bool seen = std::any_of(values.begin(), values.end(),
                                  [&](cplx v) { return std::abs(v - mu) < 1e-6; });
    if (!seen) values.push_back(mu);
  }
  std::sort(values.begin(), values.end(),
            [](cplx a, cplx b) { return std::arg(a) < std::arg(b); });

  std::vector<Eigenspace> out;
  const double scale = std::max(1.0, A.norm());
  const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(A.rows(), A.cols());
  for (cplx mu : values) {
    Eigen::MatrixXcd basis = null_space(A - mu * I, kernel_tol * scale);
    if (basis.cols() == 0) {
      // Rounding pushed the smallest singular value just over the threshold;
      // take the best single direction instead of dropping the eigenvalue.
      Eigen::BDCSVD<Eigen::MatrixXcd> svd(A - mu * I, Eigen::ComputeFullV);
      if (svd.singularValues().tail(1)(0) > 1e-6 * scale) continue;
      basis = svd.matrixV().rightCols(1);
    }
    out.push_back({mu, std::move(basis)});
  }
  return out;
}

LaurentPoly normalize_phase(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  double peak = 0.0;
  for (const auto& [k, a] : p.coeffs()) peak = std::max(peak, std::abs(a));
  cplx lead = p.coeffs().begin()->second;
  for (const auto& [k, a] : p.coeffs()) {
    if (std::abs(a) > 1e-9 * peak) {
      lead = a;
      break;
    }
  }
  return p * (std::conj(lead) / std::abs(lead) / p.norm());
}

}  // namespace waveletn::detail
