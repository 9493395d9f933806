// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The waveletn Authors

#include "waveletn/cuntz.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "linalg.hpp"
#include "waveletn/error.hpp"

namespace waveletn {

namespace {

void check_index(const FilterBank& bank, int i) {
  if (i < 0 || i >= bank.N())
    throw Error(Errc::IndexOutOfRange,
                "filter index " + std::to_string(i) + " outside 0.." + std::to_string(bank.N() - 1));
}

constexpr double kEigenResidualTol = 1e-8;

}  // namespace

LaurentPoly apply_S(const FilterBank& bank, int i, const LaurentPoly& xi) {
  check_index(bank, i);
  return bank.m(i) * upsample(xi, bank.N());
}

LaurentPoly apply_S_adj(const FilterBank& bank, int i, const LaurentPoly& xi) {
  check_index(bank, i);
  return downsample(conj_reflect(bank.m(i)) * xi, bank.N());
}

double verify_cuntz(const FilterBank& bank, int d) {
  const int N = bank.N();
  double worst = 0.0;
  for (int k = -d; k <= d; ++k) {
    const LaurentPoly zk = LaurentPoly::monomial(k);
    LaurentPoly sum;
    for (int i = 0; i < N; ++i) {
      for (int j = 0; j < N; ++j) {
        const LaurentPoly lhs = apply_S_adj(bank, i, apply_S(bank, j, zk));
        worst = std::max(worst, distance(lhs, i == j ? zk : LaurentPoly{}));
      }
      sum += apply_S(bank, i, apply_S_adj(bank, i, zk));
    }
    worst = std::max(worst, distance(sum, zk));
  }
  return worst;
}

double verify_covariance(const FilterBank& bank, const LaurentPoly& f, int d) {
  const int N = bank.N();
  const LaurentPoly f_sigma = upsample(f, N);
  double worst = 0.0;
  for (int k = -d; k <= d; ++k) {
    const LaurentPoly zk = LaurentPoly::monomial(k);
    LaurentPoly sum;
    for (int i = 0; i < N; ++i) sum += apply_S(bank, i, f * apply_S_adj(bank, i, zk));
    worst = std::max(worst, distance(sum, f_sigma * zk));
  }
  return worst;
}

std::string_view to_string(WoldKind kind) {
  return kind == WoldKind::Shift ? "Shift" : "UnitaryPart";
}

int wold_window(const LaurentPoly& m, int N) {
  if (N < 2) throw Error(Errc::Precondition, "window bound needs N >= 2");
  return (m.reach() + N - 2) / (N - 1);
}

int wold_window(const FilterBank& bank) {
  int d = 0;
  for (const auto& m : bank.filters()) d = std::max(d, wold_window(m, bank.N()));
  return d;
}

namespace {

void require_window(int d, int needed) {
  if (d < needed)
    throw Error(Errc::WindowTooSmall, "window d = " + std::to_string(d) +
                                          " is not invariant; need d >= " + std::to_string(needed));
}

}  // namespace

WoldReport wold_scalar(const LaurentPoly& m, int N, int d, WoldMethod method) {
  if (N < 2) throw Error(Errc::Precondition, "wold_scalar needs N >= 2");
  if (check_isometry_row(m, N) > kUnitarityTol)
    throw Error(Errc::NotIsometric, "S_m is not an isometry");
  require_window(d, wold_window(m, N));

  WoldReport report;
  if (method == WoldMethod::Fast) {
    cplx lambda;
    int n = 0;
    if (m.is_monomial(&lambda, &n) && std::abs(std::abs(lambda) - 1.0) <= kUnitarityTol &&
        n % (N - 1) == 0) {
      const LaurentPoly xi = LaurentPoly::monomial(-n / (N - 1));
      report.kind = WoldKind::UnitaryPart;
      report.dim = 1;
      report.eigenpairs.push_back({lambda, xi, distance(m * upsample(xi, N), lambda * xi)});
    }
    return report;
  }

  Eigen::MatrixXcd A;
  detail::window_matrix(
      d, [&](const LaurentPoly& x) { return downsample(conj_reflect(m) * x, N); }, A);
  for (const auto& space : detail::unimodular_eigenspaces(A)) {
    const cplx lambda = std::conj(space.value);
    for (Eigen::Index c = 0; c < space.basis.cols(); ++c) {
      const LaurentPoly xi =
          detail::normalize_phase(detail::from_window(space.basis.col(c), d, 1e-10));
      const double res = distance(m * upsample(xi, N), lambda * xi);
      if (res <= kEigenResidualTol) report.eigenpairs.push_back({lambda, xi, res});
    }
  }
  report.dim = static_cast<int>(report.eigenpairs.size());
  report.kind = report.dim > 0 ? WoldKind::UnitaryPart : WoldKind::Shift;
  return report;
}

WoldReport wold_vector(const FilterBank& bank, int d) {
  if (unitarity_residual(bank) > kUnitarityTol)
    throw Error(Errc::NotUnitaryBank, "filter bank fails the unitarity condition");
  require_window(d, wold_window(bank));
  const int N = bank.N();
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(N));

  const auto T = [&](const LaurentPoly& xi) {
    LaurentPoly out;
    for (int k = 0; k < N; ++k) out += bank.m(k) * upsample(rotate(xi, k, N), N);
    return out * inv_sqrt_n;
  };
  const auto T_adj = [&](const LaurentPoly& xi) {
    LaurentPoly out;
    for (int k = 0; k < N; ++k) out += rotate(apply_S_adj(bank, k, xi), -k, N);
    return out * inv_sqrt_n;
  };

  Eigen::MatrixXcd A;
  detail::window_matrix(d, T_adj, A);
  WoldReport report;
  for (const auto& space : detail::unimodular_eigenspaces(A)) {
    for (Eigen::Index c = 0; c < space.basis.cols(); ++c) {
      const LaurentPoly xi =
          detail::normalize_phase(detail::from_window(space.basis.col(c), d, 1e-10));
      const double res = distance(T(xi), std::conj(space.value) * xi);
      if (res <= kEigenResidualTol) report.eigenpairs.push_back({space.value, xi, res});
    }
  }
  report.dim = static_cast<int>(report.eigenpairs.size());
  report.kind = report.dim > 0 ? WoldKind::UnitaryPart : WoldKind::Shift;
  if (report.dim == 0)
    report.note = "no polynomial unitary part up to window " + std::to_string(d);
  return report;
}

LaurentPoly o_infinity(const FilterBank& bank, int j, int k, const LaurentPoly& xi) {
  if (j < 1 || j >= bank.N())
    throw Error(Errc::IndexOutOfRange, "branch j must lie in 1..N-1");
  if (k < 1) throw Error(Errc::IndexOutOfRange, "depth k must be at least 1");
  LaurentPoly out = apply_S(bank, j, xi);
  for (int r = 1; r < k; ++r) out = apply_S(bank, 0, out);
  return out;
}

std::vector<std::vector<LaurentPoly>> father_ztransform(const FilterBank& bank, int n_max) {
  const int N = bank.N();
  std::vector<std::vector<LaurentPoly>> w(static_cast<std::size_t>(N - 1));
  LaurentPoly cur = LaurentPoly::constant(1.0);
  for (int n = 1; n <= n_max; ++n) {
    for (int j = 1; j < N; ++j) w[static_cast<std::size_t>(j - 1)].push_back(apply_S_adj(bank, j, cur));
    cur = apply_S_adj(bank, 0, cur);
  }
  return w;
}

VectorPoly embed_rotations(const LaurentPoly& xi, int N) {
  const double s = 1.0 / std::sqrt(static_cast<double>(N));
  VectorPoly out;
  out.reserve(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) out.push_back(rotate(xi, i, N) * s);
  return out;
}

VectorPoly apply_SC(const FilterBank& bank, const VectorPoly& F) {
  const int N = bank.N();
  const double s = 1.0 / std::sqrt(static_cast<double>(N));
  VectorPoly out(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j)
      out[static_cast<std::size_t>(i)] +=
          rotate(bank.m(j), i, N) * upsample(F[static_cast<std::size_t>(j)], N);
    out[static_cast<std::size_t>(i)] *= s;
  }
  return out;
}

VectorPoly apply_SC_adj(const FilterBank& bank, const VectorPoly& F) {
  const int N = bank.N();
  const double s = 1.0 / std::sqrt(static_cast<double>(N));
  VectorPoly out(static_cast<std::size_t>(N));
  for (int j = 0; j < N; ++j) {
    for (int i = 0; i < N; ++i)
      out[static_cast<std::size_t>(j)] += downsample(
          conj_reflect(rotate(bank.m(j), i, N)) * F[static_cast<std::size_t>(i)], N);
    out[static_cast<std::size_t>(j)] *= s;
  }
  return out;
}

double sc_fixed_defect(const FilterBank& bank, const LaurentPoly& xi, int k) {
  const VectorPoly v = embed_rotations(xi, bank.N());
  VectorPoly g = v;
  for (int r = 0; r < k; ++r) g = apply_SC_adj(bank, g);
  for (int r = 0; r < k; ++r) g = apply_SC(bank, g);
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) s += std::pow(distance(g[i], v[i]), 2);
  return std::sqrt(s);
}

}  // namespace waveletn
