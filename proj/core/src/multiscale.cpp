// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The waveletn Authors

#include "waveletn/multiscale.hpp"

#include <cmath>
#include <string>

#include "waveletn/cascade.hpp"
#include "waveletn/error.hpp"
#include "waveletn/filterbank.hpp"
#include "waveletn/transfer.hpp"

namespace waveletn {

double commute_check(const LaurentPoly& m0_2, const LaurentPoly& M0_N, int N) {
  if (N == 2 || N < 2) throw Error(Errc::Precondition, "the second scale must differ from 2");
  if (check_isometry_row(m0_2, 2) > kUnitarityTol)
    throw Error(Errc::NotIsometric, "scale-2 row fails the isometry condition");
  if (check_isometry_row(M0_N, N) > kUnitarityTol)
    throw Error(Errc::NotIsometric, "scale-N row fails the isometry condition");
  return distance(upsample(m0_2, N) * M0_N, m0_2 * upsample(M0_N, 2));
}

namespace {

// N^{1/2} int conj(g(N y - k)) phi(y) dy for piecewise-constant phi and g.
cplx dilated_inner(const ScalingGrid& phi, const ScalingGrid& g, int N, long long k) {
  const long long U = phi.cells_per_unit();
  cplx s{};
  for (std::size_t i = 0; i < phi.samples.size(); ++i) {
    const cplx ci = phi.samples[i];
    if (ci == cplx{}) continue;
    const long long base = N * (phi.offset + static_cast<long long>(i)) - k * U;
    cplx avg{};
    for (int r = 0; r < N; ++r) avg += std::conj(g.at_cell(base + r));
    s += ci * avg;
  }
  return std::sqrt(static_cast<double>(N)) * s * phi.step() / static_cast<double>(N);
}

LaurentPoly coefficients(const ScalingGrid& phi, const ScalingGrid& g, int N) {
  const long long U = phi.cells_per_unit();
  const long long p_lo = phi.offset, p_hi = phi.offset + static_cast<long long>(phi.samples.size());
  const long long g_lo = g.offset, g_hi = g.offset + static_cast<long long>(g.samples.size());
  // N y - k must meet supp g for some y in supp phi.
  const long long k_lo = (N * p_lo - g_hi) / U - 2;
  const long long k_hi = (N * p_hi - g_lo) / U + 2;
  LaurentPoly::map_type out;
  for (long long k = k_lo; k <= k_hi; ++k) {
    const cplx v = dilated_inner(phi, g, N, k);
    if (std::abs(v) >= kPruneTol) out.emplace(static_cast<int>(k), v);
  }
  return LaurentPoly(std::move(out));
}

}  // namespace

ScaleDecomposition decompose(const LaurentPoly& m0_2, const LaurentPoly& m1_2, int N, int L,
                             int n_max) {
  if (N < 2) throw Error(Errc::Precondition, "decompose needs N >= 2");
  if (L < 1 || n_max < 0) throw Error(Errc::Precondition, "decompose needs L >= 1, n_max >= 0");
  const FilterBank bank(2, {m0_2, m1_2});
  if (unitarity_residual(bank) > kUnitarityTol)
    throw Error(Errc::Precondition, "scale-2 filters do not form a unitary bank");
  const FatherVerdict verdict = father_criterion(m0_2, 2);
  if (!verdict.is_father) throw Error(Errc::NotAFatherFilter, verdict.reason);

  const ScalingGrid phi = cascade_iterate(m0_2, 2, L).grid;
  const ScalingGrid psi = refine(phi, m1_2);

  ScaleDecomposition out;
  out.A = coefficients(phi, phi, N);
  out.B = coefficients(phi, psi, N);

  double sum = out.A.norm2() + out.B.norm2();
  out.partial_sums.push_back(sum);
  LaurentPoly C = out.B;
  long long scale = N;
  for (int n = 1; n <= n_max; ++n) {
    C = upsample(m0_2, static_cast<int>(scale)) * C;
    scale *= 2;
    sum += C.norm2();
    out.C.push_back(C);
    out.partial_sums.push_back(sum);
  }
  out.parseval_defect = 1.0 - sum;

  const LaurentPoly lhs = upsample(out.A, 2) * m0_2 + upsample(out.B, 2) * m1_2;
  const LaurentPoly rhs = out.A * upsample(m0_2, N);
  out.consistency_residual = distance(lhs, rhs);
  out.energy_residual = std::abs(rhs.norm2() - (out.A.norm2() + out.B.norm2()));

  if (std::abs(out.parseval_defect) > 0.05)
    throw Error(Errc::QuadratureUnstable,
                "Parseval defect " + std::to_string(out.parseval_defect) + " exceeds 0.05");
  return out;
}

}  // namespace waveletn
