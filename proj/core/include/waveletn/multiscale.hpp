// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The waveletn Authors

#pragma once

#include <vector>

#include "waveletn/laurent.hpp"

namespace waveletn {

/// norm(m0_2(z^N) M0_N(z) - m0_2(z) M0_N(z^2)). Zero iff the scale-2 and the
/// scale-N low-pass filters generate the same father function.
/// Throws Error{Precondition} when N == 2 and Error{NotIsometric} when either
/// row fails its isometry condition.
double commute_check(const LaurentPoly& m0_2, const LaurentPoly& M0_N, int N);

/// N^{-1/2} phi(x/N) = sum_k A_k phi(x - k) + sum_k B_k psi(x - k) + xi_-,
/// with the xi_- part carried by C_n(z) = prod_{k<n} m0(z^{N 2^k}) B(z).
struct ScaleDecomposition {
  LaurentPoly A;
  LaurentPoly B;
  std::vector<LaurentPoly> C;
  /// partial_sums[0] = ||A||^2 + ||B||^2, partial_sums[n] adds ||C_n||^2.
  std::vector<double> partial_sums;
  /// 1 - (||A||^2 + ||B||^2 + sum_n ||C_n||^2).
  double parseval_defect = 0.0;
  /// norm(A(z^2) m0(z) + B(z^2) m1(z) - A(z) m0(z^N)).
  double consistency_residual = 0.0;
  /// | ||m0(z^N) A||^2 - (||A||^2 + ||B||^2) |.
  double energy_residual = 0.0;
};

/// A_k and B_k by exact integration of the cascade grids at level L.
/// Throws Error{Precondition} (N < 2 or a non-unitary pair),
/// Error{NotAFatherFilter}, or Error{QuadratureUnstable} when the Parseval
/// defect exceeds 0.05 in absolute value.
ScaleDecomposition decompose(const LaurentPoly& m0_2, const LaurentPoly& m1_2, int N, int L = 10,
                             int n_max = 16);

}  // namespace waveletn
