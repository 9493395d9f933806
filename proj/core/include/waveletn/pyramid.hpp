// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The waveletn Authors

#pragma once

#include <vector>

#include "waveletn/filterbank.hpp"
#include "waveletn/laurent.hpp"

namespace waveletn {

/// Wavelet coefficients of f as generating functions: detail[i - 1][j - 1]
/// is S_i^* S_0^{*(j-1)} f for i = 1..N-1 and j = 1..J, and the residual is
/// S_0^{*J} f.
struct WaveletCoeffs {
  int N = 0;
  int J = 0;
  std::vector<std::vector<LaurentPoly>> detail;
  LaurentPoly residual;

  const LaurentPoly& at(int i, int j) const;
};

/// Throws Error{Precondition} when J < 1.
WaveletCoeffs analyze(const FilterBank& bank, const LaurentPoly& f, int J);

/// sum_{j, i} S_0^{j-1} S_i a[i][j] + S_0^J residual. Exact left inverse of
/// analyze for any bank satisfying the Cuntz relations.
LaurentPoly synthesize(const FilterBank& bank, const WaveletCoeffs& coeffs);

struct EnergyReport {
  /// Squared norms, indexed like WaveletCoeffs::detail.
  std::vector<std::vector<double>> detail;
  double residual = 0.0;
  double total = 0.0;
  double signal = 0.0;
  /// |total - ||f||^2|.
  double defect = 0.0;
};

EnergyReport energy_report(const WaveletCoeffs& coeffs, const LaurentPoly& f);

/// Largest over j = 1..J of
/// | ||S_0^{*j} f||^2 + sum_i ||S_i^* S_0^{*(j-1)} f||^2 - ||S_0^{*(j-1)} f||^2 |.
double level_parseval_defect(const FilterBank& bank, const LaurentPoly& f, int J);

}  // namespace waveletn
