// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The waveletn Authors

#include "waveletn/pyramid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "waveletn/cuntz.hpp"
#include "waveletn/error.hpp"

namespace waveletn {

const LaurentPoly& WaveletCoeffs::at(int i, int j) const {
  if (i < 1 || i >= N || j < 1 || j > J)
    throw Error(Errc::IndexOutOfRange,
                "coefficient (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range");
  return detail[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
}

WaveletCoeffs analyze(const FilterBank& bank, const LaurentPoly& f, int J) {
  if (J < 1) throw Error(Errc::Precondition, "analysis depth J must be at least 1");
  WaveletCoeffs out;
  out.N = bank.N();
  out.J = J;
  out.detail.assign(static_cast<std::size_t>(bank.N() - 1), {});
  LaurentPoly cur = f;
  for (int j = 1; j <= J; ++j) {
    for (int i = 1; i < bank.N(); ++i)
      out.detail[static_cast<std::size_t>(i - 1)].push_back(apply_S_adj(bank, i, cur));
    cur = apply_S_adj(bank, 0, cur);
  }
  out.residual = std::move(cur);
  return out;
}

LaurentPoly synthesize(const FilterBank& bank, const WaveletCoeffs& coeffs) {
  if (coeffs.N != bank.N() || coeffs.J < 1 ||
      coeffs.detail.size() != static_cast<std::size_t>(bank.N() - 1))
    throw Error(Errc::Precondition, "coefficients do not match the filter bank");
  for (const auto& row : coeffs.detail)
    if (row.size() != static_cast<std::size_t>(coeffs.J))
      throw Error(Errc::Precondition, "coefficient table is not rectangular");
  LaurentPoly g = coeffs.residual;
  for (int j = coeffs.J; j >= 1; --j) {
    g = apply_S(bank, 0, g);
    for (int i = 1; i < bank.N(); ++i) g += apply_S(bank, i, coeffs.at(i, j));
  }
  return g;
}

EnergyReport energy_report(const WaveletCoeffs& coeffs, const LaurentPoly& f) {
  EnergyReport r;
  for (const auto& row : coeffs.detail) {
    std::vector<double> e;
    for (const auto& p : row) {
      e.push_back(p.norm2());
      r.total += e.back();
    }
    r.detail.push_back(std::move(e));
  }
  r.residual = coeffs.residual.norm2();
  r.total += r.residual;
  r.signal = f.norm2();
  r.defect = std::abs(r.total - r.signal);
  return r;
}

double level_parseval_defect(const FilterBank& bank, const LaurentPoly& f, int J) {
  double worst = 0.0;
  LaurentPoly cur = f;
  for (int j = 1; j <= J; ++j) {
    const LaurentPoly next = apply_S_adj(bank, 0, cur);
    double s = next.norm2();
    for (int i = 1; i < bank.N(); ++i) s += apply_S_adj(bank, i, cur).norm2();
    worst = std::max(worst, std::abs(s - cur.norm2()));
    cur = next;
  }
  return worst;
}

}  // namespace waveletn
