// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The waveletn Authors

#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "waveletn/waveletn.hpp"

namespace wt {

using waveletn::cplx;
using waveletn::FilterBank;
using waveletn::LaurentPoly;

inline const double kS2 = 1.0 / std::sqrt(2.0);
inline const double kS3 = 1.0 / std::sqrt(3.0);

inline LaurentPoly haar_m0() { return LaurentPoly{{0, kS2}, {1, kS2}}; }
/// The gauge m1 = (1 - z)/sqrt(2) of the Haar mother filter.
inline LaurentPoly haar_m1() { return LaurentPoly{{0, kS2}, {1, -kS2}}; }
inline FilterBank haar_bank() { return FilterBank(2, {haar_m0(), haar_m1()}); }

inline LaurentPoly haar3_m0() { return LaurentPoly{{0, kS3}, {1, kS3}, {2, kS3}}; }
inline LaurentPoly stretched_m0() { return LaurentPoly{{0, kS2}, {3, kS2}}; }
inline FilterBank stretched_bank() {
  return FilterBank(2, {stretched_m0(), LaurentPoly{{0, kS2}, {3, -kS2}}});
}

inline std::vector<double> d4_coeffs() {
  const double r3 = std::sqrt(3.0), q = 4.0 * std::sqrt(2.0);
  return {(1 + r3) / q, (3 + r3) / q, (3 - r3) / q, (1 - r3) / q};
}
inline LaurentPoly d4_m0() {
  const auto a = d4_coeffs();
  return LaurentPoly{{0, a[0]}, {1, a[1]}, {2, a[2]}, {3, a[3]}};
}
/// m1(z) = z conj(m0(-z)) written out by hand: coefficient of z^{1-k} is (-1)^k a_k.
inline LaurentPoly d4_m1() {
  const auto a = d4_coeffs();
  return LaurentPoly{{1, a[0]}, {0, -a[1]}, {-1, a[2]}, {-2, -a[3]}};
}
inline FilterBank d4_bank() { return FilterBank(2, {d4_m0(), d4_m1()}); }

/// Valid banks used by the property tests.
inline std::vector<FilterBank> fixture_banks() {
  std::vector<FilterBank> banks{haar_bank(), d4_bank(), stretched_bank(),
                                waveletn::complete(haar3_m0(), 3)};
  const double h = 0.5;
  banks.push_back(waveletn::complete(LaurentPoly{{0, h}, {1, h}, {2, h}, {3, h}}, 4,
                                     waveletn::CompletionMethod::Quaternion));
  return banks;
}

inline LaurentPoly random_poly(std::mt19937_64& rng, int lo, int hi, int nnz) {
  std::uniform_int_distribution<int> idx(lo, hi);
  std::normal_distribution<double> g;
  LaurentPoly p;
  for (int i = 0; i < nnz; ++i) p.set(idx(rng), {g(rng), g(rng)});
  return p;
}

/// p(e^{-it}) summed directly from the coefficients.
inline cplx eval_direct(const LaurentPoly& p, double t) {
  cplx s{};
  for (const auto& [k, a] : p.coeffs()) s += a * std::polar(1.0, -k * t);
  return s;
}

/// sup over n equally spaced t of |f(t) - g(t)|.
inline double sup_on_circle(const std::function<cplx(double)>& f,
                            const std::function<cplx(double)>& g, int n = 512) {
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const double t = 2.0 * std::numbers::pi * (i + 0.37) / n;
    worst = std::max(worst, std::abs(f(t) - g(t)));
  }
  return worst;
}

/// (1/N) sum over the N-th roots w of z of p(w), by sampling.
inline cplx root_average(const LaurentPoly& p, int N, double t) {
  cplx s{};
  for (int r = 0; r < N; ++r) s += eval_direct(p, (t + 2.0 * std::numbers::pi * r) / N);
  return s / static_cast<double>(N);
}

/// Dense coefficient convolution.
inline LaurentPoly convolve(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly out;
  for (const auto& [i, a] : p.coeffs())
    for (const auto& [j, b] : q.coeffs()) out.set(i + j, out[i + j] + a * b);
  return out;
}

}  // namespace wt
