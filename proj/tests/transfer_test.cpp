// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The waveletn Authors

#include <gtest/gtest.h>

#include "fixtures.hpp"

namespace {

using namespace waveletn;

// Coefficient rule: R(z^k) = downsample(|m0|^2 z^k, N), expanded by hand from
// the autocorrelation of the filter coefficients.
LaurentPoly transfer_oracle(const LaurentPoly& m0, int N, int k) {
  LaurentPoly w;
  for (const auto& [i, a] : m0.coeffs())
    for (const auto& [j, b] : m0.coeffs()) w.set(j - i, w[j - i] + std::conj(a) * b);
  LaurentPoly out;
  for (const auto& [l, c] : w.coeffs())
    if ((l + k) % N == 0) out.set((l + k) / N, out[(l + k) / N] + c);
  return out;
}

TEST(Transfer, HaarColumns) {
  const TransferMatrix tm = build_transfer(wt::haar_m0(), 2, 1);
  EXPECT_LT(distance(tm.apply(LaurentPoly::monomial(-1)), LaurentPoly{{0, 0.5}, {-1, 0.5}}), 1e-15);
  EXPECT_LT(distance(tm.apply(LaurentPoly::constant(1.0)), LaurentPoly::constant(1.0)), 1e-15);
  EXPECT_LT(distance(tm.apply(LaurentPoly::monomial(1)), LaurentPoly{{0, 0.5}, {1, 0.5}}), 1e-15);
}

TEST(Transfer, StretchedHaarColumns) {
  const TransferMatrix tm = build_transfer(wt::stretched_m0(), 2, 3);
  EXPECT_LT(distance(tm.apply(LaurentPoly::monomial(3)), LaurentPoly{{0, 0.5}, {3, 0.5}}), 1e-15);
  EXPECT_LT(distance(tm.apply(LaurentPoly::monomial(2)), LaurentPoly::monomial(1)), 1e-15);
  EXPECT_LT(distance(tm.apply(LaurentPoly::monomial(1)), LaurentPoly{{-1, 0.5}, {2, 0.5}}), 1e-15);
}

TEST(Transfer, MatrixAgreesWithCoefficientRule) {
  for (const auto& bank : wt::fixture_banks()) {
    const LaurentPoly& m0 = bank.m(0);
    const int N = bank.N();
    const int d = transfer_window(m0, N) + 1;
    const TransferMatrix tm = build_transfer(m0, N, d);
    for (int k = -d; k <= d; ++k)
      EXPECT_LT(distance(tm.apply(LaurentPoly::monomial(k)), transfer_oracle(m0, N, k)), 1e-13);
    EXPECT_LT(distance(tm.apply(LaurentPoly::constant(1.0)), LaurentPoly::constant(1.0)), 1e-12);
  }
}

TEST(Transfer, WindowTooSmall) {
  try {
    build_transfer(wt::stretched_m0(), 2, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::WindowTooSmall);
  }
}

TEST(Transfer, HaarSpectrumAndFixedSpace) {
  const TransferMatrix tm = build_transfer(wt::haar_m0(), 2, 1);
  // Closed form: the 3x3 matrix is upper/lower bidiagonal with diagonal (1/2, 1, 1/2).
  const auto ev = eigenvalues(tm);
  ASSERT_EQ(ev.size(), 3u);
  EXPECT_NEAR(std::abs(ev[0] - 1.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(ev[1] - 0.5), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(ev[2] - 0.5), 0.0, 1e-12);
  const FixedSpace fs = fixed_space(tm);
  EXPECT_EQ(fs.dim, 1);
  EXPECT_EQ(fs.verdict, Verdict::Orthonormal);
  EXPECT_LT(distance(fs.basis[0], LaurentPoly::constant(1.0)), 1e-12);
}

TEST(Transfer, StretchedHaarFixedSpace) {
  const TransferMatrix tm = build_transfer(wt::stretched_m0(), 2, 3);
  const FixedSpace fs = fixed_space(tm);
  EXPECT_EQ(fs.dim, 2);
  EXPECT_EQ(fs.verdict, Verdict::NotOrthonormal);
  // The autocorrelation of chi_[0,3)/sqrt 3, i.e. {0: 1, +-1: 2/3, +-2: 1/3},
  // is a fixed vector of R.
  const LaurentPoly autocorr{{0, 1.0}, {1, 2.0 / 3}, {-1, 2.0 / 3}, {2, 1.0 / 3}, {-2, 1.0 / 3}};
  EXPECT_LT(distance(tm.apply(autocorr), autocorr), 1e-14);
  // It lies in the computed fixed space.
  Eigen::MatrixXcd B(7, 2);
  for (int c = 0; c < 2; ++c)
    for (int k = -3; k <= 3; ++k) B(k + 3, c) = fs.basis[static_cast<std::size_t>(c)][k];
  Eigen::VectorXcd v(7);
  for (int k = -3; k <= 3; ++k) v(k + 3) = autocorr[k];
  const Eigen::VectorXcd coef = B.colPivHouseholderQr().solve(v);
  EXPECT_LT((B * coef - v).norm(), 1e-10);
}

TEST(Transfer, Scale3HaarIsOrthonormal) {
  const FixedSpace fs = fixed_space(build_transfer(wt::haar3_m0(), 3, 1));
  EXPECT_EQ(fs.dim, 1);
  EXPECT_EQ(fs.verdict, Verdict::Orthonormal);
}

TEST(Transfer, CohenCycles) {
  const auto haar = cohen_cycles(wt::haar_m0(), 2, 4);
  ASSERT_EQ(haar.size(), 1u);
  EXPECT_EQ(haar[0].size(), 1u);
  EXPECT_EQ(haar[0][0].num, 0);

  const auto st = cohen_cycles(wt::stretched_m0(), 2, 4);
  ASSERT_EQ(st.size(), 2u);
  EXPECT_EQ(st[1].size(), 2u);
  EXPECT_EQ(st[1][0].num, 1);
  EXPECT_EQ(st[1][0].den, 3);
  EXPECT_EQ(st[1][1].num, 2);
  EXPECT_EQ(st[1][1].den, 3);
  EXPECT_EQ(describe(st[1]), "{exp(2 pi i 1/3), exp(2 pi i 2/3)}");

  // |m0| = sqrt N everywhere: every orbit of period <= K qualifies. Orbits of
  // z -> z^2 with period dividing k number (1/k) sum_{d|k} mu(k/d) 2^d.
  const auto all = cohen_cycles(LaurentPoly::monomial(3, std::sqrt(2.0)), 2, 4);
  EXPECT_EQ(all.size(), 1u + 1u + 2u + 3u);
  EXPECT_TRUE(cohen_cycles(LaurentPoly::monomial(3), 2, 4).empty());
  EXPECT_THROW(cohen_cycles(wt::haar_m0(), 2, 30), Error);
}

TEST(Transfer, MeasureD) {
  const MeasureD haar = measure_d(build_transfer(wt::haar_m0(), 2, 1));
  for (const auto& [k, v] : haar.moments) EXPECT_NEAR(std::abs(v - 1.0), 0.0, 1e-6);
  ASSERT_EQ(haar.atoms.size(), 1u);
  EXPECT_NEAR(haar.atoms[0].weight, 1.0, 1e-6);

  const MeasureD st = measure_d(build_transfer(wt::stretched_m0(), 2, 3));
  EXPECT_NEAR(std::abs(st.moments.at(3) - 1.0), 0.0, 1e-4);
  EXPECT_LT(std::abs(st.moments.at(1)), 0.9);
  double total = 0.0;
  for (const auto& a : st.atoms) {
    EXPECT_GE(a.weight, 0.0);
    EXPECT_TRUE(a.point.num == 0 || a.point.den == 3);
    total += a.weight;
  }
  EXPECT_NEAR(total, 1.0, 1e-6);
}

TEST(Transfer, MeasureDProperties) {
  for (const auto& bank : wt::fixture_banks()) {
    const LaurentPoly& m0 = bank.m(0);
    const int N = bank.N();
    const MeasureD md = measure_d(build_transfer(m0, N, transfer_window(m0, N) + 2));
    EXPECT_NEAR(std::abs(md.moments.at(0) - 1.0), 0.0, 1e-12);
    for (const auto& [k, v] : md.moments) {
      EXPECT_NEAR(std::abs(md.moments.at(-k) - std::conj(v)), 0.0, 1e-9);
      if (md.moments.contains(N * k)) {
        EXPECT_NEAR(std::abs(md.moments.at(N * k) - v), 0.0, 1e-6);
      }
    }
  }
}

TEST(Transfer, PositivityAndContraction) {
  std::mt19937_64 rng(17);
  for (const auto& bank : wt::fixture_banks()) {
    const LaurentPoly& m0 = bank.m(0);
    const int N = bank.N();
    const int d = transfer_window(m0, N) + 3;
    const TransferMatrix tm = build_transfer(m0, N, d);
    const LaurentPoly g = wt::random_poly(rng, -d / 2, d / 2, 3);
    const LaurentPoly f = abs2(g);  // nonnegative on the circle
    const LaurentPoly rf = tm.apply(f);
    for (int i = 0; i < 1024; ++i) {
      const double t = 2.0 * std::numbers::pi * i / 1024;
      EXPECT_GE(rf.at_angle(t).real(), -1e-9);
    }
    // Adjoint identity <Rf, g> = <f, |m0|^2 g(z^N)>.
    const LaurentPoly a = wt::random_poly(rng, -d, d, 5);
    const LaurentPoly b = wt::random_poly(rng, -d, d, 5);
    EXPECT_NEAR(std::abs(inner(b, tm.apply(a)) - inner(abs2(m0) * upsample(b, N), a)), 0.0, 1e-10);
    for (cplx ev : eigenvalues(tm)) EXPECT_LE(std::abs(ev), 1.0 + 1e-8);
    // Sup norm of R f bounded by the sup norm of f.
    const LaurentPoly h = wt::random_poly(rng, -d, d, 4);
    double sup_f = 0.0, sup_rf = 0.0;
    const LaurentPoly rh = tm.apply(h);
    for (int i = 0; i < 1024; ++i) {
      const double t = 2.0 * std::numbers::pi * i / 1024;
      sup_f = std::max(sup_f, std::abs(h.at_angle(t)));
      sup_rf = std::max(sup_rf, std::abs(rh.at_angle(t)));
    }
    EXPECT_LE(sup_rf, sup_f * (1.0 + 1e-9) + 1e-9);
  }
}

TEST(Transfer, ConstantCoefficientPathMatchesCuntzPath) {
  std::mt19937_64 rng(23);
  for (const auto& bank : wt::fixture_banks()) {
    const LaurentPoly& m0 = bank.m(0);
    const int N = bank.N();
    const int d = transfer_window(m0, N) + 2;
    const TransferMatrix tm = build_transfer(m0, N, d);
    const LaurentPoly f = wt::random_poly(rng, -d, d, 5);
    LaurentPoly rn = f;
    LaurentPoly s0n = LaurentPoly::constant(1.0);
    for (int n = 1; n <= 6; ++n) {
      rn = tm.apply(rn);
      s0n = apply_S(bank, 0, s0n);
      LaurentPoly v = f * s0n;
      for (int s = 0; s < n; ++s) v = apply_S_adj(bank, 0, v);
      EXPECT_NEAR(std::abs(v[0] - rn[0]), 0.0, 1e-11);
    }
  }
}

TEST(Transfer, FatherCriterion) {
  const FatherVerdict haar = father_criterion(wt::haar_m0(), 2);
  EXPECT_TRUE(haar.is_father);
  EXPECT_TRUE(father_criterion(wt::d4_m0(), 2).is_father);
  EXPECT_TRUE(father_criterion(wt::haar3_m0(), 3).is_father);
  const FatherVerdict st = father_criterion(wt::stretched_m0(), 2);
  EXPECT_FALSE(st.is_father);
  EXPECT_NE(st.reason.find("cycle at {exp(2 pi i 1/3), exp(2 pi i 2/3)}"), std::string::npos);
  try {
    father_criterion(LaurentPoly::constant(std::sqrt(2.0)), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotIsometric);
  }
  try {
    father_criterion(LaurentPoly{{0, wt::kS2}, {1, -wt::kS2}}, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotNormalized);
  }
}

}  // namespace
