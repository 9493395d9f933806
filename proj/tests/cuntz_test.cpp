// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The waveletn Authors

#include <gtest/gtest.h>

#include "fixtures.hpp"

namespace {

using namespace waveletn;
using wt::kS2;

// (S_i xi)(z) = m_i(z) xi(z^N), evaluated pointwise.
cplx S_pointwise(const FilterBank& bank, int i, const LaurentPoly& xi, double t) {
  return wt::eval_direct(bank.m(i), t) * wt::eval_direct(xi, bank.N() * t);
}

TEST(Cuntz, ApplyS) {
  const FilterBank haar = wt::haar_bank();
  EXPECT_LT(distance(apply_S(haar, 0, LaurentPoly::constant(1.0)), wt::haar_m0()), 1e-15);
  EXPECT_LT(distance(apply_S(haar, 0, LaurentPoly::monomial(1)), LaurentPoly{{2, kS2}, {3, kS2}}), 1e-15);
  EXPECT_TRUE(apply_S(haar, 1, LaurentPoly{}).is_zero());
  EXPECT_THROW(apply_S(haar, 2, LaurentPoly::constant(1.0)), Error);
  std::mt19937_64 rng(8);
  for (const auto& bank : wt::fixture_banks()) {
    const LaurentPoly xi = wt::random_poly(rng, -8, 8, 6);
    for (int i = 0; i < bank.N(); ++i) {
      const LaurentPoly s = apply_S(bank, i, xi);
      EXPECT_NEAR(s.norm2(), xi.norm2(), 1e-12);
      EXPECT_LT(wt::sup_on_circle([&](double t) { return s.at_angle(t); },
                                  [&](double t) { return S_pointwise(bank, i, xi, t); }, 64),
                1e-11);
    }
  }
}

TEST(Cuntz, ApplySAdjoint) {
  const FilterBank haar = wt::haar_bank();
  EXPECT_LT(distance(apply_S_adj(haar, 0, wt::haar_m0()), LaurentPoly::constant(1.0)), 1e-15);
  EXPECT_TRUE(apply_S_adj(haar, 1, wt::haar_m0()).is_zero());
  // conj(m0) z = (z + 1)/sqrt(2); the root average keeps the constant term.
  EXPECT_LT(distance(apply_S_adj(haar, 0, LaurentPoly::monomial(1)), LaurentPoly::constant(kS2)),
            1e-15);
  EXPECT_THROW(apply_S_adj(haar, -1, LaurentPoly::constant(1.0)), Error);
  std::mt19937_64 rng(6);
  for (const auto& bank : wt::fixture_banks()) {
    const LaurentPoly xi = wt::random_poly(rng, -10, 10, 8);
    const LaurentPoly eta = wt::random_poly(rng, -4, 4, 4);
    for (int i = 0; i < bank.N(); ++i) {
      EXPECT_NEAR(std::abs(inner(apply_S(bank, i, eta), xi) - inner(eta, apply_S_adj(bank, i, xi))),
                  0.0, 1e-11);
      const LaurentPoly adj = apply_S_adj(bank, i, xi);
      EXPECT_LT(wt::sup_on_circle(
                    [&](double t) { return adj.at_angle(t); },
                    [&](double t) {
                      cplx s{};
                      const int N = bank.N();
                      for (int r = 0; r < N; ++r) {
                        const double u = (t + 2.0 * std::numbers::pi * r) / N;
                        s += std::conj(wt::eval_direct(bank.m(i), u)) * wt::eval_direct(xi, u);
                      }
                      return s / static_cast<double>(N);
                    },
                    64),
                1e-11);
    }
  }
}

TEST(Cuntz, Relations) {
  EXPECT_LE(verify_cuntz(wt::haar_bank(), 32), 1e-12);
  EXPECT_LE(verify_cuntz(complete(wt::haar3_m0(), 3), 32), 1e-12);
  for (const auto& bank : wt::fixture_banks()) EXPECT_LE(verify_cuntz(bank, 32), 1e-12);
  const FilterBank broken(2, {wt::haar_m0(), 0.9 * wt::haar_m1()});
  EXPECT_GT(verify_cuntz(broken, 4), 0.01);
}

TEST(Cuntz, Covariance) {
  EXPECT_LE(verify_covariance(wt::haar_bank(), LaurentPoly::constant(1.0), 8), 1e-15);
  EXPECT_LE(verify_covariance(wt::haar_bank(), LaurentPoly::monomial(1), 8), 1e-12);
  const FilterBank broken(2, {wt::haar_m0(), 0.9 * wt::haar_m1()});
  EXPECT_GT(verify_covariance(broken, LaurentPoly::monomial(1), 8), 1e-3);
  std::mt19937_64 rng(12);
  for (const auto& bank : wt::fixture_banks())
    EXPECT_LE(verify_covariance(bank, wt::random_poly(rng, -8, 8, 5), 6), 1e-11);
}

TEST(Cuntz, WoldScalarExamples) {
  const WoldReport z2 = wold_scalar(LaurentPoly::monomial(1), 2, wold_window(LaurentPoly::monomial(1), 2));
  ASSERT_EQ(z2.kind, WoldKind::UnitaryPart);
  EXPECT_EQ(z2.dim, 1);
  EXPECT_EQ(z2.eigenpairs.front().xi, LaurentPoly::monomial(-1));
  EXPECT_NEAR(std::abs(z2.eigenpairs.front().lambda - 1.0), 0.0, 1e-15);
  // z xi(z^2) = xi(z) for xi = z^{-1}.
  EXPECT_EQ(LaurentPoly::monomial(1) * upsample(LaurentPoly::monomial(-1), 2), LaurentPoly::monomial(-1));

  EXPECT_EQ(wold_scalar(LaurentPoly::monomial(1), 3, 1).kind, WoldKind::Shift);
  EXPECT_EQ(wold_scalar(wt::haar_m0(), 2, 1).kind, WoldKind::Shift);
  EXPECT_EQ(wold_scalar(wt::haar_m0(), 2, 1, WoldMethod::Matrix).kind, WoldKind::Shift);
  EXPECT_EQ(wold_scalar(wt::d4_m0(), 2, 3, WoldMethod::Matrix).kind, WoldKind::Shift);
}

TEST(Cuntz, WoldScalarPhaseAndErrors) {
  const cplx lambda = std::polar(1.0, 0.7);
  const LaurentPoly m = LaurentPoly::monomial(4, lambda);
  for (auto method : {WoldMethod::Fast, WoldMethod::Matrix}) {
    const WoldReport r = wold_scalar(m, 3, wold_window(m, 3), method);
    ASSERT_EQ(r.kind, WoldKind::UnitaryPart);
    const auto& ep = r.eigenpairs.front();
    EXPECT_LT(distance(m * upsample(ep.xi, 3), ep.lambda * ep.xi), 1e-12);
    EXPECT_NEAR(std::abs(ep.lambda - lambda), 0.0, 1e-12);
  }
  try {
    wold_scalar(LaurentPoly{{0, 1.0}, {1, 1.0}}, 2, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotIsometric);
  }
  try {
    wold_scalar(LaurentPoly::monomial(6), 2, 2, WoldMethod::Matrix);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::WindowTooSmall);
  }
}

TEST(Cuntz, WoldFastAndMatrixAgreeOnMonomials) {
  for (int N : {2, 3, 4}) {
    for (int n = -12; n <= 12; ++n) {
      const LaurentPoly m = LaurentPoly::monomial(n);
      const int d = wold_window(m, N);
      const WoldReport fast = wold_scalar(m, N, d, WoldMethod::Fast);
      const WoldReport slow = wold_scalar(m, N, d, WoldMethod::Matrix);
      EXPECT_EQ(fast.kind, slow.kind) << "N=" << N << " n=" << n;
      EXPECT_EQ(fast.dim, slow.dim);
      EXPECT_EQ(fast.kind == WoldKind::UnitaryPart, n % (N - 1) == 0);
      if (fast.dim == 1 && slow.dim == 1) {
        EXPECT_LT(distance(fast.eigenpairs[0].xi, slow.eigenpairs[0].xi), 1e-10);
      }
    }
  }
}

TEST(Cuntz, WoldVectorEigenpairsSatisfyTheHaarVectorEquation) {
  for (const auto& bank : wt::fixture_banks()) {
    const int N = bank.N();
    const WoldReport r = wold_vector(bank, wold_window(bank));
    EXPECT_LE(r.dim, N);
    for (const auto& ep : r.eigenpairs) {
      EXPECT_NEAR(std::abs(ep.lambda), 1.0, 1e-8);
      EXPECT_LE(ep.residual, 1e-8);
      // (1/sqrt N) sum_k m_k(z) xi(rho^k z^N) = conj(lambda) xi(z), checked pointwise.
      const double err = wt::sup_on_circle(
          [&](double t) {
            cplx s{};
            for (int k = 0; k < N; ++k)
              s += wt::eval_direct(bank.m(k), t) *
                   wt::eval_direct(ep.xi, N * t - 2.0 * std::numbers::pi * k / N);
            return s / std::sqrt(static_cast<double>(N));
          },
          [&](double t) { return std::conj(ep.lambda) * wt::eval_direct(ep.xi, t); }, 128);
      EXPECT_LT(err, 1e-8);
      for (int k = 1; k <= 3; ++k) EXPECT_LT(sc_fixed_defect(bank, ep.xi, k), 1e-8);
    }
  }
}

TEST(Cuntz, WoldVectorOnTheMonomialBank) {
  // m_k = sqrt(N)-free polyphase basis rows z^k: the classical shift representation.
  for (int N : {2, 3}) {
    std::vector<LaurentPoly> rows;
    for (int k = 0; k < N; ++k) rows.push_back(LaurentPoly::monomial(k));
    const FilterBank bank(N, rows);
    const WoldReport r = wold_vector(bank, wold_window(bank));
    // Independent oracle: dense matrix of T on the window, eigenvalues on the circle.
    const int d = wold_window(bank);
    const int n = 2 * d + 1;
    Eigen::MatrixXcd T = Eigen::MatrixXcd::Zero(n, n);
    for (int c = -d; c <= d; ++c) {
      LaurentPoly out;
      for (int k = 0; k < N; ++k)
        out += bank.m(k) * LaurentPoly::monomial(N * c, root_of_unity(static_cast<long long>(k) * c, N));
      out *= 1.0 / std::sqrt(static_cast<double>(N));
      for (const auto& [idx, a] : out.coeffs())
        if (std::abs(idx) <= d) T(idx + d, c + d) = a;
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(T);
    int unimodular = 0;
    for (Eigen::Index i = 0; i < n; ++i)
      if (std::abs(std::abs(es.eigenvalues()(i)) - 1.0) <= 1e-8) ++unimodular;
    EXPECT_EQ(r.dim, std::min(unimodular, N)) << "N=" << N;
    EXPECT_LE(r.dim, N);
  }
  const FilterBank not_unitary(2, {LaurentPoly::constant(2.0), LaurentPoly::monomial(1)});
  try {
    wold_vector(not_unitary, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotUnitaryBank);
  }
}

TEST(Cuntz, OInfinity) {
  const FilterBank haar = wt::haar_bank();
  const LaurentPoly xi = LaurentPoly{{0, 1.0}, {3, cplx(0.0, 2.0)}};
  EXPECT_EQ(o_infinity(haar, 1, 1, xi), apply_S(haar, 1, xi));
  EXPECT_LT(distance(o_infinity(haar, 1, 2, LaurentPoly::constant(1.0)), wt::haar_m0() * upsample(wt::haar_m1(), 2)),
            1e-15);
  for (const auto& bank : wt::fixture_banks()) {
    const int N = bank.N();
    for (int j1 = 1; j1 < N; ++j1)
      for (int k1 = 1; k1 <= 3; ++k1)
        for (int j2 = 1; j2 < N; ++j2)
          for (int k2 = 1; k2 <= 3; ++k2)
            for (int m = -8; m <= 8; m += 4) {
              LaurentPoly v = o_infinity(bank, j2, k2, LaurentPoly::monomial(m));
              for (int s = 1; s < k1; ++s) v = apply_S_adj(bank, 0, v);
              v = apply_S_adj(bank, j1, v);
              const LaurentPoly expect =
                  (j1 == j2 && k1 == k2) ? LaurentPoly::monomial(m) : LaurentPoly{};
              EXPECT_LT(distance(v, expect), 1e-12);
            }
  }
}

TEST(Cuntz, FatherZTransformOfHaar) {
  const auto w = father_ztransform(wt::haar_bank(), 10);
  ASSERT_EQ(w.size(), 1u);
  for (int n = 1; n <= 10; ++n)
    EXPECT_LT(distance(w[0][static_cast<std::size_t>(n - 1)], LaurentPoly::constant(std::pow(2.0, -n / 2.0))),
              1e-12);
  double partial = 0.0, previous = 0.0;
  for (const auto& bank : wt::fixture_banks()) {
    if (bank.N() != 2) continue;
    const auto wb = father_ztransform(bank, 40);
    partial = 0.0;
    previous = 0.0;
    for (const auto& wn : wb[0]) {
      partial += wn.norm2();
      EXPECT_GE(partial, previous - 1e-15);
      previous = partial;
    }
    EXPECT_LE(partial, 1.0 + 1e-12);
  }
  const auto wh = father_ztransform(wt::haar_bank(), 40);
  double sum = 0.0;
  for (const auto& wn : wh[0]) sum += wn.norm2();
  EXPECT_NEAR(sum, 1.0, 1e-11);
}

}  // namespace
