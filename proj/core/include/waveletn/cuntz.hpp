// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The waveletn Authors

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "waveletn/filterbank.hpp"
#include "waveletn/laurent.hpp"

namespace waveletn {

/// (S_i xi)(z) = m_i(z) xi(z^N).
LaurentPoly apply_S(const FilterBank& bank, int i, const LaurentPoly& xi);

/// (S_i^* xi)(z) = (1/N) sum_{w^N = z} conj(m_i(w)) xi(w).
LaurentPoly apply_S_adj(const FilterBank& bank, int i, const LaurentPoly& xi);

/// Largest defect of S_i^* S_j = delta_ij and sum_i S_i S_i^* = I over the
/// monomials z^k, |k| <= d.
double verify_cuntz(const FilterBank& bank, int d);

/// Largest defect of sum_i S_i M_f S_i^* = M_{f(z^N)} over z^k, |k| <= d.
double verify_covariance(const FilterBank& bank, const LaurentPoly& f, int d);

enum class WoldKind { Shift, UnitaryPart };
std::string_view to_string(WoldKind kind);

struct WoldEigenpair {
  cplx lambda;
  LaurentPoly xi;
  double residual = 0.0;
};

struct WoldReport {
  WoldKind kind = WoldKind::Shift;
  int dim = 0;
  std::vector<WoldEigenpair> eigenpairs;
  std::string note;
};

enum class WoldMethod { Fast, Matrix };

/// Smallest window d with span{z^k : |k| <= d} invariant under every S_m^*,
/// i.e. ceil(max |index of m| / (N - 1)).
int wold_window(const LaurentPoly& m, int N);
int wold_window(const FilterBank& bank);

/// Wold decomposition of S_m xi = m(z) xi(z^N). The unitary part is at most
/// one-dimensional; when present, S_m xi = lambda xi for the reported pair.
///
/// The fast path uses that a Laurent polynomial of constant modulus one is a
/// unimodular monomial lambda z^n, in which case xi = z^{-n/(N-1)} whenever
/// (N - 1) divides n. The matrix path diagonalizes S_m^* on the window.
/// Throws Error{NotIsometric} or Error{WindowTooSmall}.
WoldReport wold_scalar(const LaurentPoly& m, int N, int d,
                       WoldMethod method = WoldMethod::Fast);

/// Haar vectors of T xi = N^{-1/2} sum_k m_k(z) xi(rho^k z^N): each returned
/// pair satisfies T xi = conj(lambda) xi. Only Laurent polynomial solutions
/// inside the window can be detected.
/// Throws Error{NotUnitaryBank} or Error{WindowTooSmall}.
WoldReport wold_vector(const FilterBank& bank, int d);

/// T^{(inf, j)}_k xi = S_0^{k-1} S_j xi.
LaurentPoly o_infinity(const FilterBank& bank, int j, int k, const LaurentPoly& xi);

/// Entry [j - 1][n - 1] is S_j^* S_0^{*(n-1)} 1 for j = 1..N-1, n = 1..n_max.
std::vector<std::vector<LaurentPoly>> father_ztransform(const FilterBank& bank, int n_max);

/// Vector-valued functions z -> C^N, one Laurent polynomial per component.
using VectorPoly = std::vector<LaurentPoly>;

/// (V xi)(z) = N^{-1/2} (xi(z), xi(rho z), ..., xi(rho^{N-1} z)).
VectorPoly embed_rotations(const LaurentPoly& xi, int N);

/// (S_C F)(z) = C(z) F(z^N) with C_{ij}(z) = m_j(rho^i z) / sqrt(N).
VectorPoly apply_SC(const FilterBank& bank, const VectorPoly& F);
VectorPoly apply_SC_adj(const FilterBank& bank, const VectorPoly& F);

/// || S_C^k S_C^{*k} V xi - V xi ||.
double sc_fixed_defect(const FilterBank& bank, const LaurentPoly& xi, int k);

}  // namespace waveletn
