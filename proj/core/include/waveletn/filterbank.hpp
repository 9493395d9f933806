// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The waveletn Authors

#pragma once

#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "waveletn/laurent.hpp"

namespace waveletn {

/// Default tolerance on unitarity / isometry residual norms.
inline constexpr double kUnitarityTol = 1e-10;

/// N filters m_0..m_{N-1}; m_0 is the low-pass filter. A bank whose
/// unitarity residuals vanish defines a representation of the Cuntz algebra
/// O_N on L^2(T) through S_i xi = m_i * xi(z^N).
class FilterBank {
 public:
  FilterBank(int N, std::vector<LaurentPoly> filters);

  int N() const noexcept { return N_; }
  const LaurentPoly& m(int i) const { return filters_.at(static_cast<std::size_t>(i)); }
  const LaurentPoly& low_pass() const noexcept { return filters_.front(); }
  const std::vector<LaurentPoly>& filters() const noexcept { return filters_; }

 private:
  int N_;
  std::vector<LaurentPoly> filters_;
};

/// m(z) = sum_j z^j p_j(z^N).
struct PolyphaseVector {
  int N = 0;
  std::vector<LaurentPoly> p;

  LaurentPoly reassemble() const;
};

/// norm(downsample(|m0|^2, N) - 1). Zero iff S_{m0} is an isometry.
double check_isometry_row(const LaurentPoly& m0, int N);

/// Entry (i, j) is norm(downsample(conj(m_i) m_j, N) - delta_ij).
Eigen::MatrixXd check_unitarity(const FilterBank& bank);

/// Largest entry of check_unitarity.
double unitarity_residual(const FilterBank& bank);

PolyphaseVector polyphase(const LaurentPoly& m, int N);

enum class CompletionMethod { Auto, Flip2, HouseholderConst, Quaternion, Cayley };

CompletionMethod parse_completion_method(std::string_view name);
std::string_view to_string(CompletionMethod method);

/// Complete a low-pass row to a full unitary filter bank.
///
/// Flip2 (N = 2) sets m_1(z) = z conj(m_0(-z)) and works for any row.
/// The other methods need a polyphase vector of monomial type,
/// p_j(z) = c_j z^{d_j}: the unit vector c is completed to a unitary U with
/// U's first row equal to c, and row r of the bank gets polyphase entries
/// U_{r,j} z^{d_j}. HouseholderConst uses a phase-normalized Householder
/// reflection (identity when c = e_0, diag(-1, 1, ..., 1) when c = -e_0).
/// Quaternion (N = 4) and Cayley (N = 8) stack c with its left products by
/// the imaginary units; both need c real up to one global phase.
/// Auto picks Flip2 for N = 2 and HouseholderConst otherwise.
///
/// Throws Error{NotIsometric} when the row condition fails and
/// Error{UnsupportedShape} when no supported construction applies.
FilterBank complete(const LaurentPoly& m0, int N,
                    CompletionMethod method = CompletionMethod::Auto);

/// Unitary with first row c (used by HouseholderConst).
Eigen::MatrixXcd householder_completion(const Eigen::VectorXcd& c);

/// Real orthogonal 4x4 / 8x8 matrix with rows x, e_1 x, ..., e_{n-1} x where
/// e_k are the quaternion (n = 4) or octonion (n = 8) imaginary units.
Eigen::MatrixXd imaginary_unit_frame(const Eigen::VectorXd& x);

}  // namespace waveletn
