// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The waveletn Authors

#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "waveletn/laurent.hpp"

namespace waveletn::detail {

/// Coordinates of p on the monomial window z^{-d}..z^{d}. Entries outside the
/// window are ignored unless `strict`, in which case the result is false.
bool to_window(const LaurentPoly& p, int d, Eigen::VectorXcd& out, bool strict = true);
Eigen::VectorXcd to_window(const LaurentPoly& p, int d);
LaurentPoly from_window(const Eigen::VectorXcd& v, int d, double tol = kPruneTol);

/// Matrix of a linear map on the window; column k + d holds op(z^k).
/// Returns false if some image leaves the window.
bool window_matrix(int d, const std::function<LaurentPoly(const LaurentPoly&)>& op,
                   Eigen::MatrixXcd& out);

/// Orthonormal basis of the numerical kernel of A (singular values <= tol).
Eigen::MatrixXcd null_space(const Eigen::MatrixXcd& A, double tol);

struct Eigenspace {
  cplx value;
  Eigen::MatrixXcd basis;
};

/// Distinct eigenvalues with ||mu| - 1| <= unimodular_tol, each with an
/// orthonormal basis of its eigenspace.
std::vector<Eigenspace> unimodular_eigenspaces(const Eigen::MatrixXcd& A,
                                               double unimodular_tol = 1e-8,
                                               double kernel_tol = 1e-8);

/// Scale to unit norm and rotate so the lowest-index coefficient that is not
/// negligible (relative to the largest) is positive real.
LaurentPoly normalize_phase(const LaurentPoly& p);

}  // namespace waveletn::detail
