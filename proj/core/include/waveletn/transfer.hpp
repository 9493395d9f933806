// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The waveletn Authors

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "waveletn/laurent.hpp"

namespace waveletn {

/// Finite matrix of the transfer operator R f = downsample(|m0|^2 f, N) on
/// the monomial window z^{-d}..z^{d}. Column k + d holds R(z^k).
struct TransferMatrix {
  int N = 0;
  int d = 0;
  LaurentPoly m0;
  Eigen::MatrixXcd R;
  /// Residual of the isometry row condition; R is built regardless.
  double isometry_residual = 0.0;

  bool isometric() const;
  /// R applied to a window polynomial.
  LaurentPoly apply(const LaurentPoly& f) const;
};

/// Smallest invariant window: ceil(spread(m0) / (N - 1)).
int transfer_window(const LaurentPoly& m0, int N);

/// Throws Error{WindowTooSmall} if d is below transfer_window.
TransferMatrix build_transfer(const LaurentPoly& m0, int N, int d);

enum class Verdict { Orthonormal, NotOrthonormal };
std::string_view to_string(Verdict v);

struct FixedSpace {
  int dim = 0;
  std::vector<LaurentPoly> basis;
  Verdict verdict = Verdict::NotOrthonormal;
};

/// Numerical kernel of R - I (singular values below 1e-8 ||R||).
FixedSpace fixed_space(const TransferMatrix& tm);

/// Eigenvalues of the window matrix, sorted by decreasing modulus.
std::vector<cplx> eigenvalues(const TransferMatrix& tm);

/// exp(2 pi i num / den), kept as an exact reduced fraction of a full turn.
struct UnitRoot {
  long long num = 0;
  long long den = 1;

  cplx point() const;
  friend bool operator==(const UnitRoot&, const UnitRoot&) = default;
};

/// A sigma-orbit a, a^N, a^{N^2}, ... listed in orbit order.
using Cycle = std::vector<UnitRoot>;

/// Orbits of the points a with a^{N^k - 1} = 1 for some k <= K on which
/// ||m0(a)| - sqrt(N)| <= 1e-9 holds at every point.
std::vector<Cycle> cohen_cycles(const LaurentPoly& m0, int N, int K);

std::string describe(const Cycle& cycle);

struct Atom {
  UnitRoot point;
  double weight = 0.0;
};

struct MeasureD {
  /// k -> D(z^k) for |k| <= d.
  std::map<int, cplx> moments;
  /// Empty unless a nonnegative fit on cycle points reproduces the moments.
  std::vector<Atom> atoms;
  double fit_residual = 0.0;
  /// Largest gap between the averages over the two halves of the window.
  double tail_variation = 0.0;
  int burn_in = 0;
  int window = 0;
};

/// Moments D(z^k) as averages over n of the constant coefficient of R^n z^k.
/// The first M powers are skipped and the average runs over a window whose
/// two halves are multiples of 60 powers each, so that cycles of period up to
/// six average out exactly.
/// Throws Error{NonConvergent} when the half-window averages differ by more
/// than 1e-6.
MeasureD measure_d(const TransferMatrix& tm, int M = 512);

struct FatherVerdict {
  bool is_father = false;
  std::string reason;
  FixedSpace fixed;
  MeasureD measure;
  std::vector<Cycle> cycles;
};

/// Decides whether m0 is the low-pass filter of an orthonormal father
/// function by running both the fixed-space and the D = delta_1 test.
/// Throws Error{NotIsometric}, Error{NotNormalized}, or Error{Inconsistent}.
FatherVerdict father_criterion(const LaurentPoly& m0, int N);

}  // namespace waveletn
