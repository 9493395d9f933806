// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The waveletn Authors

#pragma once

#include <iosfwd>
#include <vector>

#include "waveletn/filterbank.hpp"
#include "waveletn/laurent.hpp"

namespace waveletn {

/// A piecewise-constant function on the grid N^{-L} Z. Sample j is the
/// average of the function over the cell [(offset + j) h, (offset + j + 1) h)
/// with h = N^{-L}.
struct ScalingGrid {
  int N = 2;
  int L = 0;
  long long offset = 0;
  std::vector<cplx> samples;

  double step() const;
  /// Number of cells per unit interval, N^L.
  long long cells_per_unit() const;
  double left(std::size_t j) const;
  double midpoint(std::size_t j) const;
  /// Sample for absolute cell index (zero outside the stored range).
  cplx at_cell(long long cell) const;

  double l2_norm2() const;
  cplx integral() const;
  /// Copy scaled to unit L^2 norm.
  ScalingGrid normalized_l2() const;
};

struct CascadeResult {
  ScalingGrid grid;
  /// Sup-norm distance between the last two iterates.
  double residual = 0.0;
  int iterations = 0;
};

/// Iterates phi <- sqrt(N) sum_k a_k phi(N x - k) from the box on [0, 1).
/// Cell averages are propagated exactly, so a refinable piecewise-constant
/// function is reproduced without discretization error.
/// Throws Error{NotNormalized} if m0(1) != sqrt(N) and Error{Diverging} if
/// the residual grows three times in a row.
CascadeResult cascade_iterate(const LaurentPoly& m0, int N, int L = 8, int iters = 60);

/// One refinement step sqrt(N) sum_k c_k f(N x - k) applied to a grid, on the
/// smallest range that holds the result.
ScalingGrid refine(const ScalingGrid& f, const LaurentPoly& c);

/// sup over cells of |phi - refine(phi, m0)|.
double refinement_residual(const ScalingGrid& phi, const LaurentPoly& m0);

/// Mother grids psi_i = refine(phi, m_i), i = 1..N-1.
std::vector<ScalingGrid> mother_grids(const FilterBank& bank, const ScalingGrid& phi);

struct SpectralSamples {
  std::vector<double> t;
  std::vector<cplx> values;
  int K = 0;
  double tail_bound = 0.0;
};

/// n points spread uniformly over [a, b], both ends included.
std::vector<double> uniform_grid(double a, double b, int n);

/// 4096 points over [-16 pi, 16 pi].
std::vector<double> default_t_grid();

/// t_i = -periods pi + 2 pi i / P for i < periods * P.
std::vector<double> periodic_t_grid(int P, int periods);

/// phi^(t) ~ (2 pi)^{-1/2} prod_{k=1..K} m0(e^{-i t / N^k}) / sqrt(N).
/// Throws Error{NotNormalized}.
SpectralSamples infinite_product(const LaurentPoly& m0, int N, const std::vector<double>& t,
                                 int K = 24);

/// Exact Fourier transform (2 pi)^{-1/2} int f(x) e^{-ixt} dx of a grid.
SpectralSamples grid_spectrum(const ScalingGrid& grid, const std::vector<double>& t);

/// psi_k^(t) = N^{-1/2} m_k(e^{-it/N}) phi^(t/N), k = 1..N-1.
std::vector<SpectralSamples> mother_spectra(const FilterBank& bank, const std::vector<double>& t,
                                            int K = 24);

/// sum_m <phi, phi(. + m)> z^m, i.e. 2 pi PER(|phi^|^2) in the circle variable.
LaurentPoly per(const ScalingGrid& grid);

/// Same quantity from samples on a periodic_t_grid: translates are folded
/// into one period and Fourier coefficients up to |m| <= max_lag are taken.
LaurentPoly per(const SpectralSamples& spectrum, int max_lag);

struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
  bool invertible = false;
};

/// Extremes of a real-valued trigonometric polynomial sampled on grid_size
/// points of one period. Throws Error{NotRealValued}.
FrameBounds frame_bounds(const LaurentPoly& per_poly, int grid_size = 4096);

/// L^2 distance on the common t-grid, by the trapezoid rule restricted to
/// [a, b].
double l2_distance(const SpectralSamples& x, const SpectralSamples& y, double a, double b);

/// CSV with header `x,value_re,value_im` (x is the cell midpoint).
void write_grid_csv(std::ostream& os, const ScalingGrid& grid);
/// CSV with header `t,re,im`.
void write_spectrum_csv(std::ostream& os, const SpectralSamples& s);

}  // namespace waveletn
