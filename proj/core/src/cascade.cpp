// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The waveletn Authors

#include "waveletn/cascade.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <string>

#include "waveletn/error.hpp"

namespace waveletn {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const double kInvSqrtTwoPi = 1.0 / std::sqrt(kTwoPi);

long long ipow(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

void require_normalized(const LaurentPoly& m0, int N) {
  if (std::abs(m0(1.0) - std::sqrt(static_cast<double>(N))) > 1e-9)
    throw Error(Errc::NotNormalized, "m0(1) differs from sqrt(N)");
}

// One averaged refinement step into the cell range [lo, lo + out.size()).
void refine_into(const ScalingGrid& f, const LaurentPoly& c, long long lo,
                 std::vector<cplx>& out) {
  const long long U = f.cells_per_unit();
  const int N = f.N;
  const double scale = std::sqrt(static_cast<double>(N)) / N;
  const long long f_lo = f.offset;
  const long long f_hi = f.offset + static_cast<long long>(f.samples.size());
  std::fill(out.begin(), out.end(), cplx{});
  for (const auto& [k, a] : c.coeffs()) {
    const cplx w = scale * a;
    for (std::size_t j = 0; j < out.size(); ++j) {
      const long long base = N * (lo + static_cast<long long>(j)) - k * U;
      if (base + N <= f_lo || base >= f_hi) continue;
      cplx s{};
      for (int r = 0; r < N; ++r) {
        const long long src = base + r;
        if (src >= f_lo && src < f_hi) s += f.samples[static_cast<std::size_t>(src - f_lo)];
      }
      out[j] += w * s;
    }
  }
}

}  // namespace

double ScalingGrid::step() const { return 1.0 / static_cast<double>(cells_per_unit()); }

long long ScalingGrid::cells_per_unit() const { return ipow(N, L); }

double ScalingGrid::left(std::size_t j) const {
  return static_cast<double>(offset + static_cast<long long>(j)) * step();
}

double ScalingGrid::midpoint(std::size_t j) const { return left(j) + 0.5 * step(); }

cplx ScalingGrid::at_cell(long long cell) const {
  const long long j = cell - offset;
  if (j < 0 || j >= static_cast<long long>(samples.size())) return {};
  return samples[static_cast<std::size_t>(j)];
}

double ScalingGrid::l2_norm2() const {
  double s = 0.0;
  for (const auto& c : samples) s += std::norm(c);
  return s * step();
}

cplx ScalingGrid::integral() const {
  cplx s{};
  for (const auto& c : samples) s += c;
  return s * step();
}

ScalingGrid ScalingGrid::normalized_l2() const {
  ScalingGrid g = *this;
  const double n = std::sqrt(l2_norm2());
  if (n > 0.0)
    for (auto& c : g.samples) c /= n;
  return g;
}

CascadeResult cascade_iterate(const LaurentPoly& m0, int N, int L, int iters) {
  if (N < 2 || L < 0 || iters < 1)
    throw Error(Errc::Precondition, "cascade needs N >= 2, L >= 0, iters >= 1");
  require_normalized(m0, N);
  const long long U = ipow(N, L);
  const long long kmin = std::min(0, m0.min_index());
  const long long kmax = std::max(N - 1, m0.max_index());
  const long long lo = floor_div(kmin * U, N - 1) - 1;
  const long long hi = ceil_div(kmax * U, N - 1) + 1;

  ScalingGrid cur;
  cur.N = N;
  cur.L = L;
  cur.offset = lo;
  cur.samples.assign(static_cast<std::size_t>(hi - lo), cplx{});
  for (long long j = 0; j < U; ++j) cur.samples[static_cast<std::size_t>(j - lo)] = 1.0;

  CascadeResult res;
  std::vector<cplx> next(cur.samples.size());
  double prev = std::numeric_limits<double>::infinity();
  int growth = 0;
  for (int it = 1; it <= iters; ++it) {
    refine_into(cur, m0, lo, next);
    double r = 0.0;
    for (std::size_t j = 0; j < next.size(); ++j) r = std::max(r, std::abs(next[j] - cur.samples[j]));
    cur.samples.swap(next);
    res.iterations = it;
    res.residual = r;
    if (r > prev && r > 1e-12) {
      if (++growth >= 3)
        throw Error(Errc::Diverging, "cascade residual grew three iterations in a row (" +
                                         std::to_string(r) + ")");
    } else {
      growth = 0;
    }
    prev = r;
    if (r <= 1e-14) break;
  }
  res.grid = std::move(cur);
  return res;
}

ScalingGrid refine(const ScalingGrid& f, const LaurentPoly& c) {
  const long long U = f.cells_per_unit();
  const long long f_lo = f.offset;
  const long long f_hi = f.offset + static_cast<long long>(f.samples.size());
  ScalingGrid out;
  out.N = f.N;
  out.L = f.L;
  if (c.is_zero() || f.samples.empty()) return out;
  out.offset = floor_div(f_lo + c.min_index() * U, f.N);
  const long long last = floor_div(f_hi - 1 + c.max_index() * U, f.N);
  out.samples.resize(static_cast<std::size_t>(last - out.offset + 1));
  refine_into(f, c, out.offset, out.samples);
  return out;
}

double refinement_residual(const ScalingGrid& phi, const LaurentPoly& m0) {
  const ScalingGrid r = refine(phi, m0);
  const long long lo = std::min(phi.offset, r.offset);
  const long long hi = std::max(phi.offset + static_cast<long long>(phi.samples.size()),
                                r.offset + static_cast<long long>(r.samples.size()));
  double worst = 0.0;
  for (long long c = lo; c < hi; ++c) worst = std::max(worst, std::abs(phi.at_cell(c) - r.at_cell(c)));
  return worst;
}

std::vector<ScalingGrid> mother_grids(const FilterBank& bank, const ScalingGrid& phi) {
  std::vector<ScalingGrid> out;
  for (int i = 1; i < bank.N(); ++i) out.push_back(refine(phi, bank.m(i)));
  return out;
}

std::vector<double> uniform_grid(double a, double b, int n) {
  if (n < 1) throw Error(Errc::Precondition, "grid needs at least one point");
  std::vector<double> t(static_cast<std::size_t>(n));
  if (n == 1) {
    t[0] = a;
    return t;
  }
  for (int i = 0; i < n; ++i) t[static_cast<std::size_t>(i)] = a + (b - a) * i / (n - 1);
  return t;
}

std::vector<double> default_t_grid() {
  return uniform_grid(-16.0 * std::numbers::pi, 16.0 * std::numbers::pi, 4096);
}

std::vector<double> periodic_t_grid(int P, int periods) {
  if (P < 1 || periods < 1) throw Error(Errc::Precondition, "periodic grid needs P, periods >= 1");
  std::vector<double> t(static_cast<std::size_t>(P) * static_cast<std::size_t>(periods));
  for (std::size_t i = 0; i < t.size(); ++i)
    t[i] = -periods * std::numbers::pi + kTwoPi * static_cast<double>(i) / P;
  return t;
}

SpectralSamples infinite_product(const LaurentPoly& m0, int N, const std::vector<double>& t,
                                 int K) {
  require_normalized(m0, N);
  if (K < 0) throw Error(Errc::Precondition, "product depth must be nonnegative");
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(N));
  double lip = 0.0;
  for (const auto& [k, a] : m0.coeffs()) lip += std::abs(static_cast<double>(k) * a);
  const double decay = std::pow(static_cast<double>(N), -K);

  SpectralSamples s;
  s.t = t;
  s.K = K;
  s.values.resize(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    cplx v = kInvSqrtTwoPi;
    double arg = t[i];
    for (int k = 1; k <= K; ++k) {
      arg /= N;
      v *= m0.at_angle(arg) * inv_sqrt_n;
    }
    s.values[i] = v;
    s.tail_bound = std::max(s.tail_bound, kInvSqrtTwoPi * lip * std::abs(t[i]) * decay *
                                              inv_sqrt_n / (N - 1));
  }
  return s;
}

SpectralSamples grid_spectrum(const ScalingGrid& grid, const std::vector<double>& t) {
  const double h = grid.step();
  const double x0 = grid.left(0);
  SpectralSamples s;
  s.t = t;
  s.values.resize(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double ti = t[i];
    if (std::abs(ti) < 1e-14) {
      s.values[i] = kInvSqrtTwoPi * grid.integral();
      continue;
    }
    const cplx w = std::polar(1.0, -h * ti);
    cplx p = std::polar(1.0, -x0 * ti);
    cplx acc{};
    for (std::size_t j = 0; j < grid.samples.size(); ++j) {
      acc += grid.samples[j] * p;
      p *= w;
      // Keep the running phase on the unit circle.
      if ((j & 1023) == 1023) p /= std::abs(p);
    }
    const cplx cell = (1.0 - w) / cplx(0.0, ti);
    s.values[i] = kInvSqrtTwoPi * acc * cell;
  }
  return s;
}

std::vector<SpectralSamples> mother_spectra(const FilterBank& bank, const std::vector<double>& t,
                                            int K) {
  const int N = bank.N();
  std::vector<double> scaled(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) scaled[i] = t[i] / N;
  const SpectralSamples phi = infinite_product(bank.low_pass(), N, scaled, K);
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(N));
  std::vector<SpectralSamples> out;
  for (int k = 1; k < N; ++k) {
    SpectralSamples s;
    s.t = t;
    s.K = K;
    s.tail_bound = phi.tail_bound;
    s.values.resize(t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
      s.values[i] = inv_sqrt_n * bank.m(k).at_angle(scaled[i]) * phi.values[i];
    out.push_back(std::move(s));
  }
  return out;
}

LaurentPoly per(const ScalingGrid& grid) {
  const long long U = grid.cells_per_unit();
  const auto n = static_cast<long long>(grid.samples.size());
  const long long max_lag = (n + U - 1) / U;
  LaurentPoly::map_type out;
  for (long long m = -max_lag; m <= max_lag; ++m) {
    cplx s{};
    for (long long j = 0; j < n; ++j) {
      const long long k = j + m * U;
      if (k < 0 || k >= n) continue;
      s += std::conj(grid.samples[static_cast<std::size_t>(j)]) *
           grid.samples[static_cast<std::size_t>(k)];
    }
    out.emplace(static_cast<int>(m), s * grid.step());
  }
  return LaurentPoly(std::move(out));
}

LaurentPoly per(const SpectralSamples& spectrum, int max_lag) {
  const auto& t = spectrum.t;
  if (t.size() < 2) throw Error(Errc::Precondition, "periodization needs at least two samples");
  const double step = t[1] - t[0];
  const int P = static_cast<int>(std::lround(kTwoPi / step));
  if (P < 1 || std::abs(step - kTwoPi / P) > 1e-9)
    throw Error(Errc::Precondition, "periodization needs a t-grid with step 2 pi / P");
  std::vector<double> folded(static_cast<std::size_t>(P), 0.0);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const long long idx = std::llround((t[i] - t[0]) / step);
    folded[static_cast<std::size_t>(((idx % P) + P) % P)] += std::norm(spectrum.values[i]);
  }
  LaurentPoly::map_type out;
  for (int m = -max_lag; m <= max_lag; ++m) {
    cplx s{};
    for (int b = 0; b < P; ++b)
      s += folded[static_cast<std::size_t>(b)] * std::polar(1.0, m * (t[0] + b * step));
    out.emplace(m, kTwoPi * s / static_cast<double>(P));
  }
  return LaurentPoly(std::move(out));
}

namespace {

// Golden-section polish of a sampled extremum of a smooth periodic function.
double polish(const LaurentPoly& p, double t, double width, bool minimize) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  const auto f = [&](double x) {
    const double v = p.at_angle(x).real();
    return minimize ? v : -v;
  };
  double a = t - width, b = t + width;
  double c = b - g * (b - a), d = a + g * (b - a);
  for (int i = 0; i < 80; ++i) {
    if (f(c) < f(d))
      b = d;
    else
      a = c;
    c = b - g * (b - a);
    d = a + g * (b - a);
  }
  const double x = 0.5 * (a + b);
  return std::min(f(x), f(t)) * (minimize ? 1.0 : -1.0);
}

}  // namespace

FrameBounds frame_bounds(const LaurentPoly& per_poly, int grid_size) {
  if (grid_size < 1) throw Error(Errc::Precondition, "frame bounds need a positive grid size");
  FrameBounds fb;
  if (per_poly.is_zero()) return fb;
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  double t_lo = 0.0, t_hi = 0.0, peak = 0.0, worst_imag = 0.0;
  for (int i = 0; i < grid_size; ++i) {
    const double t = kTwoPi * i / grid_size;
    const cplx v = per_poly.at_angle(t);
    peak = std::max(peak, std::abs(v));
    worst_imag = std::max(worst_imag, std::abs(v.imag()));
    if (v.real() < lo) {
      lo = v.real();
      t_lo = t;
    }
    if (v.real() > hi) {
      hi = v.real();
      t_hi = t;
    }
  }
  if (worst_imag > 1e-9 * std::max(1.0, peak))
    throw Error(Errc::NotRealValued, "periodization has imaginary part " + std::to_string(worst_imag));
  const double width = kTwoPi / grid_size;
  fb.lower = std::min(lo, polish(per_poly, t_lo, width, true));
  fb.upper = std::max(hi, polish(per_poly, t_hi, width, false));
  fb.invertible = fb.lower > 1e-10;
  return fb;
}

double l2_distance(const SpectralSamples& x, const SpectralSamples& y, double a, double b) {
  if (x.t.size() != y.t.size()) throw Error(Errc::Precondition, "spectra live on different grids");
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.t.size(); ++i) {
    const double t0 = x.t[i], t1 = x.t[i + 1];
    if (t0 < a - 1e-12 || t1 > b + 1e-12) continue;
    s += 0.5 * (t1 - t0) * (std::norm(x.values[i] - y.values[i]) +
                            std::norm(x.values[i + 1] - y.values[i + 1]));
  }
  return std::sqrt(s);
}

namespace {

std::string fmt(double v) {
  if (std::abs(v) < 1e-300 || v == 0.0) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

}  // namespace

void write_grid_csv(std::ostream& os, const ScalingGrid& grid) {
  os << "x,value_re,value_im\n";
  for (std::size_t j = 0; j < grid.samples.size(); ++j)
    os << fmt(grid.midpoint(j)) << ',' << fmt(grid.samples[j].real()) << ','
       << fmt(grid.samples[j].imag()) << '\n';
}

void write_spectrum_csv(std::ostream& os, const SpectralSamples& s) {
  os << "t,re,im\n";
  for (std::size_t i = 0; i < s.t.size(); ++i)
    os << fmt(s.t[i]) << ',' << fmt(s.values[i].real()) << ',' << fmt(s.values[i].imag()) << '\n';
}

}  // namespace waveletn
