// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The waveletn Authors

#include "waveletn/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "linalg.hpp"
#include "waveletn/error.hpp"
#include "waveletn/filterbank.hpp"

namespace waveletn {

bool TransferMatrix::isometric() const { return isometry_residual <= kUnitarityTol; }

LaurentPoly TransferMatrix::apply(const LaurentPoly& f) const {
  return detail::from_window(R * detail::to_window(f, d), d);
}

int transfer_window(const LaurentPoly& m0, int N) {
  if (N < 2) throw Error(Errc::Precondition, "transfer window needs N >= 2");
  return (m0.spread() + N - 2) / (N - 1);
}

TransferMatrix build_transfer(const LaurentPoly& m0, int N, int d) {
  const int needed = transfer_window(m0, N);
  if (d < needed)
    throw Error(Errc::WindowTooSmall, "window d = " + std::to_string(d) +
                                          " is not invariant under R; need d >= " +
                                          std::to_string(needed));
  TransferMatrix tm;
  tm.N = N;
  tm.d = d;
  tm.m0 = m0;
  tm.isometry_residual = check_isometry_row(m0, N);
  const LaurentPoly weight = abs2(m0);
  detail::window_matrix(
      d, [&](const LaurentPoly& f) { return downsample(weight * f, N); }, tm.R);
  return tm;
}

std::string_view to_string(Verdict v) {
  return v == Verdict::Orthonormal ? "Orthonormal" : "NotOrthonormal";
}

FixedSpace fixed_space(const TransferMatrix& tm) {
  const Eigen::Index n = tm.R.rows();
  Eigen::BDCSVD<Eigen::MatrixXcd> norm_svd(tm.R);
  const double rnorm = norm_svd.singularValues()(0);
  const Eigen::MatrixXcd kernel =
      detail::null_space(tm.R - Eigen::MatrixXcd::Identity(n, n), 1e-8 * rnorm);

  FixedSpace fs;
  fs.dim = static_cast<int>(kernel.cols());
  for (Eigen::Index c = 0; c < kernel.cols(); ++c)
    fs.basis.push_back(detail::normalize_phase(detail::from_window(kernel.col(c), tm.d, 1e-10)));
  if (fs.dim == 1 && std::abs(fs.basis.front()[0]) >= 1.0 - 1e-8)
    fs.verdict = Verdict::Orthonormal;
  return fs;
}

std::vector<cplx> eigenvalues(const TransferMatrix& tm) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(tm.R, false);
  std::vector<cplx> ev(es.eigenvalues().data(),
                       es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(ev.begin(), ev.end(), [](cplx a, cplx b) {
    if (std::abs(std::abs(a) - std::abs(b)) > 1e-12) return std::abs(a) > std::abs(b);
    return std::arg(a) < std::arg(b);
  });
  return ev;
}

cplx UnitRoot::point() const { return root_of_unity(num, den); }

namespace {

constexpr long long kMaxCyclePoints = 5'000'000;

long long checked_power(int N, int K) {
  long long p = 1;
  for (int k = 0; k < K; ++k) {
    p *= N;
    if (p > kMaxCyclePoints)
      throw Error(Errc::Precondition, "cycle search over N^K points is too large");
  }
  return p;
}

int affordable_period(int N, int K) {
  long long p = 1;
  for (int k = 1; k <= K; ++k) {
    p *= N;
    if (p > kMaxCyclePoints) return std::max(1, k - 1);
  }
  return K;
}

}  // namespace

std::vector<Cycle> cohen_cycles(const LaurentPoly& m0, int N, int K) {
  if (N < 2 || K < 1) throw Error(Errc::Precondition, "cohen_cycles needs N >= 2 and K >= 1");
  checked_power(N, K);
  const double target = std::sqrt(static_cast<double>(N));
  std::set<std::pair<long long, long long>> seen;
  std::vector<Cycle> cycles;
  long long power = 1;
  for (int k = 1; k <= K; ++k) {
    power *= N;
    const long long P = power - 1;
    for (long long j = 0; j < P; ++j) {
      const long long g = std::gcd(j, P);
      UnitRoot start{j / g, P / g};
      if (seen.contains({start.num, start.den})) continue;
      Cycle orbit;
      UnitRoot cur = start;
      do {
        orbit.push_back(cur);
        seen.insert({cur.num, cur.den});
        cur.num = (cur.num * N) % cur.den;
      } while (!(cur == start));
      const bool on_cycle = std::all_of(orbit.begin(), orbit.end(), [&](const UnitRoot& a) {
        return std::abs(std::abs(m0(a.point())) - target) <= 1e-9;
      });
      if (on_cycle) cycles.push_back(std::move(orbit));
    }
  }
  return cycles;
}

std::string describe(const Cycle& cycle) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i) os << ", ";
    if (cycle[i].num == 0)
      os << '1';
    else
      os << "exp(2 pi i " << cycle[i].num << '/' << cycle[i].den << ')';
  }
  os << '}';
  return os.str();
}

namespace {

void fit_atoms(const TransferMatrix& tm, MeasureD& md) {
  const int K = affordable_period(tm.N, 6);
  std::vector<UnitRoot> candidates{UnitRoot{0, 1}};
  for (const auto& cycle : cohen_cycles(tm.m0, tm.N, K))
    for (const auto& a : cycle)
      if (a.num != 0) candidates.push_back(a);

  const auto rows = static_cast<Eigen::Index>(md.moments.size());
  const auto cols = static_cast<Eigen::Index>(candidates.size());
  Eigen::MatrixXd A(2 * rows, cols);
  Eigen::VectorXd b(2 * rows);
  Eigen::Index r = 0;
  for (const auto& [k, moment] : md.moments) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      const cplx v = root_of_unity(candidates[static_cast<std::size_t>(c)].num * k,
                                   candidates[static_cast<std::size_t>(c)].den);
      A(r, c) = v.real();
      A(rows + r, c) = v.imag();
    }
    b(r) = moment.real();
    b(rows + r) = moment.imag();
    ++r;
  }
  const Eigen::VectorXd w = A.completeOrthogonalDecomposition().solve(b);
  md.fit_residual = (A * w - b).norm();
  const bool nonnegative = (w.array() >= -1e-8).all();
  if (md.fit_residual <= 1e-4 && nonnegative && std::abs(w.sum() - 1.0) <= 1e-6) {
    for (Eigen::Index c = 0; c < cols; ++c)
      if (w(c) > 1e-8) md.atoms.push_back({candidates[static_cast<std::size_t>(c)], w(c)});
  }
}

}  // namespace

MeasureD measure_d(const TransferMatrix& tm, int M) {
  if (M < 0) throw Error(Errc::Precondition, "averaging length must be nonnegative");
  const Eigen::Index n = tm.R.rows();
  const int half = std::max(60, (M / 2 + 59) / 60 * 60);

  Eigen::RowVectorXcd row = Eigen::RowVectorXcd::Zero(n);
  row(tm.d) = 1.0;
  for (int i = 0; i < M; ++i) row = row * tm.R;
  Eigen::RowVectorXcd first = Eigen::RowVectorXcd::Zero(n);
  Eigen::RowVectorXcd second = Eigen::RowVectorXcd::Zero(n);
  for (int i = 0; i < half; ++i) {
    row = row * tm.R;
    first += row;
  }
  for (int i = 0; i < half; ++i) {
    row = row * tm.R;
    second += row;
  }
  first /= static_cast<double>(half);
  second /= static_cast<double>(half);

  MeasureD md;
  md.burn_in = M;
  md.window = 2 * half;
  md.tail_variation = (first - second).cwiseAbs().maxCoeff();
  if (md.tail_variation > 1e-6)
    throw Error(Errc::NonConvergent, "averages of R^n did not settle (variation " +
                                         std::to_string(md.tail_variation) + ")");
  const Eigen::RowVectorXcd avg = (first + second) / 2.0;
  for (int k = -tm.d; k <= tm.d; ++k) {
    cplx v = avg(k + tm.d);
    if (std::abs(v) < kPruneTol) v = 0.0;
    md.moments.emplace(k, v);
  }
  fit_atoms(tm, md);
  return md;
}

FatherVerdict father_criterion(const LaurentPoly& m0, int N) {
  if (check_isometry_row(m0, N) > kUnitarityTol)
    throw Error(Errc::NotIsometric, "m0 fails the isometry row condition");
  if (std::abs(m0(1.0) - std::sqrt(static_cast<double>(N))) > 1e-9)
    throw Error(Errc::NotNormalized, "m0(1) differs from sqrt(N)");

  const TransferMatrix tm = build_transfer(m0, N, transfer_window(m0, N));
  FatherVerdict out;
  out.fixed = fixed_space(tm);
  out.measure = measure_d(tm);
  out.cycles = cohen_cycles(m0, N, affordable_period(N, 6));

  const bool dirac = std::all_of(out.measure.moments.begin(), out.measure.moments.end(),
                                 [](const auto& kv) { return std::abs(kv.second - 1.0) <= 1e-6; });
  const bool orthonormal = out.fixed.verdict == Verdict::Orthonormal;
  if (dirac != orthonormal)
    throw Error(Errc::Inconsistent, dirac ? "D = delta_1 but the fixed space of R is not trivial"
                                          : "fixed space of R is trivial but D != delta_1");
  out.is_father = dirac;
  if (out.is_father) {
    out.reason = "D = delta_1 and the fixed space of R is spanned by the constants";
    return out;
  }
  std::ostringstream os;
  os << "fixed space of R has dimension " << out.fixed.dim;
  bool any = false;
  for (const auto& c : out.cycles) {
    if (c.size() == 1 && c.front().num == 0) continue;
    os << (any ? ", " : "; cycle at ") << describe(c);
    any = true;
  }
  if (!any) os << "; no nontrivial cycle of period <= 6";
  out.reason = os.str();
  return out;
}

}  // namespace waveletn
