// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The waveletn Authors

#include "waveletn/filterbank.hpp"

#include <array>
#include <cmath>
#include <string>

#include "waveletn/error.hpp"

namespace waveletn {

FilterBank::FilterBank(int N, std::vector<LaurentPoly> filters)
    : N_(N), filters_(std::move(filters)) {
  if (N_ < 2) throw Error(Errc::Precondition, "filter bank needs N >= 2");
  if (static_cast<int>(filters_.size()) != N_)
    throw Error(Errc::Precondition, "filter bank needs exactly N filters, got " +
                                        std::to_string(filters_.size()));
  for (std::size_t i = 0; i < filters_.size(); ++i)
    if (filters_[i].is_zero())
      throw Error(Errc::Precondition, "filter m_" + std::to_string(i) + " is zero");
}

LaurentPoly PolyphaseVector::reassemble() const {
  LaurentPoly m;
  for (int j = 0; j < N; ++j)
    m += LaurentPoly::monomial(j) * upsample(p[static_cast<std::size_t>(j)], N);
  return m;
}

double check_isometry_row(const LaurentPoly& m0, int N) {
  return distance(downsample(abs2(m0), N), LaurentPoly::constant(1.0));
}

Eigen::MatrixXd check_unitarity(const FilterBank& bank) {
  const int N = bank.N();
  Eigen::MatrixXd res(N, N);
  for (int i = 0; i < N; ++i) {
    const LaurentPoly mi_bar = conj_reflect(bank.m(i));
    for (int j = 0; j < N; ++j) {
      const LaurentPoly target = i == j ? LaurentPoly::constant(1.0) : LaurentPoly{};
      res(i, j) = distance(downsample(mi_bar * bank.m(j), N), target);
    }
  }
  return res;
}

double unitarity_residual(const FilterBank& bank) { return check_unitarity(bank).maxCoeff(); }

PolyphaseVector polyphase(const LaurentPoly& m, int N) {
  if (N < 2) throw Error(Errc::Precondition, "polyphase needs N >= 2");
  std::vector<LaurentPoly::map_type> parts(static_cast<std::size_t>(N));
  for (const auto& [i, a] : m.coeffs()) {
    const int j = ((i % N) + N) % N;
    parts[static_cast<std::size_t>(j)].emplace((i - j) / N, a);
  }
  PolyphaseVector out{N, {}};
  out.p.reserve(parts.size());
  for (auto& part : parts) out.p.emplace_back(std::move(part));
  return out;
}

CompletionMethod parse_completion_method(std::string_view name) {
  if (name == "auto") return CompletionMethod::Auto;
  if (name == "flip2") return CompletionMethod::Flip2;
  if (name == "householder_const") return CompletionMethod::HouseholderConst;
  if (name == "quaternion") return CompletionMethod::Quaternion;
  if (name == "cayley") return CompletionMethod::Cayley;
  throw Error(Errc::Parse, "unknown completion method '" + std::string(name) + "'");
}

std::string_view to_string(CompletionMethod method) {
  switch (method) {
    case CompletionMethod::Auto: return "auto";
    case CompletionMethod::Flip2: return "flip2";
    case CompletionMethod::HouseholderConst: return "householder_const";
    case CompletionMethod::Quaternion: return "quaternion";
    case CompletionMethod::Cayley: return "cayley";
  }
  return "auto";
}

Eigen::MatrixXcd householder_completion(const Eigen::VectorXcd& c) {
  const Eigen::Index n = c.size();
  Eigen::VectorXcd e0 = Eigen::VectorXcd::Zero(n);
  e0(0) = 1.0;
  if ((c + e0).norm() < kPruneTol) {
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Identity(n, n);
    d(0, 0) = -1.0;
    return d;
  }
  // Rotate the phase so that c'_0 >= 0, reflect e_0 onto c', rotate back.
  const cplx phase = std::abs(c(0)) > 0.0 ? c(0) / std::abs(c(0)) : cplx{1.0};
  const Eigen::VectorXcd cp = c / phase;
  Eigen::MatrixXcd H = Eigen::MatrixXcd::Identity(n, n);
  const Eigen::VectorXcd diff = e0 - cp;
  if (diff.norm() > kPruneTol) {
    const Eigen::VectorXcd u = diff / diff.norm();
    H -= 2.0 * u * u.adjoint();
  }
  // H e_0 = c', so the columns of phase * H are orthonormal with column 0 = c;
  // the transpose has c as its first row.
  return (phase * H).transpose();
}

namespace {

using Quat = std::array<double, 4>;
using Oct = std::array<double, 8>;

Quat qmul(const Quat& a, const Quat& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

Quat qconj(const Quat& a) { return {a[0], -a[1], -a[2], -a[3]}; }

// Cayley-Dickson doubling: (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)).
Oct omul(const Oct& x, const Oct& y) {
  const Quat a{x[0], x[1], x[2], x[3]}, b{x[4], x[5], x[6], x[7]};
  const Quat c{y[0], y[1], y[2], y[3]}, d{y[4], y[5], y[6], y[7]};
  const Quat ac = qmul(a, c), db = qmul(qconj(d), b);
  const Quat da = qmul(d, a), bc = qmul(b, qconj(c));
  Oct out{};
  for (int i = 0; i < 4; ++i) {
    out[static_cast<std::size_t>(i)] = ac[static_cast<std::size_t>(i)] - db[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(i + 4)] = da[static_cast<std::size_t>(i)] + bc[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace

Eigen::MatrixXd imaginary_unit_frame(const Eigen::VectorXd& x) {
  const Eigen::Index n = x.size();
  if (n != 4 && n != 8)
    throw Error(Errc::UnsupportedShape, "imaginary unit frames exist only in dimension 4 and 8");
  Eigen::MatrixXd rows(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    if (n == 4) {
      Quat e{}, v{x(0), x(1), x(2), x(3)};
      e[static_cast<std::size_t>(k)] = 1.0;
      const Quat r = qmul(e, v);
      for (int j = 0; j < 4; ++j) rows(k, j) = r[static_cast<std::size_t>(j)];
    } else {
      Oct e{}, v{};
      e[static_cast<std::size_t>(k)] = 1.0;
      for (int j = 0; j < 8; ++j) v[static_cast<std::size_t>(j)] = x(j);
      const Oct r = omul(e, v);
      for (int j = 0; j < 8; ++j) rows(k, j) = r[static_cast<std::size_t>(j)];
    }
  }
  return rows;
}

namespace {

FilterBank complete_flip2(const LaurentPoly& m0) {
  LaurentPoly m1 = LaurentPoly::monomial(1) * conj_reflect(rotate(m0, 1, 2));
  return FilterBank(2, {m0, std::move(m1)});
}

struct MonomialShape {
  Eigen::VectorXcd c;
  std::vector<int> degree;
};

bool monomial_shape(const PolyphaseVector& pv, MonomialShape& out) {
  out.c = Eigen::VectorXcd::Zero(pv.N);
  out.degree.assign(static_cast<std::size_t>(pv.N), 0);
  for (int j = 0; j < pv.N; ++j) {
    const LaurentPoly& pj = pv.p[static_cast<std::size_t>(j)];
    if (pj.is_zero()) continue;
    cplx c;
    int d = 0;
    if (!pj.is_monomial(&c, &d)) return false;
    out.c(j) = c;
    out.degree[static_cast<std::size_t>(j)] = d;
  }
  return true;
}

FilterBank bank_from_rows(const Eigen::MatrixXcd& U, const MonomialShape& shape,
                          const LaurentPoly& m0) {
  const int N = static_cast<int>(U.rows());
  std::vector<LaurentPoly> filters;
  filters.reserve(static_cast<std::size_t>(N));
  filters.push_back(m0);
  for (int r = 1; r < N; ++r) {
    LaurentPoly m;
    for (int j = 0; j < N; ++j)
      m.set(j + N * shape.degree[static_cast<std::size_t>(j)], U(r, j));
    filters.push_back(std::move(m));
  }
  return FilterBank(N, std::move(filters));
}

Eigen::MatrixXcd real_frame_completion(const Eigen::VectorXcd& c) {
  Eigen::Index lead = 0;
  while (lead < c.size() && std::abs(c(lead)) < kPruneTol) ++lead;
  const cplx phase = c(lead) / std::abs(c(lead));
  const Eigen::VectorXcd x = c / phase;
  if (x.imag().cwiseAbs().maxCoeff() > 1e-12)
    throw Error(Errc::UnsupportedShape,
                "imaginary-unit completion needs a real coefficient vector up to a global phase");
  return phase * imaginary_unit_frame(x.real()).cast<cplx>();
}

}  // namespace

FilterBank complete(const LaurentPoly& m0, int N, CompletionMethod method) {
  if (N < 2) throw Error(Errc::Precondition, "complete needs N >= 2");
  if (check_isometry_row(m0, N) > kUnitarityTol)
    throw Error(Errc::NotIsometric, "low-pass row fails the isometry condition");

  if (method == CompletionMethod::Auto)
    method = N == 2 ? CompletionMethod::Flip2 : CompletionMethod::HouseholderConst;

  if (method == CompletionMethod::Flip2) {
    if (N != 2) throw Error(Errc::Precondition, "flip2 completion requires N = 2");
    return complete_flip2(m0);
  }
  if (method == CompletionMethod::Quaternion && N != 4)
    throw Error(Errc::Precondition, "quaternion completion requires N = 4");
  if (method == CompletionMethod::Cayley && N != 8)
    throw Error(Errc::Precondition, "cayley completion requires N = 8");

  MonomialShape shape;
  if (!monomial_shape(polyphase(m0, N), shape))
    throw Error(Errc::UnsupportedShape,
                "polyphase components are not single monomials; general paraunitary "
                "completion is not supported");

  const Eigen::MatrixXcd U = method == CompletionMethod::HouseholderConst
                                 ? householder_completion(shape.c)
                                 : real_frame_completion(shape.c);
  return bank_from_rows(U, shape, m0);
}

}  // namespace waveletn
