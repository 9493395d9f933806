// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The waveletn Authors

#include "waveletn/laurent.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace waveletn {

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const int, cplx>> init)
    : coeffs_(init) {
  prune();
}

LaurentPoly::LaurentPoly(map_type coeffs) : coeffs_(std::move(coeffs)) { prune(); }

LaurentPoly LaurentPoly::monomial(int k, cplx c) {
  LaurentPoly p;
  p.set(k, c);
  return p;
}

cplx LaurentPoly::operator[](int k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? cplx{} : it->second;
}

void LaurentPoly::set(int k, cplx c) {
  if (std::abs(c) < kPruneTol) {
    coeffs_.erase(k);
  } else {
    coeffs_[k] = c;
  }
}

int LaurentPoly::min_index() const noexcept {
  return coeffs_.empty() ? 0 : coeffs_.begin()->first;
}

int LaurentPoly::max_index() const noexcept {
  return coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
}

int LaurentPoly::reach() const noexcept {
  return std::max(std::abs(min_index()), std::abs(max_index()));
}

cplx LaurentPoly::operator()(cplx z) const {
  if (coeffs_.empty()) return {};
  // Horner in z from the top index down, then shift by z^{min}.
  const int lo = min_index();
  cplx acc{};
  int prev = max_index();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= std::pow(z, prev - it->first);
    acc += it->second;
    prev = it->first;
  }
  return acc * std::pow(z, lo);
}

cplx LaurentPoly::at_angle(double t) const {
  cplx acc{};
  for (const auto& [k, a] : coeffs_) acc += a * std::polar(1.0, -t * k);
  return acc;
}

double LaurentPoly::norm2() const noexcept {
  double s = 0.0;
  for (const auto& [k, a] : coeffs_) s += std::norm(a);
  return s;
}

double LaurentPoly::norm() const noexcept { return std::sqrt(norm2()); }

bool LaurentPoly::is_monomial(cplx* c, int* n) const {
  if (coeffs_.size() != 1) return false;
  if (c) *c = coeffs_.begin()->second;
  if (n) *n = coeffs_.begin()->first;
  return true;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& q) {
  for (const auto& [k, a] : q.coeffs_) coeffs_[k] += a;
  prune();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& q) {
  for (const auto& [k, a] : q.coeffs_) coeffs_[k] -= a;
  prune();
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(cplx s) {
  for (auto& [k, a] : coeffs_) a *= s;
  prune();
  return *this;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly::map_type out;
  for (const auto& [i, a] : p.coeffs_)
    for (const auto& [j, b] : q.coeffs_) out[i + j] += a * b;
  return LaurentPoly(std::move(out));
}

void LaurentPoly::prune() {
  std::erase_if(coeffs_, [](const auto& kv) { return std::abs(kv.second) < kPruneTol; });
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }

LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

LaurentPoly conj_reflect(const LaurentPoly& p) {
  LaurentPoly::map_type out;
  for (const auto& [k, a] : p.coeffs()) out.emplace(-k, std::conj(a));
  return LaurentPoly(std::move(out));
}

LaurentPoly upsample(const LaurentPoly& p, int N) {
  if (N < 1) throw std::invalid_argument("upsample: N must be positive");
  LaurentPoly::map_type out;
  for (const auto& [k, a] : p.coeffs()) out.emplace(N * k, a);
  return LaurentPoly(std::move(out));
}

LaurentPoly downsample(const LaurentPoly& p, int N) {
  if (N < 1) throw std::invalid_argument("downsample: N must be positive");
  LaurentPoly::map_type out;
  for (const auto& [k, a] : p.coeffs())
    if (k % N == 0) out.emplace(k / N, a);
  return LaurentPoly(std::move(out));
}

cplx root_of_unity(long long j, long long N) {
  if (N <= 0) throw std::invalid_argument("root_of_unity: N must be positive");
  j %= N;
  if (j < 0) j += N;
  if ((4 * j) % N == 0) {
    switch ((4 * j) / N) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      case 3: return {0.0, -1.0};
    }
  }
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(N));
}

LaurentPoly rotate(const LaurentPoly& p, int j, int N) {
  LaurentPoly::map_type out;
  for (const auto& [k, a] : p.coeffs())
    out.emplace(k, a * root_of_unity(static_cast<long long>(j) * k, N));
  return LaurentPoly(std::move(out));
}

cplx inner(const LaurentPoly& p, const LaurentPoly& q) {
  cplx s{};
  const auto& pc = p.coeffs();
  const auto& qc = q.coeffs();
  // Walk the smaller map and probe the larger.
  if (pc.size() <= qc.size()) {
    for (const auto& [k, a] : pc) s += std::conj(a) * q[k];
  } else {
    for (const auto& [k, b] : qc) s += std::conj(p[k]) * b;
  }
  return s;
}

double distance(const LaurentPoly& p, const LaurentPoly& q) {
  // Not via p - q: pruning would hide differences below the prune tolerance.
  double s = 0.0;
  for (const auto& [k, a] : p.coeffs()) s += std::norm(a - q[k]);
  for (const auto& [k, b] : q.coeffs())
    if (!p.coeffs().contains(k)) s += std::norm(b);
  return std::sqrt(s);
}

LaurentPoly abs2(const LaurentPoly& p) { return conj_reflect(p) * p; }

}  // namespace waveletn
