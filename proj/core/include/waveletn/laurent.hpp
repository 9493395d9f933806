// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The waveletn Authors

#pragma once

#include <complex>
#include <initializer_list>
#include <map>
#include <utility>

namespace waveletn {

using cplx = std::complex<double>;

/// Coefficients with modulus below this are dropped after every operation.
inline constexpr double kPruneTol = 1e-12;

/// Finitely supported Laurent series p(z) = sum_k a_k z^k on the unit circle.
///
/// The circle variable follows z = e^{-it}, so a filter m(t) = sum_k a_k e^{-ikt}
/// stores a_k at index k. Storage is sparse and keyed by (possibly negative)
/// integer index; the zero polynomial has no entries.
class LaurentPoly {
 public:
  using map_type = std::map<int, cplx>;

  LaurentPoly() = default;
  LaurentPoly(std::initializer_list<std::pair<const int, cplx>> init);
  explicit LaurentPoly(map_type coeffs);

  static LaurentPoly constant(cplx c) { return monomial(0, c); }
  static LaurentPoly monomial(int k, cplx c = 1.0);

  const map_type& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::size_t size() const noexcept { return coeffs_.size(); }

  /// Coefficient at index k (zero when absent).
  cplx operator[](int k) const;
  void set(int k, cplx c);

  /// Smallest / largest stored index. Both are 0 for the zero polynomial.
  int min_index() const noexcept;
  int max_index() const noexcept;
  /// max_index - min_index.
  int spread() const noexcept { return max_index() - min_index(); }
  /// max(|min_index|, |max_index|).
  int reach() const noexcept;

  /// p(z) for any nonzero complex z.
  cplx operator()(cplx z) const;
  /// p(e^{-it}).
  cplx at_angle(double t) const;

  /// Sum of |a_k|^2, i.e. the squared L^2(T) norm.
  double norm2() const noexcept;
  double norm() const noexcept;

  /// True if this is a single monomial c z^n; writes c and n when requested.
  bool is_monomial(cplx* c = nullptr, int* n = nullptr) const;

  LaurentPoly& operator+=(const LaurentPoly& q);
  LaurentPoly& operator-=(const LaurentPoly& q);
  LaurentPoly& operator*=(cplx s);

  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
  friend LaurentPoly operator-(LaurentPoly p) { return p *= -1.0; }
  friend LaurentPoly operator*(LaurentPoly p, cplx s) { return p *= s; }
  friend LaurentPoly operator*(cplx s, LaurentPoly p) { return p *= s; }
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);

  /// Exact equality of the pruned coefficient maps.
  friend bool operator==(const LaurentPoly& p, const LaurentPoly& q) = default;

 private:
  void prune();
  map_type coeffs_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);

/// The circle function conj(p(z)): coefficient at k is conj(a_{-k}).
LaurentPoly conj_reflect(const LaurentPoly& p);

/// p(z^N).
LaurentPoly upsample(const LaurentPoly& p, int N);

/// (1/N) sum_{w^N = z} p(w): keeps indices divisible by N and maps k -> k/N.
LaurentPoly downsample(const LaurentPoly& p, int N);

/// p(rho^j z) with rho = exp(2 pi i / N).
LaurentPoly rotate(const LaurentPoly& p, int j, int N);

/// <p, q> = sum_k conj(p_k) q_k.
cplx inner(const LaurentPoly& p, const LaurentPoly& q);

/// ||p - q||.
double distance(const LaurentPoly& p, const LaurentPoly& q);

/// |p|^2 as a Laurent polynomial, conj_reflect(p) * p.
LaurentPoly abs2(const LaurentPoly& p);

/// exp(2 pi i j / N) with exact values at the quarter turns.
cplx root_of_unity(long long j, long long N);

}  // namespace waveletn
