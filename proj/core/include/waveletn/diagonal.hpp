// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The waveletn Authors

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "waveletn/laurent.hpp"

namespace waveletn {

/// Exact fraction num/den with den > 0, always reduced.
class Rational {
 public:
  Rational() = default;
  Rational(long long num, long long den = 1);

  long long num() const noexcept { return num_; }
  long long den() const noexcept { return den_; }
  double value() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, long long k);
  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// Representative of this value modulo 1 in [0, 1).
  Rational frac() const;
  std::string str() const;

 private:
  long long num_ = 0;
  long long den_ = 1;
};

/// Half-open arc [start, end) with endpoints given as fractions of a full
/// turn.
struct Arc {
  Rational start;
  Rational end;
  int label = 0;
};

struct ArcPartition {
  int N = 2;
  std::vector<Arc> arcs;

  /// A_i = [i/N, (i+1)/N).
  static ArcPartition standard(int N);
};

struct PartitionCheck {
  bool valid = false;
  std::string witness;
};

/// Checks that the arcs tile [0, 1) and that, for each label i, the rotates
/// A_i + k/N (k = 0..N-1) tile [0, 1).
/// Throws Error{MalformedArcs} for arcs with end <= start, endpoints outside
/// [0, 1], or labels outside 0..N-1.
PartitionCheck validate_partition(const ArcPartition& part);

struct Coding {
  std::vector<int> word;
  /// 1-based positions n at which z^{N^{n-1}} sits exactly on an arc
  /// endpoint. The symbol there follows the half-open convention.
  std::vector<int> boundary_hits;
};

/// First `depth` symbols i_n with z^{N^{n-1}} in A_{i_n}; z = exp(2 pi i angle).
Coding coding(const ArcPartition& part, const Rational& angle, int depth);

/// A circle-valued function of the first p + 1 symbols over Z_N. Words are
/// encoded base N with x_0 as the most significant digit.
class CylinderCocycle {
 public:
  CylinderCocycle(int N, int p, std::vector<cplx> table);
  static CylinderCocycle from_function(int N, int p,
                                       const std::function<cplx(std::span<const int>)>& u);
  static CylinderCocycle constant(int N, cplx value);

  int N() const noexcept { return N_; }
  int p() const noexcept { return p_; }
  const std::vector<cplx>& table() const noexcept { return table_; }
  cplx operator()(std::span<const int> word) const;
  cplx at(std::size_t code) const { return table_.at(code); }

  /// Same cocycle viewed as depending on the first q + 1 symbols, q >= p.
  CylinderCocycle padded(int q) const;
  /// Pointwise product with the conjugate of other (orders are padded).
  CylinderCocycle times_conj(const CylinderCocycle& other) const;

  /// Value at the circle point with angle x (fraction of a turn), reading
  /// symbols as the leading base-N digits of x.
  cplx on_circle(double x) const;

 private:
  int N_;
  int p_;
  std::vector<cplx> table_;
};

std::vector<int> decode_word(std::size_t code, int N, int length);
std::size_t encode_word(std::span<const int> word, int N);

struct CoboundResult {
  bool coboundary = false;
  /// Delta on words of length p (encoded base N), with Delta(0...0) = 1.
  std::vector<cplx> delta;
  /// Repeating block of a periodic point whose orbit product differs from 1.
  std::vector<int> witness;
  cplx product{1.0, 0.0};
};

/// Decides whether u(x_0..x_p) = Delta(x_0..x_{p-1}) / Delta(x_1..x_p) for a
/// cylinder function Delta, using potentials on the de Bruijn graph.
CoboundResult cobound(const CylinderCocycle& u);

/// cobound(u1 conj(u2)); a coboundary means the two diagonal representations
/// are unitarily equivalent.
CoboundResult equivalent(const CylinderCocycle& u1, const CylinderCocycle& u2);

/// Orbit product of u over the periodic point with the given repeating block.
cplx orbit_product(const CylinderCocycle& u, std::span<const int> block);

enum class BirkhoffVerdict { LikelyCoboundary, LikelyNot, Inconclusive };
std::string_view to_string(BirkhoffVerdict v);

struct BirkhoffOptions {
  int samples = 64;
  int depth = 1 << 14;
  double theta = 0.2;
  double decay = 0.02;
  std::uint64_t seed = 0x5eed'cafe'f00dULL;
};

struct BirkhoffResult {
  BirkhoffVerdict verdict = BirkhoffVerdict::Inconclusive;
  /// Sample angles (fractions of a turn) and the unit-modulus Delta
  /// estimates there, up to one common phase. Filled for LikelyCoboundary.
  std::vector<double> angles;
  std::vector<cplx> delta;
  /// Mean of |A_m| for f over the samples.
  double mean_abs = 0.0;
  /// Largest sample mean of |A_m| among the probes f, z, z^2, z^3.
  double max_abs_decay = 0.0;
};

/// Circle function of the angle x (in turns) of the point exp(2 pi i x).
using CircleFunction = std::function<cplx(double)>;

/// Birkhoff averages A_m(z) = (1/m) sum_k f(z^{N^k}) conj(c(z^{N^{k-1}})) ... conj(c(z))
/// along typical orbits. LikelyCoboundary when |A_m| for f stays above
/// theta at depth m/2 and m on average; LikelyNot when the sample means of
/// |A_m| for f and for z, z^2, z^3 all fall below the decay threshold.
BirkhoffResult birkhoff_cobound(const CircleFunction& c, int N, const LaurentPoly& f,
                                const BirkhoffOptions& opt = {});

}  // namespace waveletn
