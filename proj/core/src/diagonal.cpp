// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The waveletn Authors

#include "waveletn/diagonal.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <queue>
#include <random>

#include "waveletn/error.hpp"

namespace waveletn {

// ---------------------------------------------------------------------------
// Rational

namespace {
__extension__ using i128 = __int128;
}  // namespace

Rational::Rational(long long num, long long den) {
  if (den == 0) throw Error(Errc::MalformedArcs, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(num, den);
  num_ = g ? num / g : 0;
  den_ = g ? den / g : 1;
}

namespace {

Rational make(i128 num, i128 den) {
  const i128 limit = static_cast<i128>(1) << 62;
  i128 a = num < 0 ? -num : num, b = den < 0 ? -den : den;
  while (b) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  if (num >= limit || num <= -limit || den >= limit || den <= -limit)
    throw Error(Errc::MalformedArcs, "rational arithmetic overflow");
  return Rational(static_cast<long long>(num), static_cast<long long>(den));
}

}  // namespace

Rational operator+(const Rational& a, const Rational& b) {
  return make(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
              static_cast<i128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return make(static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_,
              static_cast<i128>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, long long k) {
  return make(static_cast<i128>(a.num_) * k, a.den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const i128 l = static_cast<i128>(a.num_) * b.den_;
  const i128 r = static_cast<i128>(b.num_) * a.den_;
  return l < r ? std::strong_ordering::less
               : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Rational Rational::frac() const {
  long long r = num_ % den_;
  if (r < 0) r += den_;
  return Rational(r, den_);
}

std::string Rational::str() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

// ---------------------------------------------------------------------------
// Arc partitions

ArcPartition ArcPartition::standard(int N) {
  ArcPartition part;
  part.N = N;
  for (int i = 0; i < N; ++i) part.arcs.push_back({Rational(i, N), Rational(i + 1, N), i});
  return part;
}

namespace {

struct Interval {
  Rational a, b;
};

// Empty when the intervals cover [0, 1) exactly once.
std::string coverage_witness(const std::vector<Interval>& intervals, const std::string& what) {
  std::vector<Rational> cuts{Rational(0), Rational(1)};
  for (const auto& iv : intervals) {
    cuts.push_back(iv.a);
    cuts.push_back(iv.b);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Rational lo = cuts[i], hi = cuts[i + 1];
    if (hi > Rational(1)) break;
    int count = 0;
    for (const auto& iv : intervals)
      if (iv.a <= lo && hi <= iv.b) ++count;
    if (count != 1)
      return what + ": [" + lo.str() + ", " + hi.str() + ") covered " + std::to_string(count) +
             " times";
  }
  return {};
}

void check_arcs(const ArcPartition& part) {
  if (part.N < 2) throw Error(Errc::MalformedArcs, "partition needs N >= 2");
  for (const auto& arc : part.arcs) {
    if (!(arc.start < arc.end))
      throw Error(Errc::MalformedArcs, "arc [" + arc.start.str() + ", " + arc.end.str() +
                                           ") has end <= start");
    if (arc.start < Rational(0) || arc.end > Rational(1))
      throw Error(Errc::MalformedArcs, "arc endpoints must lie in [0, 1]");
    if (arc.label < 0 || arc.label >= part.N)
      throw Error(Errc::MalformedArcs, "arc label " + std::to_string(arc.label) + " out of range");
  }
}

}  // namespace

PartitionCheck validate_partition(const ArcPartition& part) {
  check_arcs(part);
  PartitionCheck out;
  std::vector<Interval> all;
  for (const auto& arc : part.arcs) all.push_back({arc.start, arc.end});
  out.witness = coverage_witness(all, "arcs");
  if (!out.witness.empty()) return out;

  for (int label = 0; label < part.N; ++label) {
    std::vector<Interval> rotated;
    for (const auto& arc : part.arcs) {
      if (arc.label != label) continue;
      for (int k = 0; k < part.N; ++k) {
        const Rational shift(k, part.N);
        const Rational a = arc.start + shift, b = arc.end + shift;
        if (b <= Rational(1)) {
          rotated.push_back({a, b});
        } else if (a >= Rational(1)) {
          rotated.push_back({a - Rational(1), b - Rational(1)});
        } else {
          rotated.push_back({a, Rational(1)});
          rotated.push_back({Rational(0), b - Rational(1)});
        }
      }
    }
    out.witness = coverage_witness(rotated, "rotates of A_" + std::to_string(label));
    if (!out.witness.empty()) return out;
  }
  out.valid = true;
  return out;
}

Coding coding(const ArcPartition& part, const Rational& angle, int depth) {
  check_arcs(part);
  Coding out;
  Rational x = angle.frac();
  for (int n = 1; n <= depth; ++n) {
    int symbol = -1;
    bool on_boundary = false;
    for (const auto& arc : part.arcs) {
      if (arc.start <= x && x < arc.end) symbol = arc.label;
      if (x == arc.start || x == arc.end.frac()) on_boundary = true;
    }
    if (symbol < 0) throw Error(Errc::Precondition, "angle " + x.str() + " lies in no arc");
    out.word.push_back(symbol);
    if (on_boundary) out.boundary_hits.push_back(n);
    x = (x * part.N).frac();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cylinder cocycles

namespace {

std::size_t ipow(int N, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= static_cast<std::size_t>(N);
  return r;
}

constexpr double kCocycleTol = 1e-9;

}  // namespace

std::vector<int> decode_word(std::size_t code, int N, int length) {
  std::vector<int> w(static_cast<std::size_t>(length));
  for (int i = length - 1; i >= 0; --i) {
    w[static_cast<std::size_t>(i)] = static_cast<int>(code % static_cast<std::size_t>(N));
    code /= static_cast<std::size_t>(N);
  }
  return w;
}

std::size_t encode_word(std::span<const int> word, int N) {
  std::size_t code = 0;
  for (int s : word) code = code * static_cast<std::size_t>(N) + static_cast<std::size_t>(s);
  return code;
}

CylinderCocycle::CylinderCocycle(int N, int p, std::vector<cplx> table)
    : N_(N), p_(p), table_(std::move(table)) {
  if (N_ < 2) throw Error(Errc::Precondition, "cocycle needs N >= 2");
  if (p_ < 0 || p_ > 8) throw Error(Errc::Precondition, "cocycle order p must lie in 0..8");
  if (table_.size() != ipow(N_, p_ + 1))
    throw Error(Errc::Precondition, "cocycle table needs N^(p+1) entries");
  for (const auto& v : table_)
    if (std::abs(std::abs(v) - 1.0) > kCocycleTol)
      throw Error(Errc::Precondition, "cocycle values must have modulus 1");
}

CylinderCocycle CylinderCocycle::from_function(
    int N, int p, const std::function<cplx(std::span<const int>)>& u) {
  if (N < 2 || p < 0 || p > 8) throw Error(Errc::Precondition, "cocycle needs N >= 2, 0 <= p <= 8");
  const std::size_t n = ipow(N, p + 1);
  std::vector<cplx> table(n);
  for (std::size_t c = 0; c < n; ++c) table[c] = u(decode_word(c, N, p + 1));
  return CylinderCocycle(N, p, std::move(table));
}

CylinderCocycle CylinderCocycle::constant(int N, cplx value) {
  return CylinderCocycle(N, 0, std::vector<cplx>(static_cast<std::size_t>(N), value));
}

cplx CylinderCocycle::operator()(std::span<const int> word) const {
  if (word.size() != static_cast<std::size_t>(p_ + 1))
    throw Error(Errc::Precondition, "cocycle word has the wrong length");
  return table_[encode_word(word, N_)];
}

CylinderCocycle CylinderCocycle::padded(int q) const {
  if (q < p_) throw Error(Errc::Precondition, "cannot pad a cocycle to a smaller order");
  const std::size_t extra = ipow(N_, q - p_);
  std::vector<cplx> table(table_.size() * extra);
  for (std::size_t c = 0; c < table.size(); ++c) table[c] = table_[c / extra];
  return CylinderCocycle(N_, q, std::move(table));
}

CylinderCocycle CylinderCocycle::times_conj(const CylinderCocycle& other) const {
  if (other.N_ != N_) throw Error(Errc::Precondition, "cocycles over different N");
  const int q = std::max(p_, other.p_);
  const CylinderCocycle a = padded(q), b = other.padded(q);
  std::vector<cplx> table(a.table_.size());
  for (std::size_t c = 0; c < table.size(); ++c) {
    const cplx v = a.table_[c] * std::conj(b.table_[c]);
    table[c] = v / std::abs(v);
  }
  return CylinderCocycle(N_, q, std::move(table));
}

cplx CylinderCocycle::on_circle(double x) const {
  double y = x - std::floor(x);
  std::size_t code = 0;
  for (int j = 0; j <= p_; ++j) {
    y *= N_;
    int d = static_cast<int>(std::floor(y));
    d = std::clamp(d, 0, N_ - 1);
    y -= d;
    code = code * static_cast<std::size_t>(N_) + static_cast<std::size_t>(d);
  }
  return table_[code];
}

cplx orbit_product(const CylinderCocycle& u, std::span<const int> block) {
  const std::size_t L = block.size();
  const auto len = static_cast<std::size_t>(u.p() + 1);
  cplx prod = 1.0;
  std::vector<int> window(len);
  for (std::size_t k = 0; k < L; ++k) {
    for (std::size_t i = 0; i < len; ++i) window[i] = block[(k + i) % L];
    prod *= u(window);
  }
  return prod;
}

CoboundResult cobound(const CylinderCocycle& u) {
  const int N = u.N(), p = u.p();
  const std::size_t nodes = ipow(N, p);
  const std::size_t edges = nodes * static_cast<std::size_t>(N);
  const auto src = [&](std::size_t e) { return e / static_cast<std::size_t>(N); };
  const auto dst = [&](std::size_t e) { return e % nodes; };
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  // Potentials along an out-tree rooted at the all-zero word.
  std::vector<cplx> delta(nodes, cplx{});
  std::vector<std::size_t> out_parent(nodes, kNone);
  std::vector<bool> seen(nodes, false);
  std::queue<std::size_t> q;
  delta[0] = 1.0;
  seen[0] = true;
  q.push(0);
  while (!q.empty()) {
    const std::size_t v = q.front();
    q.pop();
    for (int s = 0; s < N; ++s) {
      const std::size_t e = v * static_cast<std::size_t>(N) + static_cast<std::size_t>(s);
      const std::size_t w = dst(e);
      if (seen[w]) continue;
      seen[w] = true;
      delta[w] = delta[v] / u.at(e);
      out_parent[w] = e;
      q.push(w);
    }
  }

  CoboundResult out;
  bool consistent = true;
  for (std::size_t e = 0; e < edges && consistent; ++e)
    if (std::abs(delta[src(e)] / delta[dst(e)] - u.at(e)) > kCocycleTol) consistent = false;
  if (consistent) {
    out.coboundary = true;
    out.delta = std::move(delta);
    return out;
  }

  // Shortest periodic point with a nontrivial orbit product.
  for (int L = 1; L <= 12 && ipow(N, L) <= 4096; ++L) {
    for (std::size_t c = 0; c < ipow(N, L); ++c) {
      const std::vector<int> block = decode_word(c, N, L);
      const cplx prod = orbit_product(u, block);
      if (std::abs(prod - 1.0) > kCocycleTol) {
        out.witness = block;
        out.product = prod;
        return out;
      }
    }
  }

  // Otherwise close root -> src(e) -> dst(e) -> root through the two trees;
  // one of these walks must carry a nontrivial product.
  std::vector<std::size_t> in_parent(nodes, kNone);
  std::fill(seen.begin(), seen.end(), false);
  seen[0] = true;
  q.push(0);
  while (!q.empty()) {
    const std::size_t v = q.front();
    q.pop();
    for (int a = 0; a < N; ++a) {
      const std::size_t e = static_cast<std::size_t>(a) * nodes + v;
      const std::size_t w = src(e);
      if (seen[w]) continue;
      seen[w] = true;
      in_parent[w] = e;
      q.push(w);
    }
  }
  double best = -1.0;
  for (std::size_t e = 0; e < edges; ++e) {
    std::vector<std::size_t> walk;
    for (std::size_t v = src(e); v != 0; v = src(out_parent[v])) walk.push_back(out_parent[v]);
    std::reverse(walk.begin(), walk.end());
    walk.push_back(e);
    for (std::size_t v = dst(e); v != 0; v = dst(in_parent[v])) walk.push_back(in_parent[v]);
    std::vector<int> block;
    for (std::size_t f : walk) block.push_back(static_cast<int>(f % static_cast<std::size_t>(N)));
    const cplx prod = orbit_product(u, block);
    if (std::abs(prod - 1.0) > best) {
      best = std::abs(prod - 1.0);
      out.witness = std::move(block);
      out.product = prod;
    }
  }
  return out;
}

CoboundResult equivalent(const CylinderCocycle& u1, const CylinderCocycle& u2) {
  return cobound(u1.times_conj(u2));
}

// ---------------------------------------------------------------------------
// Birkhoff averages

std::string_view to_string(BirkhoffVerdict v) {
  switch (v) {
    case BirkhoffVerdict::LikelyCoboundary: return "LikelyCoboundary";
    case BirkhoffVerdict::LikelyNot: return "LikelyNot";
    case BirkhoffVerdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

BirkhoffResult birkhoff_cobound(const CircleFunction& c, int N, const LaurentPoly& f,
                                const BirkhoffOptions& opt) {
  if (N < 2 || opt.samples < 1 || opt.depth < 2)
    throw Error(Errc::Precondition, "Birkhoff averaging needs N >= 2, samples >= 1, depth >= 2");
  const int m = opt.depth;
  const int half = m / 2;
  const int digits = static_cast<int>(std::ceil(64.0 / std::log2(static_cast<double>(N)))) + 1;
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> symbol(0, N - 1);

  constexpr std::size_t kProbes = 4;
  BirkhoffResult out;
  double sum_half = 0.0;
  std::array<double, kProbes> sum_full{};
  std::vector<cplx> full_values;
  std::vector<int> stream(static_cast<std::size_t>(m + digits));
  std::vector<double> angle(static_cast<std::size_t>(m));

  for (int s = 0; s < opt.samples; ++s) {
    for (auto& d : stream) d = symbol(rng);
    // angle(sigma^k x) = sum_{j >= 1} d_{k+j} N^{-j}; the backward recursion
    // angle_k = (d_{k+1} + angle_{k+1}) / N only contracts rounding errors.
    double a = 0.0;
    for (int j = digits; j >= 1; --j) a = (a + stream[static_cast<std::size_t>(m - 1 + j - 1)]) / N;
    angle[static_cast<std::size_t>(m - 1)] = a;
    for (int k = m - 2; k >= 0; --k) {
      a = (stream[static_cast<std::size_t>(k)] + a) / N;
      angle[static_cast<std::size_t>(k)] = a;
    }
    std::array<cplx, kProbes> acc{};
    cplx acc_half{};
    cplx w = 1.0;
    for (int k = 0; k < m; ++k) {
      const double x = angle[static_cast<std::size_t>(k)];
      const cplx z = std::polar(1.0, 2.0 * std::numbers::pi * x);
      const cplx z2 = z * z;
      acc[0] += f(z) * w;
      acc[1] += z * w;
      acc[2] += z2 * w;
      acc[3] += z2 * z * w;
      if (k + 1 == half) acc_half = acc[0];
      w *= std::conj(c(x));
      w /= std::abs(w);
    }
    for (std::size_t pi = 0; pi < kProbes; ++pi)
      sum_full[pi] += std::abs(acc[pi]) / static_cast<double>(m);
    sum_half += std::abs(acc_half) / static_cast<double>(half);
    out.angles.push_back(angle[0]);
    full_values.push_back(acc[0] / static_cast<double>(m));
  }
  for (double v : sum_full) out.max_abs_decay = std::max(out.max_abs_decay, v / opt.samples);
  const double mean_half = sum_half / opt.samples;
  out.mean_abs = sum_full[0] / opt.samples;
  if (out.mean_abs > opt.theta && mean_half > opt.theta) {
    out.verdict = BirkhoffVerdict::LikelyCoboundary;
    for (const auto& v : full_values)
      out.delta.push_back(std::abs(v) > 0.0 ? std::conj(v) / std::abs(v) : cplx{});
  } else {
    out.angles.clear();
    out.verdict = out.max_abs_decay < opt.decay ? BirkhoffVerdict::LikelyNot
                                                : BirkhoffVerdict::Inconclusive;
  }
  return out;
}

}  // namespace waveletn
