// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The waveletn Authors

#include "waveletn/tools/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <system_error>

#include <unistd.h>

#include "waveletn/error.hpp"

namespace waveletn::io {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error(Errc::Parse, msg); }

const json& field(const json& obj, const char* key) {
  if (!obj.is_object()) fail("expected a JSON object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(std::string("missing key \"") + key + "\"");
  return *it;
}

long long as_integer(const json& v, const char* what) {
  if (v.is_number_integer()) return v.get<long long>();
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (std::isfinite(d) && d == std::floor(d) && std::abs(d) < 9e15)
      return static_cast<long long>(d);
  }
  fail(std::string(what) + " must be an integer");
}

double as_real(const json& v, const char* what) {
  if (!v.is_number()) fail(std::string(what) + " must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) fail(std::string(what) + " must be finite");
  return d;
}

cplx as_complex(const json& v, const char* what) {
  if (!v.is_array() || v.size() != 2) fail(std::string(what) + " must be [re, im]");
  return {as_real(v[0], what), as_real(v[1], what)};
}

int small_int(const json& v, const char* what) {
  const long long x = as_integer(v, what);
  if (x < -1'000'000'000LL || x > 1'000'000'000LL) fail(std::string(what) + " is out of range");
  return static_cast<int>(x);
}

void dump(const json& j, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const std::string inner(static_cast<std::size_t>(indent + 2), ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += inner + json(key).dump() + ": ";
        dump(value, out, indent + 2);
      }
      out += "\n" + pad + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      bool flat = true;
      for (const auto& v : j) flat = flat && v.is_primitive();
      if (flat) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          dump(j[i], out, indent);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += inner;
        dump(j[i], out, indent + 2);
      }
      out += "\n" + pad + "]";
      return;
    }
    case json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  std::string s(buf);
  if (s.front() == '-' && std::stod(s) == 0.0) s.erase(0, 1);
  return s;
}

std::string canonical_dump(const json& j) {
  std::string out;
  dump(j, out, 0);
  out += '\n';
  return out;
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(path.string() + ": " + e.what());
  }
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::Precondition, "cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw Error(Errc::Precondition, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error(Errc::Precondition, "cannot rename onto " + path.string() + ": " + ec.message());
  }
}

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json coeffs_to_json(const LaurentPoly& p) {
  json arr = json::array();
  for (const auto& [k, a] : p.coeffs()) arr.push_back(json::array({k, a.real(), a.imag()}));
  return arr;
}

LaurentPoly coeffs_from_json(const json& j) {
  if (!j.is_array()) fail("coefficients must be an array of [k, re, im]");
  LaurentPoly::map_type m;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 3) fail("coefficient entries must be [k, re, im]");
    const int k = small_int(entry[0], "coefficient index");
    const cplx a{as_real(entry[1], "coefficient"), as_real(entry[2], "coefficient")};
    if (!m.emplace(k, a).second) fail("duplicate coefficient index " + std::to_string(k));
  }
  return LaurentPoly(std::move(m));
}

FilterFile parse_filters(const json& j) {
  FilterFile f;
  f.N = small_int(field(j, "N"), "N");
  if (f.N < 2) fail("N must be at least 2");
  const json& filters = field(j, "filters");
  if (!filters.is_array() || filters.empty()) fail("\"filters\" must be a nonempty array");
  for (const auto& entry : filters) f.filters.push_back(coeffs_from_json(field(entry, "coeffs")));
  return f;
}

FilterFile read_filters(const std::filesystem::path& path) { return parse_filters(read_json(path)); }

json filters_to_json(int N, const std::vector<LaurentPoly>& filters) {
  json arr = json::array();
  for (const auto& m : filters) arr.push_back(json{{"coeffs", coeffs_to_json(m)}});
  return json{{"N", N}, {"filters", arr}};
}

FilterBank to_bank(const FilterFile& file) {
  if (static_cast<int>(file.filters.size()) != file.N)
    throw Error(Errc::Precondition, "a bank needs exactly N = " + std::to_string(file.N) +
                                        " filters, got " + std::to_string(file.filters.size()));
  return FilterBank(file.N, file.filters);
}

CylinderCocycle parse_cocycle(const json& j) {
  const int N = small_int(field(j, "N"), "N");
  const int p = small_int(field(j, "p"), "p");
  if (N < 2 || N > 10) fail("cocycle N must lie in 2..10 so words can be written as digits");
  if (p < 0 || p > 8) throw Error(Errc::Precondition, "cocycle order p must lie in 0..8");
  const json& table = field(j, "table");
  if (!table.is_object()) fail("\"table\" must be an object keyed by words");
  std::size_t size = 1;
  for (int i = 0; i <= p; ++i) size *= static_cast<std::size_t>(N);
  std::vector<cplx> values(size);
  std::vector<bool> seen(size, false);
  for (const auto& [word, value] : table.items()) {
    if (word.size() != static_cast<std::size_t>(p + 1)) fail("word \"" + word + "\" has wrong length");
    std::vector<int> symbols;
    for (char ch : word) {
      if (ch < '0' || ch - '0' >= N) fail("word \"" + word + "\" has a symbol outside 0..N-1");
      symbols.push_back(ch - '0');
    }
    const std::size_t code = encode_word(symbols, N);
    values[code] = as_complex(value, "cocycle value");
    seen[code] = true;
  }
  for (std::size_t c = 0; c < size; ++c)
    if (!seen[c]) fail("cocycle table is missing some words");
  try {
    return CylinderCocycle(N, p, std::move(values));
  } catch (const Error& e) {
    fail(e.what());
  }
}

CylinderCocycle read_cocycle(const std::filesystem::path& path) {
  return parse_cocycle(read_json(path));
}

json cocycle_table_to_json(int N, int length, const std::vector<cplx>& table) {
  json obj = json::object();
  for (std::size_t c = 0; c < table.size(); ++c) {
    std::string word;
    for (int s : decode_word(c, N, length)) word += static_cast<char>('0' + s);
    obj[word] = complex_to_json(table[c]);
  }
  return obj;
}

ArcPartition parse_partition(const json& j) {
  ArcPartition part;
  part.N = small_int(field(j, "N"), "N");
  if (part.N < 2) fail("N must be at least 2");
  const json& arcs = field(j, "arcs");
  if (!arcs.is_array()) fail("\"arcs\" must be an array");
  auto rational = [](const json& v) {
    if (!v.is_array() || v.size() != 2) fail("arc endpoints must be [num, den]");
    const long long num = as_integer(v[0], "endpoint numerator");
    const long long den = as_integer(v[1], "endpoint denominator");
    if (den == 0) fail("endpoint denominator must be nonzero");
    return Rational(num, den);
  };
  for (const auto& a : arcs)
    part.arcs.push_back(
        {rational(field(a, "start")), rational(field(a, "end")), small_int(field(a, "label"), "label")});
  return part;
}

ArcPartition read_partition(const std::filesystem::path& path) {
  return parse_partition(read_json(path));
}

json wavelet_coeffs_to_json(const WaveletCoeffs& c) {
  json levels = json::array();
  for (int j = 1; j <= c.J; ++j)
    for (int i = 1; i < c.N; ++i)
      levels.push_back(json{{"i", i}, {"j", j}, {"coeffs", coeffs_to_json(c.at(i, j))}});
  return json{{"N", c.N}, {"J", c.J}, {"levels", levels}, {"residual", coeffs_to_json(c.residual)}};
}

WaveletCoeffs parse_wavelet_coeffs(const json& j) {
  WaveletCoeffs c;
  c.N = small_int(field(j, "N"), "N");
  c.J = small_int(field(j, "J"), "J");
  if (c.N < 2) fail("N must be at least 2");
  if (c.J < 1 || c.J > 16) throw Error(Errc::Precondition, "J must lie in 1..16");
  c.detail.assign(static_cast<std::size_t>(c.N - 1),
                  std::vector<LaurentPoly>(static_cast<std::size_t>(c.J)));
  std::set<std::pair<int, int>> seen;
  const json& levels = field(j, "levels");
  if (!levels.is_array()) fail("\"levels\" must be an array");
  for (const auto& level : levels) {
    const int i = small_int(field(level, "i"), "i");
    const int jj = small_int(field(level, "j"), "j");
    if (i < 1 || i >= c.N || jj < 1 || jj > c.J) fail("level index out of range");
    if (!seen.emplace(i, jj).second) fail("duplicate level entry");
    c.detail[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(jj - 1)] =
        coeffs_from_json(field(level, "coeffs"));
  }
  c.residual = coeffs_from_json(field(j, "residual"));
  return c;
}

LaurentPoly read_signal_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line)) fail(path.string() + ": empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "k,re,im") fail(path.string() + ": expected header k,re,im");
  LaurentPoly::map_type m;
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string a, b, c, extra;
    if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') || !std::getline(ss, c, ',') ||
        std::getline(ss, extra, ','))
      fail(path.string() + ": row " + std::to_string(row) + " must have three fields");
    try {
      std::size_t pos = 0;
      const long long k = std::stoll(a, &pos);
      if (pos != a.size()) throw std::invalid_argument("index");
      const double re = std::stod(b, &pos);
      if (pos != b.size()) throw std::invalid_argument("re");
      const double im = std::stod(c, &pos);
      if (pos != c.size()) throw std::invalid_argument("im");
      if (std::abs(k) > 1'000'000'000LL) throw std::out_of_range("index");
      if (!m.emplace(static_cast<int>(k), cplx{re, im}).second)
        fail(path.string() + ": duplicate index " + a);
    } catch (const std::logic_error&) {
      fail(path.string() + ": row " + std::to_string(row) + " is not numeric");
    }
  }
  return LaurentPoly(std::move(m));
}

std::string signal_csv(const LaurentPoly& p) {
  std::string out = "k,re,im\n";
  for (const auto& [k, a] : p.coeffs())
    out += std::to_string(k) + "," + format_double(a.real()) + "," + format_double(a.imag()) + "\n";
  return out;
}

}  // namespace waveletn::io
