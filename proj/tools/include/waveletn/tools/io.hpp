// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The waveletn Authors

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "waveletn/diagonal.hpp"
#include "waveletn/filterbank.hpp"
#include "waveletn/laurent.hpp"
#include "waveletn/pyramid.hpp"

namespace waveletn::io {

using nlohmann::json;

/// Contents of a filter file: N and one or more filters, m_0 first.
struct FilterFile {
  int N = 2;
  std::vector<LaurentPoly> filters;
};

/// `{"N": n, "filters": [{"coeffs": [[k, re, im], ...]}, ...]}`.
/// Throws Error{Parse} on malformed input or duplicate indices.
FilterFile parse_filters(const json& j);
FilterFile read_filters(const std::filesystem::path& path);
json filters_to_json(int N, const std::vector<LaurentPoly>& filters);
FilterBank to_bank(const FilterFile& file);

/// `[[k, re, im], ...]` sorted by k.
json coeffs_to_json(const LaurentPoly& p);
LaurentPoly coeffs_from_json(const json& j);
json complex_to_json(cplx z);

/// `{"N": n, "p": p, "table": {"<word>": [re, im], ...}}`, where a word lists
/// the symbols x_0 x_1 ... x_p as decimal digits. Every word must appear.
CylinderCocycle parse_cocycle(const json& j);
CylinderCocycle read_cocycle(const std::filesystem::path& path);
json cocycle_table_to_json(int N, int length, const std::vector<cplx>& table);

/// `{"N": n, "arcs": [{"start": [num, den], "end": [num, den], "label": i}, ...]}`
/// with endpoints as fractions of a full turn.
ArcPartition parse_partition(const json& j);
ArcPartition read_partition(const std::filesystem::path& path);

/// `{"N": n, "J": J, "levels": [{"i": i, "j": j, "coeffs": [...]}, ...], "residual": [...]}`.
json wavelet_coeffs_to_json(const WaveletCoeffs& c);
WaveletCoeffs parse_wavelet_coeffs(const json& j);

/// CSV with header `k,re,im`; row k holds the coefficient of z^k.
LaurentPoly read_signal_csv(const std::filesystem::path& path);
std::string signal_csv(const LaurentPoly& p);

json read_json(const std::filesystem::path& path);

/// Deterministic rendering: sorted keys, two-space indent, floating-point
/// values as %.12e, integers verbatim.
std::string canonical_dump(const json& j);

/// %.12e with negative zero printed as zero.
std::string format_double(double v);

/// Writes through a temporary file in the same directory followed by rename.
void write_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace waveletn::io
