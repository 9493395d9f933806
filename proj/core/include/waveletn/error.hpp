// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The waveletn Authors

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace waveletn {

enum class Errc {
  NotIsometric,
  NotUnitaryBank,
  UnsupportedShape,
  WindowTooSmall,
  IndexOutOfRange,
  NotNormalized,
  Diverging,
  NonConvergent,
  Inconsistent,
  NotRealValued,
  NotAFatherFilter,
  QuadratureUnstable,
  MalformedArcs,
  Precondition,
  Parse,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NotIsometric: return "NotIsometric";
    case Errc::NotUnitaryBank: return "NotUnitaryBank";
    case Errc::UnsupportedShape: return "UnsupportedShape";
    case Errc::WindowTooSmall: return "WindowTooSmall";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::Diverging: return "Diverging";
    case Errc::NonConvergent: return "NonConvergent";
    case Errc::Inconsistent: return "Inconsistent";
    case Errc::NotRealValued: return "NotRealValued";
    case Errc::NotAFatherFilter: return "NotAFatherFilter";
    case Errc::QuadratureUnstable: return "QuadratureUnstable";
    case Errc::MalformedArcs: return "MalformedArcs";
    case Errc::Precondition: return "Precondition";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace waveletn
