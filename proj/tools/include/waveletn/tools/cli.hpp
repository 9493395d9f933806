// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The waveletn Authors

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "waveletn/error.hpp"

namespace waveletn::cli {

enum ExitCode : int { Ok = 0, ValidationFailed = 1, ParseFailed = 2, PreconditionFailed = 3 };

ExitCode exit_code_for(Errc code);

/// Runs the command line `args` (args[0] is the program name). Primary output
/// goes to `out` unless an output path is given; errors are reported on `err`
/// as a JSON object.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace waveletn::cli
