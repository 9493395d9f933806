// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The waveletn Authors

#include <iostream>
#include <string>
#include <vector>

#include "waveletn/tools/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return waveletn::cli::run(args, std::cout, std::cerr);
}
