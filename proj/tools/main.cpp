// Copyright 2026 The lebforms Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <string>
#include <vector>

#include "lebforms/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lebforms::run_cli(std::move(args), std::cout, std::cerr);
}
