// Copyright 2026 The regfactor Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <string>
#include <vector>

#include "regfactor/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  const std::vector<std::string> args(argv + 1, argv + argc);
  return regfactor::cli::dispatch(args, std::cin, std::cout, std::cerr);
}
