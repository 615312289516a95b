// Copyright 2026 The Probkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <string>
#include <vector>

#include "probkit/cli.hpp"

int main(int argc, char** argv) {
  return probkit::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout,
                           std::cerr);
}
