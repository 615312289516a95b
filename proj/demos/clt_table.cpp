// Copyright 2026 The Probkit Authors
// SPDX-License-Identifier: Apache-2.0
//
// Prints how fast the standardized binomial approaches the normal law.

#include <cstdio>

#include "probkit/limits.hpp"

int main() {
  std::printf("%8s  %-12s  %-12s\n", "n", "interval", "local ratio");
  for (std::int64_t n : {100, 400, 1600, 6400}) {
    const auto interval = probkit::limits::clt_interval_error(n, 0.3, -1.0, 1.0);
    const auto local = probkit::limits::local_limit_ratio_error(n, 0.3, -1.0, 1.0);
    std::printf("%8lld  %-12.4e  %-12.4e\n", static_cast<long long>(n), interval.metric,
                local.metric);
  }
  return 0;
}
