// Copyright 2026 The Probkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "probkit/combinatorics.hpp"
#include "probkit/couples.hpp"
#include "probkit/distributions.hpp"
#include "probkit/exact.hpp"
#include "probkit/finite_rv.hpp"
#include "probkit/finite_space.hpp"
#include "probkit/limits.hpp"
#include "probkit/moments.hpp"
#include "probkit/rng.hpp"
#include "probkit/special_functions.hpp"
