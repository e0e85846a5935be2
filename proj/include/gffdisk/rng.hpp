// Copyright 2026 The gffdisk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

namespace gffdisk {

/// SplitMix64 finaliser; a bijection on 64-bit words with full avalanche.
std::uint64_t mix64(std::uint64_t x);

/// Counter-based stream: the word for (seed, counter) depends on nothing else,
/// so draws can be generated in any order or on any thread.
std::uint64_t counter_bits(std::uint64_t seed, std::uint64_t counter);

/// Seed of the `index`-th child stream of `seed` (Monte Carlo replicates,
/// retries).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Maps 64 random bits to a double strictly inside (0, 1).
double bits_to_open_unit(std::uint64_t bits);

/// Quantile function of the standard normal: rational initial approximation
/// refined by one Halley step against erfc.
double inverse_normal_cdf(double p);

/// Standard normal draw keyed by (seed, counter).
double standard_normal(std::uint64_t seed, std::uint64_t counter);

/// Uniform draw in (0, 1) keyed by (seed, counter).
double uniform01(std::uint64_t seed, std::uint64_t counter);

}  // namespace gffdisk
