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

#include <vector>

namespace gffdisk {

inline constexpr int kMaxBesselOrder = 64;
inline constexpr double kMaxBesselArgument = 1e4;

/// Bessel function of the first kind J_n(x) for 0 <= n <= kMaxBesselOrder and
/// 0 <= x <= kMaxBesselArgument. Ascending series (extended precision) up to
/// x = 12, normalised Miller backward recurrence beyond. Throws
/// std::domain_error outside the supported range.
double bessel_j(int n, double x);

/// J_n'(x) = (J_{n-1}(x) - J_{n+1}(x)) / 2, with J_0' = -J_1.
double bessel_j_derivative(int n, double x);

/// First `count` positive zeros of J_n in increasing order, each to ~1e-14
/// relative. Brackets come from a sign-change scan; inside a bracket Newton
/// starts from McMahon's asymptotic guess and falls back to bisection.
std::vector<double> bessel_zeros(int n, int count);

/// The k-th positive zero j_{n,k}, k >= 1.
double bessel_zero(int n, int k);

}  // namespace gffdisk
