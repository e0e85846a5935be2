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
#include <vector>

#include "gffdisk/circles.hpp"
#include "gffdisk/quadrature.hpp"
#include "gffdisk/spectral.hpp"
#include "gffdisk/verify.hpp"

namespace gffdisk {

struct SuiteConfig {
    int n_max = 24;
    int k_max = 24;
    std::uint64_t seed = 1;
    QuadratureSpec quad{64, 256};
    std::size_t replicates = 10000;
};

// Aggregated checks. Each reports the worst error over its random or fixed
// cases as `value` against reference 0 (or 1 for ratios).

/// Coincident circles: exact_cov against -ln tanh rho, rho in [0.1, 3].
CheckResult check_variance_law(std::uint64_t seed, int count = 50);
/// Nested circles: exact_cov against -ln tanh max(rho1, rho2).
CheckResult check_nested_covariance(std::uint64_t seed, int count = 100);
/// Disjoint circles: exact_cov against green_disk(z1, z2).
CheckResult check_disjoint_covariance(std::uint64_t seed, int count = 100);
/// E[(W1 - W2)^2] from exact covariances never exceeds
/// mean_square_increment_bound; queries cycle through all three regimes.
CheckResult check_increment_bound(std::uint64_t seed, int count = 1000);
/// Hyperbolic mean-value property for Re/Im z^m, m <= 6, at random circles.
CheckResult check_mean_value_random(std::uint64_t seed, int count = 20);

/// Rules used by the identity checks: the inversion integrands are
/// log-singular at the kernel pole and need more radial nodes; the annulus and
/// isometry integrands are only C^2 across the bump boundary and need more
/// angular ones. Each is raised to at least the configured rule.
QuadratureSpec singular_quadrature(const QuadratureSpec& configured);
QuadratureSpec fine_quadrature(const QuadratureSpec& configured);

std::vector<CheckResult> inversion_checks(const QuadratureSpec& q);
std::vector<CheckResult> annulus_checks(const QuadratureSpec& q);
std::vector<CheckResult> isometry_checks(std::uint64_t seed, const QuadratureSpec& q,
                                         int count = 10);

/// Max |Gram - I| over the first `count` modes.
CheckResult check_gram(const SpectralBasis& basis, std::size_t count, const QuadratureSpec& q);
/// Max |J_n(zero)| over the basis.
CheckResult check_zero_residuals(const SpectralBasis& basis);
/// For rho in rhos: fraction of -ln tanh rho captured by the truncated
/// circle-average variance at the origin (>= 98%), and the monotone /
/// Bessel-inequality property of its partial sums.
std::vector<CheckResult> truncation_checks(const SpectralBasis& basis,
                                           const std::vector<double>& rhos);

/// Fixed covariance queries used by the statistical suite.
std::vector<CovarianceQuery> statistical_queries();
inline const std::vector<double> kBrownianTimes{0.5, 1.0, 2.0};

std::vector<CheckResult> deterministic_suite(const SuiteConfig& config, const SpectralBasis& basis);

/// Monte Carlo covariance checks and the Brownian suite. A failing group is
/// rerun once with a derived seed and the rerun is appended with the suffix
/// " [retry]".
std::vector<CheckResult> statistical_suite(const SuiteConfig& config, const SpectralBasis& basis,
                                           ModeAverageCache* cache = nullptr);

/// 0 when every deterministic check passed and no statistical check failed
/// both its first run and its retry; 1 otherwise.
int suite_exit_code(const std::vector<CheckResult>& checks);

}  // namespace gffdisk
