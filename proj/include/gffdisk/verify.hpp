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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gffdisk/circles.hpp"
#include "gffdisk/poincare.hpp"
#include "gffdisk/quadrature.hpp"
#include "gffdisk/spectral.hpp"
#include "gffdisk/test_functions.hpp"

namespace gffdisk {

enum class CheckKind { kDeterministic, kStatistical };

std::string_view check_kind_name(CheckKind k);

/// Outcome of one identity or statistical check. For deterministic checks
/// passed == (|value - reference| <= tolerance); statistical checks use the
/// same rule with tolerance set to the confidence half-width.
struct CheckResult {
    std::string name;
    CheckKind kind = CheckKind::kDeterministic;
    double value = 0.0;
    double reference = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string detail;
};

CheckResult make_check(std::string name, CheckKind kind, double value, double reference,
                       double tolerance, std::string detail = {});

/// Region {origin + rho e^{i theta} : rho_min <= rho <= rho_max}, optionally
/// intersected with the disk `clip`.
struct PolarRegion {
    Complex origin;
    double rho_min = 0.0;
    double rho_max = 1.0;
    std::optional<EuclideanCircle> clip;
};

/// Integral of `f` with respect to area over `region`, in polar coordinates
/// about region.origin. Each ray is integrated by Gauss-Legendre over the
/// exact radial interval where the region lies, so integrands that are smooth
/// inside the clip disk but kinked on its boundary keep full accuracy. If the
/// clip disk does not contain the origin only the angular window it subtends
/// is sampled, with a sine substitution that smooths the window ends. With
/// cluster_origin and rho_min == 0, rho = L u^2 clusters nodes at the origin
/// (for log-singular integrands).
double integrate_polar_region(const PolarRegion& region, int radial_nodes, int angular_nodes,
                              const std::function<double(Complex)>& f, bool cluster_origin = false);

/// Integral over theta in [0, 2pi) of g(theta) restricted to the part of the
/// circle |z| = radius lying inside `clip` (the whole circle if no clip).
double circle_integral(double radius, const std::optional<EuclideanCircle>& clip, int nodes,
                       const std::function<double(double)>& g);

/// Euclidean annulus identity on r < |z| < R for circle means at the origin:
///   f_r(0) - f_R(0) = (1/2pi) int grad f . grad G0
///                   = ln r/(2pi) flux_r - ln R/(2pi) flux_R - (1/2pi) int G0 lap f.
/// value = f_r(0) - f_R(0), reference = whichever integral expression
/// deviates more from it.
CheckResult check_annulus_identity(const TestFunction& f, double r, double big_r,
                                   const QuadratureSpec& q, double tolerance = 1e-7);

/// Hyperbolic mean-value property f(z0) = circle mean, for harmonic f.
CheckResult check_mean_value(const TestFunction& f, const DiskPoint& z0, double rho,
                             int n_nodes = kCovarianceNodes, double tolerance = 1e-9);

/// f(z0) = -(1/2pi) int G_D(z0, .) lap f, with polar coordinates centred at
/// the kernel pole. Tolerance is 1e-5 relative to the bump peak value.
CheckResult check_inversion(const TestFunction& f, const DiskPoint& z0, const QuadratureSpec& q);

/// Planar version at the origin with G0 = -ln|z|.
CheckResult check_inversion_euclidean(const TestFunction& f, const QuadratureSpec& q);

/// <u o Phi, v o Phi> = <u, v> for the involution with pole z0, both sides
/// integrated over the (Euclidean disk) supports. Gradients of u o Phi use the
/// chain rule with a central-difference Jacobian of Phi.
CheckResult check_isometry_invariance(const TestFunction& u, const TestFunction& v,
                                      const DiskPoint& z0, const QuadratureSpec& q,
                                      double tolerance = 1e-5);

/// Sample covariance of paired circle averages over n_replicates fields
/// against the truncated reference sum_j m_j(z1, rho1) m_j(z2, rho2). Passes
/// within 3 standard errors; the detail reports the truncation gap to
/// exact_cov.
CheckResult mc_covariance(const CovarianceQuery& q, std::size_t n_replicates, std::uint64_t seed,
                          const SpectralBasis& basis, ModeAverageCache* cache = nullptr);

/// Brownian checks for B_t = circle average at rho(t) about z0:
/// covariance matrix against the truncated reference (3 sigma), increment
/// variances (3 sigma), increment skewness / excess kurtosis bands
/// (4 sigma), and correlation of consecutive disjoint increments (3 sigma).
std::vector<CheckResult> brownian_suite(const DiskPoint& z0, std::span<const double> times,
                                        std::size_t n_replicates, std::uint64_t seed,
                                        const SpectralBasis& basis,
                                        ModeAverageCache* cache = nullptr);

}  // namespace gffdisk
