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
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string_view>
#include <tuple>
#include <vector>

#include "gffdisk/field.hpp"
#include "gffdisk/poincare.hpp"
#include "gffdisk/spectral.hpp"

namespace gffdisk {

inline constexpr int kCovarianceNodes = 2048;
inline constexpr int kModeAverageNodes = 1024;

/// Hyperbolic circle mean (1/2pi) * integral of f(Phi_z0(r e^{it})) dt,
/// r = tanh(rho), by the n_nodes-point periodic trapezoid rule.
double circle_avg_fn(const std::function<double(const DiskPoint&)>& f, const DiskPoint& z0,
                     double rho, int n_nodes = kCovarianceNodes);

/// Memoised circle means of all basis modes, keyed by the exact bits of
/// (basis, z0, rho, n_nodes). Safe for concurrent use.
class ModeAverageCache {
public:
    std::shared_ptr<const std::vector<double>> get(const SpectralBasis& basis, const DiskPoint& z0,
                                                   double rho, int n_nodes = kModeAverageNodes);
    std::size_t size() const;

private:
    using Key = std::tuple<const SpectralBasis*, std::uint64_t, std::uint64_t, std::uint64_t, int>;
    mutable std::mutex mutex_;
    std::map<Key, std::shared_ptr<const std::vector<double>>> entries_;
};

/// Circle average of a truncated field: sum_j a_j m_j(z0, rho).
double circle_avg_field(const FieldSample& s, const DiskPoint& z0, double rho,
                        ModeAverageCache* cache = nullptr, int n_nodes = kModeAverageNodes);

/// sum_j u_j v_j with compensated summation.
double truncated_covariance(std::span<const double> u, std::span<const double> v);

enum class Regime { kNested, kDisjoint, kOverlapping };

std::string_view regime_name(Regime r);

/// A pair of hyperbolic circles (z1, rho1), (z2, rho2).
struct CovarianceQuery {
    DiskPoint z1;
    double rho1 = 1.0;
    DiskPoint z2;
    double rho2 = 1.0;

    double distance() const { return hyp_distance(z1, z2); }
    /// Nested if d <= |rho2 - rho1|, disjoint if d >= rho1 + rho2.
    Regime regime() const;
    CovarianceQuery swapped() const { return {z2, rho2, z1, rho1}; }
};

/// Mean over the hyperbolic circle (avg_center, avg_rho) of the truncated
/// kernel centred at kernel_center with plateau radius kernel_rho. The
/// circle is split where it crosses the plateau boundary; smooth pieces are
/// refined (trapezoid doubling or Gauss-Legendre panel doubling) from
/// min_nodes until successive estimates agree to 1e-13.
double kernel_circle_mean(const DiskPoint& avg_center, double avg_rho,
                          const DiskPoint& kernel_center, double kernel_rho,
                          int min_nodes = kCovarianceNodes);

/// Covariance of the circle averages of the untruncated field, computed as
/// a kernel circle mean over the smaller of the two circles.
double exact_cov(const CovarianceQuery& q, int n_nodes = kCovarianceNodes);

class RegimeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// -ln tanh max(rho1, rho2) for nested circles, green_disk(z1, z2) for
/// disjoint ones. Throws RegimeError for overlapping circles.
double closed_cov(const CovarianceQuery& q);

/// Upper bound on E[(W1 - W2)^2]:
///   |ln tanh rho1 - ln tanh rho2| + 2 (1/sinh 2rho1 + 1/sinh 2rho2) d(z1, z2).
double mean_square_increment_bound(const CovarianceQuery& q);

/// Trapezoid node count used for the circle of Brownian time t:
/// max(kModeAverageNodes, 16 / tanh rho(t)).
int brownian_nodes(double t);

/// B_t = circle average at radius rho(t) = artanh(exp(-t)). Times must be
/// positive and strictly increasing. With include_origin, B_0 = 0 is
/// prepended.
std::vector<double> brownian_path(const FieldSample& s, const DiskPoint& z0,
                                  std::span<const double> times, bool include_origin = false,
                                  ModeAverageCache* cache = nullptr);

void validate_times(std::span<const double> times);

}  // namespace gffdisk
