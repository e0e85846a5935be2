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

#include "gffdisk/circles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "gffdisk/kernels.hpp"
#include "gffdisk/numerics.hpp"
#include "gffdisk/parallel.hpp"
#include "gffdisk/quadrature.hpp"

namespace gffdisk {

namespace {

constexpr double kRefineTolerance = 1e-13;
constexpr int kMaxTrapezoidNodes = 1 << 22;
constexpr int kMaxPanels = 1 << 18;
constexpr int kPanelOrder = 16;

bool converged(double a, double b) {
    return std::fabs(a - b) <= kRefineTolerance * std::max(1.0, std::fabs(b));
}

// Mean over t in [0, 2pi) of f(t), refining the trapezoid rule by doubling.
template <class F>
double refined_trapezoid_mean(F&& f, int n) {
    CompensatedSum s;
    for (int k = 0; k < n; ++k) s.add(f(kTwoPi * k / n));
    double mean = s.value() / n;
    while (n < kMaxTrapezoidNodes) {
        CompensatedSum mid;
        for (int k = 0; k < n; ++k) mid.add(f(kTwoPi * (k + 0.5) / n));
        const double next = 0.5 * (mean + mid.value() / n);
        n *= 2;
        const bool done = converged(mean, next);
        mean = next;
        if (done) break;
    }
    return mean;
}

// Integral of f over [a, b] by composite Gauss-Legendre, doubling the panel
// count until successive estimates agree.
template <class F>
double refined_panel_integral(F&& f, double a, double b, int panels) {
    static const GaussLegendre gl(kPanelOrder);
    auto integrate = [&](int p) {
        const double h = (b - a) / p;
        CompensatedSum s;
        for (int i = 0; i < p; ++i) {
            const double mid = a + (i + 0.5) * h;
            for (int j = 0; j < kPanelOrder; ++j)
                s.add(0.5 * h * gl.weights[j] * f(mid + 0.5 * h * gl.nodes[j]));
        }
        return s.value();
    };
    double prev = integrate(panels);
    while (panels < kMaxPanels) {
        panels *= 2;
        const double next = integrate(panels);
        if (converged(prev, next)) return next;
        prev = next;
    }
    return prev;
}

}  // namespace

double circle_avg_fn(const std::function<double(const DiskPoint&)>& f, const DiskPoint& z0,
                     double rho, int n_nodes) {
    if (n_nodes < 16) throw std::invalid_argument("circle_avg_fn needs at least 16 nodes");
    const HyperbolicCircle c(z0, rho);
    CompensatedSum s;
    for (int k = 0; k < n_nodes; ++k) {
        const double t = kTwoPi * k / n_nodes;
        const double v = f(c.point_at(t));
        if (!std::isfinite(v))
            throw std::runtime_error("circle_avg_fn: non-finite value at t = " + std::to_string(t));
        s.add(v);
    }
    return s.value() / n_nodes;
}

std::shared_ptr<const std::vector<double>> ModeAverageCache::get(const SpectralBasis& basis,
                                                                 const DiskPoint& z0, double rho,
                                                                 int n_nodes) {
    const Key key{&basis, std::bit_cast<std::uint64_t>(z0.x()), std::bit_cast<std::uint64_t>(z0.y()),
                  std::bit_cast<std::uint64_t>(rho), n_nodes};
    {
        std::lock_guard lock(mutex_);
        if (auto it = entries_.find(key); it != entries_.end()) return it->second;
    }
    auto values = std::make_shared<const std::vector<double>>(
        mode_circle_averages(basis, z0, rho, n_nodes));
    std::lock_guard lock(mutex_);
    return entries_.emplace(key, std::move(values)).first->second;
}

std::size_t ModeAverageCache::size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
}

double truncated_covariance(std::span<const double> u, std::span<const double> v) {
    if (u.size() != v.size()) throw std::invalid_argument("truncated_covariance: size mismatch");
    CompensatedSum s;
    for (std::size_t j = 0; j < u.size(); ++j) s.add(u[j] * v[j]);
    return s.value();
}

double circle_avg_field(const FieldSample& s, const DiskPoint& z0, double rho,
                        ModeAverageCache* cache, int n_nodes) {
    if (cache) return truncated_covariance(s.coeffs(), *cache->get(s.basis(), z0, rho, n_nodes));
    return truncated_covariance(s.coeffs(), mode_circle_averages(s.basis(), z0, rho, n_nodes));
}

std::string_view regime_name(Regime r) {
    switch (r) {
        case Regime::kNested: return "nested";
        case Regime::kDisjoint: return "disjoint";
        case Regime::kOverlapping: return "overlapping";
    }
    return "unknown";
}

Regime CovarianceQuery::regime() const {
    const double d = distance();
    if (d <= std::fabs(rho2 - rho1)) return Regime::kNested;
    if (d >= rho1 + rho2) return Regime::kDisjoint;
    return Regime::kOverlapping;
}

double kernel_circle_mean(const DiskPoint& avg_center, double avg_rho,
                          const DiskPoint& kernel_center, double kernel_rho, int min_nodes) {
    if (min_nodes < 16) throw std::invalid_argument("kernel_circle_mean needs at least 16 nodes");
    const double ra = rho_to_r(avg_rho);
    // Move the averaging circle to the origin; the kernel follows.
    const DiskPoint p = MobiusInvolution(avg_center).apply(kernel_center);
    const TruncatedKernel kernel = TruncatedKernel::from_rho(p, kernel_rho);
    auto value_at = [&](double t) { return kernel.value_raw(std::polar(ra, t)); };

    // Plateau boundary as a Euclidean circle, intersected with |w| = ra.
    const HyperbolicCircle edge(p, kernel_rho);
    const Complex c = edge.euclid_center().z();
    const double d = std::abs(c);
    const double radius = edge.euclid_radius();
    const bool crosses = d > 0.0 && std::fabs(ra - radius) < d && d < ra + radius;
    if (!crosses) return refined_trapezoid_mean(value_at, min_nodes);

    const double cos_half = (ra * ra + d * d - radius * radius) / (2.0 * ra * d);
    const double half = std::acos(std::clamp(cos_half, -1.0, 1.0));
    const double phi = std::arg(c);
    // The arc facing the plateau centre is inside the plateau.
    const double inside = (2.0 * half / kTwoPi) * kernel.plateau();
    const int panels = std::max(4, min_nodes / kPanelOrder);
    const double outside =
        refined_panel_integral(value_at, phi + half, phi + kTwoPi - half, panels) / kTwoPi;
    return inside + outside;
}

double exact_cov(const CovarianceQuery& q, int n_nodes) {
    if (n_nodes < 64) throw std::invalid_argument("exact_cov needs at least 64 nodes");
    if (q.rho2 < q.rho1) return kernel_circle_mean(q.z2, q.rho2, q.z1, q.rho1, n_nodes);
    return kernel_circle_mean(q.z1, q.rho1, q.z2, q.rho2, n_nodes);
}

double closed_cov(const CovarianceQuery& q) {
    switch (q.regime()) {
        case Regime::kNested: return -std::log(std::tanh(std::max(q.rho1, q.rho2)));
        case Regime::kDisjoint: return green_disk(q.z1, q.z2);
        case Regime::kOverlapping: break;
    }
    throw RegimeError(
        "overlapping circles have no closed-form covariance; use exact_cov instead");
}

double mean_square_increment_bound(const CovarianceQuery& q) {
    const double radial = std::fabs(std::log(std::tanh(q.rho1)) - std::log(std::tanh(q.rho2)));
    const double lipschitz = 1.0 / std::sinh(2.0 * q.rho1) + 1.0 / std::sinh(2.0 * q.rho2);
    return radial + 2.0 * lipschitz * q.distance();
}

int brownian_nodes(double t) {
    const double r = std::exp(-t);
    return std::max(kModeAverageNodes, static_cast<int>(std::ceil(16.0 / r)));
}

void validate_times(std::span<const double> times) {
    double prev = 0.0;
    for (double t : times) {
        if (!(t > 0.0) || !std::isfinite(t))
            throw std::invalid_argument("Brownian times must be positive and finite");
        if (!(t > prev)) throw std::invalid_argument("Brownian times must be strictly increasing");
        prev = t;
    }
}

std::vector<double> brownian_path(const FieldSample& s, const DiskPoint& z0,
                                  std::span<const double> times, bool include_origin,
                                  ModeAverageCache* cache) {
    validate_times(times);
    std::vector<double> path;
    path.reserve(times.size() + 1);
    if (include_origin) path.push_back(0.0);
    for (double t : times)
        path.push_back(circle_avg_field(s, z0, time_to_rho(t), cache, brownian_nodes(t)));
    return path;
}

}  // namespace gffdisk
