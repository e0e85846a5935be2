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

#include "gffdisk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "gffdisk/bessel.hpp"

namespace gffdisk {

namespace {

struct Polar {
    double rho;
    double theta;
};

Polar to_polar(Complex z) { return {std::abs(z), std::atan2(z.imag(), z.real())}; }

double angular(const SpectralMode& m, double theta) {
    if (m.n == 0) return 1.0;
    return m.parity == Parity::kCos ? std::cos(m.n * theta) : std::sin(m.n * theta);
}

double angular_derivative(const SpectralMode& m, double theta) {
    if (m.n == 0) return 0.0;
    return m.parity == Parity::kCos ? -m.n * std::sin(m.n * theta) : m.n * std::cos(m.n * theta);
}

}  // namespace

std::string_view parity_name(Parity p) { return p == Parity::kCos ? "cos" : "sin"; }

std::uint64_t SpectralMode::key() const {
    return (static_cast<std::uint64_t>(n) << 32) | (static_cast<std::uint64_t>(k) << 1) |
           (parity == Parity::kSin ? 1u : 0u);
}

SpectralMode make_mode(int n, Parity parity, int k, double zero) {
    if (n == 0 && parity == Parity::kSin)
        throw std::invalid_argument("there is no sine mode for n = 0");
    SpectralMode m;
    m.n = n;
    m.parity = parity;
    m.k = k;
    m.zero = zero;
    m.eigenvalue = zero * zero;
    // An L2-unit eigenfunction has Dirichlet energy equal to its eigenvalue,
    // and the L2 norm of J_n(j r) {cos, sin}(n theta) is
    // J_{n+1}(j)^2 / 2 * (2pi for n = 0, pi otherwise).
    const double angular_mass = n == 0 ? kTwoPi : std::numbers::pi;
    const double jn1 = bessel_j(n + 1, zero);
    m.norm_const = std::sqrt(4.0 * std::numbers::pi / (m.eigenvalue * angular_mass)) / std::fabs(jn1);
    return m;
}

double mode_eval_raw(const SpectralMode& m, Complex z) {
    const Polar p = to_polar(z);
    return m.norm_const * bessel_j(m.n, m.zero * p.rho) * angular(m, p.theta);
}

double mode_eval(const SpectralMode& m, const DiskPoint& z) { return mode_eval_raw(m, z.z()); }

Vec2 mode_gradient(const SpectralMode& m, Complex z) {
    const Polar p = to_polar(z);
    const double x = m.zero * p.rho;
    const double radial = m.norm_const * m.zero * bessel_j_derivative(m.n, x) * angular(m, p.theta);
    double tangential = 0.0;
    if (m.n > 0) {
        const double j_over_rho =
            m.zero * (bessel_j(m.n - 1, x) + bessel_j(m.n + 1, x)) / (2.0 * m.n);
        tangential = m.norm_const * j_over_rho * angular_derivative(m, p.theta);
    }
    const double c = std::cos(p.theta);
    const double s = std::sin(p.theta);
    return {radial * c - tangential * s, radial * s + tangential * c};
}

SpectralBasis SpectralBasis::build(int n_max, int k_max) {
    if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
    if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
    if (n_max + 1 > kMaxBesselOrder)
        throw std::invalid_argument("n_max exceeds the supported Bessel order");

    SpectralBasis b;
    b.n_max_ = n_max;
    b.k_max_ = k_max;
    for (int n = 0; n <= n_max; ++n) {
        const std::vector<double> zeros = bessel_zeros(n, k_max);
        for (int k = 1; k <= k_max; ++k) {
            b.modes_.push_back(make_mode(n, Parity::kCos, k, zeros[k - 1]));
            if (n > 0) b.modes_.push_back(make_mode(n, Parity::kSin, k, zeros[k - 1]));
        }
    }
    std::sort(b.modes_.begin(), b.modes_.end(), [](const SpectralMode& a, const SpectralMode& c) {
        return std::make_tuple(a.eigenvalue, a.n, a.parity, a.k) <
               std::make_tuple(c.eigenvalue, c.n, c.parity, c.k);
    });

    for (int i = 0; i < static_cast<int>(b.modes_.size()); ++i) {
        const SpectralMode& m = b.modes_[i];
        if (m.parity == Parity::kSin) continue;
        int sin_index = -1;
        if (m.n > 0) {
            for (int j = 0; j < static_cast<int>(b.modes_.size()); ++j) {
                const SpectralMode& o = b.modes_[j];
                if (o.n == m.n && o.k == m.k && o.parity == Parity::kSin) {
                    sin_index = j;
                    break;
                }
            }
        }
        b.groups_.push_back({m.n, m.zero, i, sin_index});
    }
    return b;
}

void SpectralBasis::evaluate_all(Complex z, std::span<double> out) const {
    if (out.size() != modes_.size())
        throw std::invalid_argument("evaluate_all: output span has the wrong size");
    const Polar p = to_polar(z);
    for (const RadialGroup& g : groups_) {
        const double radial = bessel_j(g.n, g.zero * p.rho);
        const SpectralMode& mc = modes_[g.cos_index];
        out[g.cos_index] = mc.norm_const * radial * (g.n == 0 ? 1.0 : std::cos(g.n * p.theta));
        if (g.sin_index >= 0)
            out[g.sin_index] = modes_[g.sin_index].norm_const * radial * std::sin(g.n * p.theta);
    }
}

Vec2 ScalarField::grad(Complex z) const {
    if (gradient) return gradient(z);
    constexpr double h = 1e-6;
    return {(value(z + Complex(h, 0.0)) - value(z - Complex(h, 0.0))) / (2.0 * h),
            (value(z + Complex(0.0, h)) - value(z - Complex(0.0, h))) / (2.0 * h)};
}

ScalarField mode_field(const SpectralMode& m) {
    return {[m](Complex z) { return mode_eval_raw(m, z); },
            [m](Complex z) { return mode_gradient(m, z); }};
}

namespace {

template <class Integrand>
double polar_disk_sum(const QuadratureSpec& q, Integrand&& integrand) {
    q.validate();
    const GaussLegendre gl(q.radial_nodes);
    CompensatedSum sum;
    for (int i = 0; i < q.radial_nodes; ++i) {
        const double rho = 0.5 * (gl.nodes[i] + 1.0);
        const double wr = 0.5 * gl.weights[i] * rho / q.angular_nodes;
        for (int k = 0; k < q.angular_nodes; ++k) {
            const double theta = kTwoPi * k / q.angular_nodes;
            const double v = integrand(std::polar(rho, theta));
            if (!std::isfinite(v)) {
                std::ostringstream msg;
                msg << "non-finite Dirichlet integrand at node (r=" << rho << ", theta=" << theta
                    << ")";
                throw std::runtime_error(msg.str());
            }
            sum.add(wr * v);
        }
    }
    return sum.value();
}

}  // namespace

double dirichlet_inner(const ScalarField& u, const ScalarField& v, const QuadratureSpec& q) {
    return polar_disk_sum(q, [&](Complex z) { return u.grad(z).dot(v.grad(z)); });
}

double hyperbolic_dirichlet_inner(const ScalarField& u, const ScalarField& v,
                                  const QuadratureSpec& q) {
    return polar_disk_sum(q, [&](Complex z) {
        const double conformal = 1.0 / std::pow(1.0 - std::norm(z), 2);
        const Vec2 gu = u.grad(z);
        const Vec2 gv = v.grad(z);
        const Vec2 hu{gu.x / conformal, gu.y / conformal};
        const Vec2 hv{gv.x / conformal, gv.y / conformal};
        const double metric = conformal * hu.dot(hv);
        return metric * conformal;
    });
}

}  // namespace gffdisk
