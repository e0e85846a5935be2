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
#include <span>
#include <string_view>
#include <vector>

#include "gffdisk/numerics.hpp"
#include "gffdisk/poincare.hpp"
#include "gffdisk/quadrature.hpp"

namespace gffdisk {

enum class Parity { kCos, kSin };

std::string_view parity_name(Parity p);

/// One Fourier-Bessel eigenfunction of the Dirichlet Laplacian on the disk,
///   norm_const * J_n(zero * |z|) * {cos, sin}(n theta),
/// scaled to unit norm for <u, v> = (1/2pi) * integral of grad u . grad v.
struct SpectralMode {
    int n = 0;
    Parity parity = Parity::kCos;
    int k = 1;
    double zero = 0.0;        // j_{n,k}
    double eigenvalue = 0.0;  // zero^2
    double norm_const = 0.0;

    /// Stable identity independent of basis size or ordering.
    std::uint64_t key() const;
};

/// Builds the mode (n, parity, k) with its zero and normalisation.
SpectralMode make_mode(int n, Parity parity, int k, double zero);

double mode_eval(const SpectralMode& m, const DiskPoint& z);
double mode_eval_raw(const SpectralMode& m, Complex z);
/// Cartesian gradient, analytic (J_n' by recurrence, J_n(x)/x without
/// dividing by the radius, so the origin is safe).
Vec2 mode_gradient(const SpectralMode& m, Complex z);

/// Modes with n <= n_max and k <= k_max, sorted by eigenvalue with ties
/// broken by (n, cos before sin, k).
class SpectralBasis {
public:
    static SpectralBasis build(int n_max, int k_max);

    const std::vector<SpectralMode>& modes() const { return modes_; }
    std::size_t size() const { return modes_.size(); }
    const SpectralMode& operator[](std::size_t i) const { return modes_[i]; }
    int n_max() const { return n_max_; }
    int k_max() const { return k_max_; }

    /// Values of every mode at z, in basis order. out.size() must equal size().
    void evaluate_all(Complex z, std::span<double> out) const;

private:
    struct RadialGroup {
        int n;
        double zero;
        int cos_index;
        int sin_index;  // -1 for n == 0
    };

    std::vector<SpectralMode> modes_;
    std::vector<RadialGroup> groups_;
    int n_max_ = 0;
    int k_max_ = 0;
};

inline SpectralBasis build_basis(int n_max, int k_max) { return SpectralBasis::build(n_max, k_max); }

/// A real function on the disk with an optional analytic gradient. Without
/// one, the gradient is taken by central differences with step 1e-6.
struct ScalarField {
    std::function<double(Complex)> value;
    std::function<Vec2(Complex)> gradient;

    Vec2 grad(Complex z) const;
};

ScalarField mode_field(const SpectralMode& m);

/// (1/2pi) * integral over the disk of grad u . grad v, by the polar tensor
/// rule `q`. Throws std::runtime_error naming the node if the integrand is
/// not finite.
double dirichlet_inner(const ScalarField& u, const ScalarField& v, const QuadratureSpec& q);

/// The same form written with the hyperbolic metric, gradient and area
/// element. The conformal factors cancel, so it must agree with
/// dirichlet_inner up to rounding.
double hyperbolic_dirichlet_inner(const ScalarField& u, const ScalarField& v,
                                  const QuadratureSpec& q);

}  // namespace gffdisk
