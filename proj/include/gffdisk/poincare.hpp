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

#include "gffdisk/numerics.hpp"

namespace gffdisk {

// Points closer than this to the unit circle are rejected.
inline constexpr double kBoundaryMargin = 1e-12;

/// A point of the open unit disk.
class DiskPoint {
public:
    DiskPoint() = default;
    /// Throws std::domain_error unless |(x, y)| < 1 - kBoundaryMargin.
    DiskPoint(double x, double y);
    explicit DiskPoint(Complex z) : DiskPoint(z.real(), z.imag()) {}

    double x() const { return x_; }
    double y() const { return y_; }
    Complex z() const { return {x_, y_}; }
    double abs() const { return std::hypot(x_, y_); }
    bool is_origin() const { return x_ == 0.0 && y_ == 0.0; }

    friend bool operator==(const DiskPoint&, const DiskPoint&) = default;

private:
    double x_ = 0.0;
    double y_ = 0.0;
};

bool inside_disk(Complex z);

/// The isometry of the Poincare disk exchanging `pole` and 0:
///   z -> (z0 / conj z0) * (conj z - conj z0) / (z0 conj z - 1).
/// A pole at the origin stands for the identity map.
class MobiusInvolution {
public:
    MobiusInvolution() = default;
    explicit MobiusInvolution(DiskPoint pole);

    const DiskPoint& pole() const { return pole_; }
    bool is_identity() const { return pole_.is_origin(); }

    DiskPoint apply(const DiskPoint& z) const;
    // Unchecked form, also valid for complex arguments off the disk as long
    // as z0 * conj z != 1.
    Complex apply(Complex z) const;

private:
    DiskPoint pole_;
    Complex rotation_{1.0, 0.0};  // z0 / conj z0
};

MobiusInvolution mobius_to_origin(const DiskPoint& z0);

/// tanh of the hyperbolic distance, i.e. |Phi_z(w)|.
double tanh_distance(const DiskPoint& z, const DiskPoint& w);
double hyp_distance(const DiskPoint& z, const DiskPoint& w);

double rho_to_r(double rho);
double r_to_rho(double r);
/// Radius parametrisation turning circle averages into Brownian motion:
/// rho(t) = artanh(exp(-t)).
double time_to_rho(double t);

struct EuclideanCircle {
    Complex center;
    double radius = 0.0;
};

/// Circle through three non-collinear points.
EuclideanCircle circumcircle(Complex a, Complex b, Complex c);

/// Image of the Euclidean circle `c` (contained in the disk) under `phi`.
EuclideanCircle map_circle(const MobiusInvolution& phi, const EuclideanCircle& c);

/// Hyperbolic circle of radius rho about `center`, with its Euclidean
/// realisation cached.
class HyperbolicCircle {
public:
    HyperbolicCircle(DiskPoint center, double rho);

    const DiskPoint& center() const { return center_; }
    double rho() const { return rho_; }
    /// Euclidean radius of the circle once moved to the origin, tanh(rho).
    double r() const { return r_; }
    const DiskPoint& euclid_center() const { return euclid_center_; }
    double euclid_radius() const { return euclid_radius_; }
    const MobiusInvolution& involution() const { return phi_; }

    /// Phi_center(r e^{it}). Uniform t is the arc-length measure.
    DiskPoint point_at(double t) const;
    Complex point_at_raw(double t) const;

private:
    DiskPoint center_;
    double rho_;
    double r_;
    MobiusInvolution phi_;
    DiskPoint euclid_center_;
    double euclid_radius_;
};

inline HyperbolicCircle circle(const DiskPoint& center, double rho) {
    return HyperbolicCircle(center, rho);
}

}  // namespace gffdisk
