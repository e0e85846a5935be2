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
#include "gffdisk/poincare.hpp"

namespace gffdisk {

/// -ln|z|, the logarithmic kernel of the plane. Throws std::domain_error at 0.
double green_euclidean(Complex z);

/// Gradient of green_euclidean: -z / |z|^2.
Vec2 grad_green_euclidean(Complex z);

/// Green function of the disk, -ln tanh d(z0, z). Throws at z == z0.
double green_disk(const DiskPoint& z0, const DiskPoint& z);

/// -ln max(r, tanh d(center, z)): the logarithmic kernel cut off at the
/// hyperbolic circle of radius artanh(r) about `center`. Its Dirichlet
/// pairing with f is the hyperbolic circle average of f.
class TruncatedKernel {
public:
    /// r must lie in (0, 1).
    TruncatedKernel(DiskPoint center, double r);
    static TruncatedKernel from_rho(DiskPoint center, double rho);

    const DiskPoint& center() const { return center_; }
    double r() const { return r_; }
    double plateau() const { return plateau_; }

    double operator()(const DiskPoint& z) const { return value_raw(z.z()); }
    double value_raw(Complex z) const;

private:
    DiskPoint center_;
    double r_;
    double plateau_;
    MobiusInvolution phi_;
};

inline double kernel_value(const TruncatedKernel& k, const DiskPoint& z) { return k(z); }

}  // namespace gffdisk
