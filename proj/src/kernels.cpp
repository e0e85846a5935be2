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

#include "gffdisk/kernels.hpp"

#include <algorithm>
#include <stdexcept>

namespace gffdisk {

double green_euclidean(Complex z) {
    const double n = std::norm(z);
    if (n == 0.0) throw std::domain_error("green_euclidean is singular at the origin");
    return -0.5 * std::log(n);
}

Vec2 grad_green_euclidean(Complex z) {
    const double n = std::norm(z);
    if (n == 0.0) throw std::domain_error("grad_green_euclidean is singular at the origin");
    return {-z.real() / n, -z.imag() / n};
}

double green_disk(const DiskPoint& z0, const DiskPoint& z) {
    const double t = tanh_distance(z0, z);
    if (t == 0.0) throw std::domain_error("green_disk is singular at its pole");
    return -std::log(t);
}

TruncatedKernel::TruncatedKernel(DiskPoint center, double r)
    : center_(center), r_(r), phi_(center) {
    if (!(r > 0.0 && r < 1.0))
        throw std::domain_error("truncation radius must lie in (0, 1)");
    plateau_ = -std::log(r_);
}

TruncatedKernel TruncatedKernel::from_rho(DiskPoint center, double rho) {
    return TruncatedKernel(center, rho_to_r(rho));
}

double TruncatedKernel::value_raw(Complex z) const {
    const double t = std::abs(phi_.apply(z));
    return t <= r_ ? plateau_ : -std::log(t);
}

}  // namespace gffdisk
