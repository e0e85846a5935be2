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

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;

    explicit GaussLegendre(int n);
    int size() const { return static_cast<int>(nodes.size()); }
};

/// Tensor rule for the unit disk in polar coordinates: Gauss-Legendre in the
/// radius on (0, 1), periodic trapezoid in the angle.
struct QuadratureSpec {
    int radial_nodes = 64;
    int angular_nodes = 256;

    /// Throws std::invalid_argument if the rule is too coarse to resolve
    /// angular modes up to n_max.
    void validate(int n_max = 0) const;
};

}  // namespace gffdisk
