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
#include <memory>
#include <span>
#include <vector>

#include "gffdisk/poincare.hpp"
#include "gffdisk/spectral.hpp"

namespace gffdisk {

/// A truncated Gaussian free field: sum_j a_j e_j with a_j i.i.d. N(0, 1).
class FieldSample {
public:
    /// Throws std::invalid_argument if coeffs does not match the basis size.
    FieldSample(std::shared_ptr<const SpectralBasis> basis, std::vector<double> coeffs,
                std::uint64_t seed = 0);

    const SpectralBasis& basis() const { return *basis_; }
    const std::shared_ptr<const SpectralBasis>& basis_ptr() const { return basis_; }
    const std::vector<double>& coeffs() const { return coeffs_; }
    std::uint64_t seed() const { return seed_; }

private:
    std::shared_ptr<const SpectralBasis> basis_;
    std::vector<double> coeffs_;
    std::uint64_t seed_;
};

/// Fills out[j] with the coefficient of basis mode j for `seed`. Draws are
/// keyed by the mode identity (n, parity, k), so a mode gets the same
/// coefficient in every truncation that contains it.
void sample_coefficients(const SpectralBasis& basis, std::uint64_t seed, std::span<double> out);

FieldSample sample_field(std::shared_ptr<const SpectralBasis> basis, std::uint64_t seed);

double eval_field(const FieldSample& s, const DiskPoint& z);

/// <u, W> for u given by its coefficients in the same basis.
double pair_field(const FieldSample& s, std::span<const double> u_coeffs);

/// Field values on a resolution x resolution lattice over [-1, 1]^2,
/// row-major with y varying slowest. Cells outside the disk are masked and
/// hold 0.
struct FieldGrid {
    int resolution = 0;
    std::vector<double> values;
    std::vector<std::uint8_t> inside;

    double coord(int i) const { return -1.0 + 2.0 * i / (resolution - 1); }
};

FieldGrid field_grid(const FieldSample& s, int resolution);

}  // namespace gffdisk
