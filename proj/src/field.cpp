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

#include "gffdisk/field.hpp"

#include <stdexcept>
#include <string>

#include "gffdisk/numerics.hpp"
#include "gffdisk/rng.hpp"

namespace gffdisk {

FieldSample::FieldSample(std::shared_ptr<const SpectralBasis> basis, std::vector<double> coeffs,
                         std::uint64_t seed)
    : basis_(std::move(basis)), coeffs_(std::move(coeffs)), seed_(seed) {
    if (!basis_) throw std::invalid_argument("FieldSample needs a basis");
    if (coeffs_.size() != basis_->size())
        throw std::invalid_argument("FieldSample: " + std::to_string(coeffs_.size()) +
                                    " coefficients for " + std::to_string(basis_->size()) +
                                    " modes");
}

void sample_coefficients(const SpectralBasis& basis, std::uint64_t seed, std::span<double> out) {
    if (out.size() != basis.size())
        throw std::invalid_argument("sample_coefficients: output span has the wrong size");
    for (std::size_t j = 0; j < basis.size(); ++j) out[j] = standard_normal(seed, basis[j].key());
}

FieldSample sample_field(std::shared_ptr<const SpectralBasis> basis, std::uint64_t seed) {
    std::vector<double> coeffs(basis->size());
    sample_coefficients(*basis, seed, coeffs);
    return FieldSample(std::move(basis), std::move(coeffs), seed);
}

double eval_field(const FieldSample& s, const DiskPoint& z) {
    std::vector<double> values(s.basis().size());
    s.basis().evaluate_all(z.z(), values);
    CompensatedSum sum;
    for (std::size_t j = 0; j < values.size(); ++j) sum.add(s.coeffs()[j] * values[j]);
    return sum.value();
}

double pair_field(const FieldSample& s, std::span<const double> u_coeffs) {
    if (u_coeffs.size() != s.coeffs().size())
        throw std::invalid_argument("pair_field: expected " + std::to_string(s.coeffs().size()) +
                                    " coefficients, got " + std::to_string(u_coeffs.size()));
    CompensatedSum sum;
    for (std::size_t j = 0; j < u_coeffs.size(); ++j) sum.add(u_coeffs[j] * s.coeffs()[j]);
    return sum.value();
}

FieldGrid field_grid(const FieldSample& s, int resolution) {
    if (resolution < 2) throw std::invalid_argument("grid resolution must be at least 2");
    FieldGrid g;
    g.resolution = resolution;
    const std::size_t cells = static_cast<std::size_t>(resolution) * resolution;
    g.values.assign(cells, 0.0);
    g.inside.assign(cells, 0);
    // Rows are independent; each cell is written by exactly one iteration.
#pragma omp parallel for schedule(dynamic)
    for (int iy = 0; iy < resolution; ++iy) {
        for (int ix = 0; ix < resolution; ++ix) {
            const Complex z(g.coord(ix), g.coord(iy));
            if (!inside_disk(z)) continue;
            const std::size_t idx = static_cast<std::size_t>(iy) * resolution + ix;
            g.inside[idx] = 1;
            g.values[idx] = eval_field(s, DiskPoint(z));
        }
    }
    return g;
}

}  // namespace gffdisk
