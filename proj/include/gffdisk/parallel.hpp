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
#include <span>
#include <vector>

#include "gffdisk/poincare.hpp"
#include "gffdisk/quadrature.hpp"
#include "gffdisk/spectral.hpp"

// Data-parallel kernels behind the circle-average, Gram-matrix and Monte
// Carlo code. Each has a serial reference path and an OpenMP path. Both
// produce per-item partial results and reduce them in a fixed order, so the
// outputs are bit-identical for any thread count.

namespace gffdisk {

enum class Exec { kSerial, kParallel };

/// Dense row-major matrix.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}
    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
    std::span<const double> row(std::size_t i) const { return {data.data() + i * cols, cols}; }
};

/// Hyperbolic circle means m_j(z0, rho) of every basis mode, by the periodic
/// trapezoid rule with n_nodes points.
std::vector<double> mode_circle_averages(const SpectralBasis& basis, const DiskPoint& z0,
                                         double rho, int n_nodes, Exec exec = Exec::kParallel);

/// Dirichlet Gram matrix of the first `count` modes under the rule `q`, with
/// analytic gradients.
Matrix gram_matrix(const SpectralBasis& basis, std::size_t count, const QuadratureSpec& q,
                   Exec exec = Exec::kParallel);

/// For replicate i (field seed derive_seed(seed, i)) and each functional
/// vector w_q, the pairing sum_j a_j w_q[j]. Returns an n_replicates x
/// functionals.size() matrix.
Matrix replicate_pairings(const SpectralBasis& basis, std::uint64_t seed, std::size_t n_replicates,
                          std::span<const std::vector<double>> functionals,
                          Exec exec = Exec::kParallel);

}  // namespace gffdisk
