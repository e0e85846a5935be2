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

#include "gffdisk/parallel.hpp"

#include <stdexcept>

#include "gffdisk/field.hpp"
#include "gffdisk/numerics.hpp"
#include "gffdisk/rng.hpp"

namespace gffdisk {

std::vector<double> mode_circle_averages(const SpectralBasis& basis, const DiskPoint& z0,
                                         double rho, int n_nodes, Exec exec) {
    if (n_nodes < 16) throw std::invalid_argument("circle averages need at least 16 nodes");
    const HyperbolicCircle c(z0, rho);
    const std::size_t m = basis.size();
    Matrix values(static_cast<std::size_t>(n_nodes), m);

    auto fill = [&](int k) {
        const Complex z = c.point_at_raw(kTwoPi * k / n_nodes);
        std::span<double> out(values.data.data() + static_cast<std::size_t>(k) * m, m);
        basis.evaluate_all(z, out);
    };
    if (exec == Exec::kParallel) {
#pragma omp parallel for schedule(static)
        for (int k = 0; k < n_nodes; ++k) fill(k);
    } else {
        for (int k = 0; k < n_nodes; ++k) fill(k);
    }

    std::vector<double> result(m);
    auto reduce = [&](std::size_t j) {
        CompensatedSum s;
        for (int k = 0; k < n_nodes; ++k) s.add(values(static_cast<std::size_t>(k), j));
        result[j] = s.value() / n_nodes;
    };
    const auto mm = static_cast<std::int64_t>(m);
    if (exec == Exec::kParallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t j = 0; j < mm; ++j) reduce(static_cast<std::size_t>(j));
    } else {
        for (std::size_t j = 0; j < m; ++j) reduce(j);
    }
    return result;
}

Matrix gram_matrix(const SpectralBasis& basis, std::size_t count, const QuadratureSpec& q,
                   Exec exec) {
    if (count > basis.size()) throw std::invalid_argument("gram_matrix: count exceeds basis size");
    int n_max = 0;
    for (std::size_t a = 0; a < count; ++a) n_max = std::max(n_max, basis[a].n);
    q.validate(n_max);

    const GaussLegendre gl(q.radial_nodes);
    const std::size_t nodes = static_cast<std::size_t>(q.radial_nodes) * q.angular_nodes;
    std::vector<double> weight(nodes);
    Matrix gx(nodes, count);
    Matrix gy(nodes, count);

    auto fill = [&](std::size_t idx) {
        const int i = static_cast<int>(idx / q.angular_nodes);
        const int k = static_cast<int>(idx % q.angular_nodes);
        const double rho = 0.5 * (gl.nodes[i] + 1.0);
        const Complex z = std::polar(rho, kTwoPi * k / q.angular_nodes);
        weight[idx] = 0.5 * gl.weights[i] * rho / q.angular_nodes;
        for (std::size_t a = 0; a < count; ++a) {
            const Vec2 g = mode_gradient(basis[a], z);
            gx(idx, a) = g.x;
            gy(idx, a) = g.y;
        }
    };
    const auto total = static_cast<std::int64_t>(nodes);
    if (exec == Exec::kParallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t idx = 0; idx < total; ++idx) fill(static_cast<std::size_t>(idx));
    } else {
        for (std::size_t idx = 0; idx < nodes; ++idx) fill(idx);
    }

    Matrix gram(count, count);
    auto entry = [&](std::size_t a) {
        for (std::size_t b = a; b < count; ++b) {
            CompensatedSum s;
            for (std::size_t idx = 0; idx < nodes; ++idx)
                s.add(weight[idx] * (gx(idx, a) * gx(idx, b) + gy(idx, a) * gy(idx, b)));
            gram(a, b) = s.value();
            gram(b, a) = gram(a, b);
        }
    };
    const auto cc = static_cast<std::int64_t>(count);
    if (exec == Exec::kParallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t a = 0; a < cc; ++a) entry(static_cast<std::size_t>(a));
    } else {
        for (std::size_t a = 0; a < count; ++a) entry(a);
    }
    return gram;
}

Matrix replicate_pairings(const SpectralBasis& basis, std::uint64_t seed, std::size_t n_replicates,
                          std::span<const std::vector<double>> functionals, Exec exec) {
    for (const auto& f : functionals)
        if (f.size() != basis.size())
            throw std::invalid_argument("replicate_pairings: functional size mismatch");
    Matrix out(n_replicates, functionals.size());

    auto one = [&](std::size_t i, std::vector<double>& coeffs) {
        sample_coefficients(basis, derive_seed(seed, i), coeffs);
        for (std::size_t q = 0; q < functionals.size(); ++q) {
            CompensatedSum s;
            const std::vector<double>& w = functionals[q];
            for (std::size_t j = 0; j < coeffs.size(); ++j) s.add(coeffs[j] * w[j]);
            out(i, q) = s.value();
        }
    };
    const auto n = static_cast<std::int64_t>(n_replicates);
    if (exec == Exec::kParallel) {
#pragma omp parallel
        {
            std::vector<double> coeffs(basis.size());
#pragma omp for schedule(static)
            for (std::int64_t i = 0; i < n; ++i) one(static_cast<std::size_t>(i), coeffs);
        }
    } else {
        std::vector<double> coeffs(basis.size());
        for (std::size_t i = 0; i < n_replicates; ++i) one(i, coeffs);
    }
    return out;
}

}  // namespace gffdisk
