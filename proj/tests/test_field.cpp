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

#include <gtest/gtest.h>

#include <cmath>
#include <memory>
#include <stdexcept>

#include "gffdisk/field.hpp"
#include "gffdisk/numerics.hpp"
#include "gffdisk/rng.hpp"

using namespace gffdisk;

namespace {

std::shared_ptr<const SpectralBasis> small_basis() {
    static const auto b = std::make_shared<const SpectralBasis>(build_basis(6, 6));
    return b;
}

}  // namespace

TEST(Rng, CounterStreamIsPureAndSeedSensitive) {
    EXPECT_EQ(counter_bits(7, 3), counter_bits(7, 3));
    EXPECT_NE(counter_bits(7, 3), counter_bits(8, 3));
    EXPECT_NE(counter_bits(7, 3), counter_bits(7, 4));
    EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
    for (std::uint64_t i = 0; i < 1000; ++i) {
        const double u = uniform01(3, i);
        EXPECT_GT(u, 0.0);
        EXPECT_LT(u, 1.0);
    }
    EXPECT_GT(bits_to_open_unit(0), 0.0);
    EXPECT_LT(bits_to_open_unit(~0ull), 1.0);
}

TEST(Rng, InverseNormalCdf) {
    EXPECT_NEAR(inverse_normal_cdf(0.5), 0.0, 1e-15);
    EXPECT_NEAR(inverse_normal_cdf(0.975), 1.959963984540054, 1e-13);
    EXPECT_NEAR(inverse_normal_cdf(1e-10), -6.361340902404056, 1e-11);
    for (double p : {1e-300, 1e-8, 0.02, 0.3, 0.7, 0.99, 1 - 1e-12}) {
        const double x = inverse_normal_cdf(p);
        EXPECT_NEAR(0.5 * std::erfc(-x / std::sqrt(2.0)), p, 1e-14 * std::max(p, 1e-300) + 1e-15);
    }
}

TEST(SampleCoefficients, DeterministicAndKeyedByMode) {
    const auto b = small_basis();
    const FieldSample a = sample_field(b, 42), c = sample_field(b, 42);
    EXPECT_EQ(a.coeffs(), c.coeffs());
    EXPECT_NE(a.coeffs(), sample_field(b, 43).coeffs());
    // The same mode draws the same coefficient in a different truncation.
    const auto other = std::make_shared<const SpectralBasis>(build_basis(3, 9));
    const FieldSample d = sample_field(other, 42);
    for (std::size_t i = 0; i < other->size(); ++i)
        for (std::size_t j = 0; j < b->size(); ++j)
            if ((*other)[i].key() == (*b)[j].key()) EXPECT_EQ(d.coeffs()[i], a.coeffs()[j]);
}

TEST(SampleCoefficients, FirstCoefficientIsStandardNormal) {
    const auto b = small_basis();
    std::vector<double> c(b->size());
    CompensatedSum s1, s2;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        sample_coefficients(*b, derive_seed(2024, i), c);
        s1.add(c[0]);
        s2.add(c[0] * c[0]);
    }
    const double mean = s1.value() / n;
    const double var = s2.value() / n - mean * mean;
    EXPECT_NEAR(mean, 0.0, 0.01);
    EXPECT_NEAR(var, 1.0, 0.015);
}

TEST(FieldSample, RejectsMismatchedCoefficients) {
    EXPECT_THROW(FieldSample(small_basis(), std::vector<double>(3)), std::invalid_argument);
    std::vector<double> wrong(2);
    EXPECT_THROW(sample_coefficients(*small_basis(), 1, wrong), std::invalid_argument);
}

TEST(EvalField, LinearityAndBoundary) {
    const auto b = small_basis();
    const FieldSample zero(b, std::vector<double>(b->size(), 0.0));
    EXPECT_EQ(eval_field(zero, DiskPoint(0.2, 0.3)), 0.0);
    std::vector<double> unit(b->size(), 0.0);
    unit[0] = 1.0;
    const FieldSample e1(b, unit);
    EXPECT_DOUBLE_EQ(eval_field(e1, DiskPoint(0.2, 0.3)), mode_eval((*b)[0], DiskPoint(0.2, 0.3)));
    const FieldSample s = sample_field(b, 5);
    EXPECT_LT(std::fabs(eval_field(s, DiskPoint(0.0, 1.0 - 1e-10))), 1e-6);
}

TEST(PairField, Examples) {
    const auto b = small_basis();
    const FieldSample s = sample_field(b, 9);
    std::vector<double> u(b->size(), 0.0);
    EXPECT_EQ(pair_field(s, u), 0.0);
    u[0] = 1.0;
    EXPECT_EQ(pair_field(s, u), s.coeffs()[0]);
    EXPECT_THROW(pair_field(s, std::vector<double>(1)), std::invalid_argument);
}

TEST(PairField, UnitNormPairingHasUnitVariance) {
    const auto b = small_basis();
    // Coefficient vector of a unit-norm test function.
    std::vector<double> u(b->size());
    double norm2 = 0.0;
    for (std::size_t j = 0; j < u.size(); ++j) {
        u[j] = 1.0 / (1.0 + j);
        norm2 += u[j] * u[j];
    }
    for (double& x : u) x /= std::sqrt(norm2);
    CompensatedSum s1, s2;
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
        const double p = pair_field(sample_field(b, derive_seed(77, i)), u);
        s1.add(p);
        s2.add(p * p);
    }
    const double mean = s1.value() / n;
    EXPECT_NEAR(s2.value() / n - mean * mean, 1.0, 0.05);
}

TEST(FieldGrid, MaskAndValues) {
    const auto b = small_basis();
    const FieldGrid tiny = field_grid(sample_field(b, 1), 2);
    EXPECT_EQ(tiny.values.size(), 4u);
    for (auto m : tiny.inside) EXPECT_EQ(m, 0);

    const FieldGrid zero = field_grid(FieldSample(b, std::vector<double>(b->size(), 0.0)), 9);
    for (double v : zero.values) EXPECT_EQ(v, 0.0);

    const FieldSample s = sample_field(b, 3);
    const FieldGrid g = field_grid(s, 17);
    int inside = 0;
    for (int iy = 0; iy < 17; ++iy)
        for (int ix = 0; ix < 17; ++ix) {
            const std::size_t i = iy * 17 + ix;
            if (!g.inside[i]) {
                EXPECT_EQ(g.values[i], 0.0);
                continue;
            }
            ++inside;
            EXPECT_NEAR(g.values[i], eval_field(s, DiskPoint(g.coord(ix), g.coord(iy))), 1e-12);
        }
    EXPECT_GT(inside, 150);
    EXPECT_THROW(field_grid(s, 1), std::invalid_argument);
}
