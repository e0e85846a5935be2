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
#include <stdexcept>

#include "gffdisk/kernels.hpp"
#include "gffdisk/rng.hpp"

using namespace gffdisk;

TEST(GreenEuclidean, ClosedForms) {
    EXPECT_NEAR(green_euclidean({1.0 / std::exp(1.0), 0.0}), 1.0, 1e-15);
    EXPECT_NEAR(green_euclidean({0.5, 0.0}), std::log(2.0), 1e-15);
    EXPECT_NEAR(green_euclidean({0.0, 1.0 - 1e-12}), 0.0, 1e-11);
    EXPECT_THROW(green_euclidean({0.0, 0.0}), std::domain_error);
}

TEST(GreenEuclidean, Gradient) {
    const Vec2 g1 = grad_green_euclidean({1.0, 0.0});
    EXPECT_DOUBLE_EQ(g1.x, -1.0);
    EXPECT_DOUBLE_EQ(g1.y, 0.0);
    const Vec2 g2 = grad_green_euclidean({0.0, 0.5});
    EXPECT_DOUBLE_EQ(g2.x, 0.0);
    EXPECT_DOUBLE_EQ(g2.y, -2.0);
    // Parallel to -z and matching a central difference.
    const Complex z(0.3, -0.7);
    const Vec2 g = grad_green_euclidean(z);
    EXPECT_NEAR(g.x * z.imag() - g.y * z.real(), 0.0, 1e-15);
    EXPECT_LT(g.x * z.real() + g.y * z.imag(), 0.0);
    const double h = 1e-6;
    EXPECT_NEAR(g.x, (green_euclidean(z + h) - green_euclidean(z - h)) / (2 * h), 1e-8);
    EXPECT_THROW(grad_green_euclidean({0.0, 0.0}), std::domain_error);
}

TEST(GreenDisk, Examples) {
    EXPECT_NEAR(green_disk(DiskPoint(), DiskPoint(0.5, 0.0)), std::log(2.0), 1e-15);
    EXPECT_NEAR(green_disk(DiskPoint(-0.5, 0.0), DiskPoint(0.5, 0.0)), -std::log(0.8), 1e-14);
    EXPECT_THROW(green_disk(DiskPoint(0.1, 0.1), DiskPoint(0.1, 0.1)), std::domain_error);
}

TEST(GreenDisk, SymmetricPositiveAndVanishingAtBoundary) {
    for (std::uint64_t i = 0; i < 100; ++i) {
        const DiskPoint a(std::polar(0.9 * uniform01(5, 4 * i), kTwoPi * uniform01(5, 4 * i + 1)));
        const DiskPoint b(std::polar(0.9 * uniform01(5, 4 * i + 2), kTwoPi * uniform01(5, 4 * i + 3)));
        const double g = green_disk(a, b);
        EXPECT_GT(g, 0.0);
        EXPECT_NEAR(g, green_disk(b, a), 1e-12 * g);
    }
    EXPECT_LT(green_disk(DiskPoint(0.2, 0.1), DiskPoint(0.0, 0.999999)), 1e-5);
}

TEST(TruncatedKernel, PlateauAndTail) {
    const DiskPoint c(0.3, 0.1);
    const TruncatedKernel k = TruncatedKernel::from_rho(c, 0.7);
    EXPECT_NEAR(k.plateau(), -std::log(std::tanh(0.7)), 1e-15);
    EXPECT_EQ(k(c), k.plateau());
    const DiskPoint inside(0.35, 0.05);
    ASSERT_LT(hyp_distance(c, inside), 0.7);
    EXPECT_EQ(k(inside), k.plateau());
    const DiskPoint outside(-0.6, 0.4);
    ASSERT_GT(hyp_distance(c, outside), 0.7);
    EXPECT_NEAR(k(outside), green_disk(c, outside), 1e-14);
    EXPECT_LT(k(DiskPoint(0.0, -0.9999999)), 1e-6);
}

TEST(TruncatedKernel, CentredExampleAndValidation) {
    const TruncatedKernel k(DiskPoint(), 0.5);
    EXPECT_NEAR(k(DiskPoint(0.8, 0.0)), -std::log(0.8), 1e-15);
    EXPECT_NEAR(k(DiskPoint(0.2, 0.0)), std::log(2.0), 1e-15);
    EXPECT_THROW(TruncatedKernel(DiskPoint(), 0.0), std::domain_error);
    EXPECT_THROW(TruncatedKernel(DiskPoint(), 1.0), std::domain_error);
}

TEST(TruncatedKernel, NeverExceedsPlateauOrGreen) {
    const TruncatedKernel k = TruncatedKernel::from_rho(DiskPoint(-0.2, 0.4), 1.3);
    for (std::uint64_t i = 0; i < 500; ++i) {
        const DiskPoint z(std::polar(0.99 * std::sqrt(uniform01(9, 2 * i)), kTwoPi * uniform01(9, 2 * i + 1)));
        const double v = k(z);
        EXPECT_LE(v, k.plateau());
        EXPECT_GE(v, 0.0);
        if (!(z == k.center())) EXPECT_LE(v, green_disk(k.center(), z) + 1e-12);
    }
}
