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
#include <numbers>
#include <stdexcept>

#include "gffdisk/poincare.hpp"
#include "gffdisk/rng.hpp"
#include "oracles.hpp"

using namespace gffdisk;

namespace {

DiskPoint random_point(std::uint64_t seed, std::uint64_t i, double max_r = 0.95) {
    const double r = max_r * std::sqrt(uniform01(seed, 2 * i));
    return DiskPoint(std::polar(r, kTwoPi * uniform01(seed, 2 * i + 1)));
}

}  // namespace

TEST(DiskPoint, RejectsBoundaryAndOutside) {
    EXPECT_THROW(DiskPoint(1.0, 0.0), std::domain_error);
    EXPECT_THROW(DiskPoint(0.8, 0.8), std::domain_error);
    EXPECT_THROW(DiskPoint(1.0 - 1e-13, 0.0), std::domain_error);
    EXPECT_THROW(DiskPoint(std::nan(""), 0.0), std::domain_error);
    EXPECT_NO_THROW(DiskPoint(0.999999, 0.0));
}

TEST(HypDistance, Examples) {
    EXPECT_NEAR(hyp_distance(DiskPoint(), DiskPoint(0.5, 0.0)), 0.5493061443340549, 1e-15);
    const DiskPoint z(0.3, -0.2);
    EXPECT_EQ(hyp_distance(z, z), 0.0);
    EXPECT_NEAR(hyp_distance(DiskPoint(-0.5, 0.0), DiskPoint(0.5, 0.0)), std::atanh(0.8), 1e-14);
}

TEST(HypDistance, MatchesOracleSymmetricAndTriangle) {
    for (std::uint64_t i = 0; i < 200; ++i) {
        const DiskPoint a = random_point(11, 3 * i), b = random_point(11, 3 * i + 1),
                        c = random_point(11, 3 * i + 2);
        const double dab = hyp_distance(a, b);
        EXPECT_NEAR(dab, oracle::hyperbolic_distance(a.z(), b.z()), 1e-11 * (1.0 + dab));
        EXPECT_NEAR(dab, hyp_distance(b, a), 1e-12 * (1.0 + dab));
        EXPECT_LE(dab, hyp_distance(a, c) + hyp_distance(c, b) + 1e-10);
    }
}

TEST(Mobius, Examples) {
    const MobiusInvolution phi(DiskPoint(0.3, 0.4));
    EXPECT_LT(std::abs(phi.apply(DiskPoint(0.3, 0.4)).z()), 1e-15);
    EXPECT_LT(std::abs(phi.apply(DiskPoint()).z() - Complex(0.3, 0.4)), 1e-15);

    const MobiusInvolution id;
    EXPECT_TRUE(id.is_identity());
    EXPECT_EQ(id.apply(DiskPoint(0.2, 0.1)), DiskPoint(0.2, 0.1));

    const MobiusInvolution half(DiskPoint(0.5, 0.0));
    EXPECT_LT(std::abs(half.apply(DiskPoint(0.5, 0.0)).z()), 1e-16);
    EXPECT_LT(std::abs(half.apply(DiskPoint()).z() - 0.5), 1e-16);
    EXPECT_LT(std::abs(half.apply(DiskPoint(0.2, 0.0)).z() - 1.0 / 3.0), 1e-15);
}

TEST(Mobius, InvolutionAndIsometryProperties) {
    for (std::uint64_t i = 0; i < 200; ++i) {
        const DiskPoint pole = random_point(21, 3 * i, 0.9);
        const DiskPoint a = random_point(21, 3 * i + 1, 0.9), b = random_point(21, 3 * i + 2, 0.9);
        const MobiusInvolution phi(pole);
        const DiskPoint pa = phi.apply(a);
        EXPECT_LT(pa.abs(), 1.0);
        EXPECT_LT(std::abs(phi.apply(pa).z() - a.z()), 1e-12);
        EXPECT_LT(std::abs(pa.z() - oracle::involution(pole.z(), a.z())), 1e-14);
        const double d = hyp_distance(a, b);
        EXPECT_NEAR(hyp_distance(pa, phi.apply(b)), d, 1e-10 * (1.0 + d));
    }
}

TEST(HyperbolicCircle, CentredAtOrigin) {
    const HyperbolicCircle c(DiskPoint(), std::atanh(0.5));
    EXPECT_LT(std::abs(c.euclid_center().z()), 1e-15);
    EXPECT_NEAR(c.euclid_radius(), 0.5, 1e-15);
    EXPECT_LT(std::abs(c.point_at(0.0).z() - 0.5), 1e-15);
    EXPECT_LT(std::abs(c.point_at(std::numbers::pi / 2).z() - Complex(0.0, 0.5)), 1e-15);
}

TEST(HyperbolicCircle, OffCentreRealisation) {
    const HyperbolicCircle c(DiskPoint(0.6, 0.0), std::atanh(0.5));
    EXPECT_GT(std::abs(c.euclid_center().z() - 0.6), 1e-3);
    for (int i = 0; i < 64; ++i) {
        const DiskPoint p = c.point_at(kTwoPi * i / 64.0);
        EXPECT_NEAR(hyp_distance(c.center(), p), c.rho(), 1e-12);
        EXPECT_NEAR(std::abs(p.z() - c.euclid_center().z()), c.euclid_radius(), 1e-12);
    }
}

TEST(HyperbolicCircle, PointAtZeroWithPoleHalf) {
    const HyperbolicCircle c(DiskPoint(0.5, 0.0), std::atanh(0.5));
    EXPECT_LT(std::abs(c.point_at(0.0).z()), 1e-15);
}

TEST(HyperbolicCircle, RandomCirclesSatisfyInvariants) {
    for (std::uint64_t i = 0; i < 100; ++i) {
        const DiskPoint z = random_point(31, i, 0.8);
        const double rho = 0.05 + 2.5 * uniform01(32, i);
        const HyperbolicCircle c(z, rho);
        for (int k = 0; k < 16; ++k) {
            const DiskPoint p = c.point_at(kTwoPi * k / 16.0);
            EXPECT_NEAR(hyp_distance(z, p), rho, 1e-12 * (1.0 + rho) / (1.0 - p.abs()));
            EXPECT_NEAR(std::abs(p.z() - c.euclid_center().z()), c.euclid_radius(), 1e-12);
        }
    }
}

TEST(HyperbolicCircle, RejectsBadRadius) {
    EXPECT_THROW(HyperbolicCircle(DiskPoint(), 0.0), std::domain_error);
    EXPECT_THROW(HyperbolicCircle(DiskPoint(), -1.0), std::domain_error);
    EXPECT_THROW(HyperbolicCircle(DiskPoint(), INFINITY), std::domain_error);
}

TEST(RadiusConversions, Examples) {
    EXPECT_NEAR(rho_to_r(std::atanh(0.5)), 0.5, 1e-15);
    EXPECT_NEAR(time_to_rho(std::log(2.0)), std::atanh(0.5), 1e-15);
    const double big = r_to_rho(0.9999);
    EXPECT_TRUE(std::isfinite(big));
    EXPECT_NEAR(big, 0.5 * std::log(1.9999 / 0.0001), 1e-11);
    EXPECT_THROW(r_to_rho(1.0), std::domain_error);
    EXPECT_THROW(rho_to_r(0.0), std::domain_error);
    EXPECT_THROW(time_to_rho(0.0), std::domain_error);
}

TEST(RadiusConversions, RoundTrip) {
    for (double rho : {1e-3, 0.1, 0.5, 1.0, 3.0, 6.0})
        EXPECT_NEAR(r_to_rho(rho_to_r(rho)), rho, 1e-12 * rho + 1e-12);
}

TEST(MapCircle, ImageMatchesMappedPoints) {
    const MobiusInvolution phi(DiskPoint(0.4, -0.3));
    const EuclideanCircle c{{0.1, 0.2}, 0.3};
    const EuclideanCircle img = map_circle(phi, c);
    for (int k = 0; k < 32; ++k) {
        const Complex p = c.center + std::polar(c.radius, kTwoPi * k / 32.0);
        EXPECT_NEAR(std::abs(phi.apply(p) - img.center), img.radius, 1e-12);
    }
}
