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

#include <omp.h>

#include <cstring>
#include <stdexcept>

#include "gffdisk/field.hpp"
#include "gffdisk/parallel.hpp"
#include "gffdisk/rng.hpp"

using namespace gffdisk;

namespace {

const SpectralBasis& basis() {
    static const SpectralBasis b = build_basis(12, 12);
    return b;
}

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

class ThreadCount : public ::testing::TestWithParam<int> {
protected:
    void SetUp() override {
        saved_ = omp_get_max_threads();
        omp_set_num_threads(GetParam());
    }
    void TearDown() override { omp_set_num_threads(saved_); }

private:
    int saved_ = 1;
};

}  // namespace

TEST_P(ThreadCount, CircleAveragesMatchSerialBitForBit) {
    const DiskPoint z(0.31, -0.22);
    const auto serial = mode_circle_averages(basis(), z, 0.7, 512, Exec::kSerial);
    const auto parallel = mode_circle_averages(basis(), z, 0.7, 512, Exec::kParallel);
    EXPECT_TRUE(same_bits(serial, parallel));
}

TEST_P(ThreadCount, GramMatrixMatchesSerialBitForBit) {
    const QuadratureSpec q{32, 128};
    const Matrix serial = gram_matrix(basis(), 30, q, Exec::kSerial);
    const Matrix parallel = gram_matrix(basis(), 30, q, Exec::kParallel);
    EXPECT_TRUE(same_bits(serial.data, parallel.data));
    for (std::size_t i = 0; i < 30; ++i)
        for (std::size_t j = 0; j < 30; ++j) EXPECT_EQ(serial(i, j), serial(j, i));
}

TEST_P(ThreadCount, ReplicatePairingsMatchSerialBitForBit) {
    std::vector<std::vector<double>> w{
        mode_circle_averages(basis(), DiskPoint(), 0.5, 256, Exec::kSerial),
        mode_circle_averages(basis(), DiskPoint(0.2, 0.0), 1.0, 256, Exec::kSerial)};
    const Matrix serial = replicate_pairings(basis(), 99, 500, w, Exec::kSerial);
    const Matrix parallel = replicate_pairings(basis(), 99, 500, w, Exec::kParallel);
    EXPECT_TRUE(same_bits(serial.data, parallel.data));
}

INSTANTIATE_TEST_SUITE_P(Threads, ThreadCount, ::testing::Values(1, 2, 3, 8));

TEST(Parallel, PairingsEqualFieldPairings) {
    const std::vector<std::vector<double>> w{
        mode_circle_averages(basis(), DiskPoint(), 0.5, 256, Exec::kSerial)};
    const Matrix m = replicate_pairings(basis(), 5, 20, w);
    const auto shared = std::make_shared<const SpectralBasis>(basis());
    for (std::size_t i = 0; i < 20; ++i)
        EXPECT_EQ(m(i, 0), pair_field(sample_field(shared, derive_seed(5, i)), w[0]));
}

TEST(Parallel, RejectsBadArguments) {
    EXPECT_THROW(mode_circle_averages(basis(), DiskPoint(), 0.5, 4), std::invalid_argument);
    EXPECT_THROW(gram_matrix(basis(), basis().size() + 1, QuadratureSpec{}), std::invalid_argument);
    const std::vector<std::vector<double>> bad{std::vector<double>(3)};
    EXPECT_THROW(replicate_pairings(basis(), 1, 10, bad), std::invalid_argument);
}
