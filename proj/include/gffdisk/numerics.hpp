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

#include <cmath>
#include <complex>
#include <numbers>
#include <span>

namespace gffdisk {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
};

// Inverse hyperbolic tangent written as a difference of log1p terms so the
// result stays accurate as |x| approaches 1.
inline double artanh(double x) {
    return 0.5 * (std::log1p(x) - std::log1p(-x));
}

// Neumaier-compensated running sum. Adding the same terms in the same order
// always gives the same bits, which the parallel kernels rely on.
class CompensatedSum {
public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::fabs(sum_) >= std::fabs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline double compensated_sum(std::span<const double> values) {
    CompensatedSum s;
    for (double v : values) s.add(v);
    return s.value();
}

}  // namespace gffdisk
