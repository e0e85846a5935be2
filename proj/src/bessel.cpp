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

#include "gffdisk/bessel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gffdisk {

namespace {

constexpr double kSeriesLimit = 12.0;

void check_args(int n, double x) {
    if (n < 0 || n > kMaxBesselOrder)
        throw std::domain_error("bessel_j: unsupported order " + std::to_string(n));
    if (!(x >= 0.0) || x > kMaxBesselArgument)
        throw std::domain_error("bessel_j: argument out of range: " + std::to_string(x));
}

double series(int n, double x) {
    const long double half = 0.5L * x;
    const long double q = half * half;
    long double term = 1.0L;
    for (int i = 1; i <= n; ++i) term *= half / i;
    long double sum = term;
    for (int k = 1; k < 200; ++k) {
        term *= -q / (static_cast<long double>(k) * (k + n));
        sum += term;
        if (std::fabs(term) <= 1e-21L * std::fabs(sum)) break;
    }
    return static_cast<double>(sum);
}

// Backward recurrence from an order well above max(n, x), normalised with
// J_0 + 2 (J_2 + J_4 + ...) = 1.
double miller(int n, double x) {
    const double top = std::max(static_cast<double>(n), x);
    int m = static_cast<int>(top + 30.0 + std::sqrt(60.0 * top));
    m += m % 2;
    const double two_over_x = 2.0 / x;
    double jp = 0.0;  // J_{j+1}
    double jc = 1.0;  // J_j, unnormalised
    double even_sum = 0.0;
    double result = 0.0;
    for (int j = m; j > 0; --j) {
        const double jm = j * two_over_x * jc - jp;
        jp = jc;
        jc = jm;
        if (std::fabs(jc) > 1e250) {
            jc *= 1e-250;
            jp *= 1e-250;
            even_sum *= 1e-250;
            result *= 1e-250;
        }
        if (j - 1 == n) result = jc;
        if ((j - 1) % 2 == 0 && j - 1 > 0) even_sum += jc;
    }
    return result / (jc + 2.0 * even_sum);
}

double mcmahon(int n, int k) {
    const double beta = (k + 0.5 * n - 0.25) * std::numbers::pi;
    const double mu = 4.0 * n * n;
    const double e = 8.0 * beta;
    return beta - (mu - 1.0) / e - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * e * e * e);
}

double refine_zero(int n, double lo, double hi, double guess) {
    double flo = bessel_j(n, lo);
    double x = (guess > lo && guess < hi) ? guess : 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        const double f = bessel_j(n, x);
        if (f == 0.0) return x;
        if ((f < 0.0) == (flo < 0.0)) {
            lo = x;
            flo = f;
        } else {
            hi = x;
        }
        const double df = bessel_j_derivative(n, x);
        double next = x - f / df;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::fabs(next - x) <= 1e-15 * x || hi - lo <= 4e-16 * x) return next;
        x = next;
    }
    return x;
}

}  // namespace

double bessel_j(int n, double x) {
    check_args(n, x);
    if (x == 0.0) return n == 0 ? 1.0 : 0.0;
    if (x <= kSeriesLimit) return series(n, x);
    return miller(n, x);
}

double bessel_j_derivative(int n, double x) {
    if (n == 0) return -bessel_j(1, x);
    return 0.5 * (bessel_j(n - 1, x) - bessel_j(n + 1, x));
}

std::vector<double> bessel_zeros(int n, int count) {
    if (n < 0 || n >= kMaxBesselOrder)
        throw std::domain_error("bessel_zeros: unsupported order " + std::to_string(n));
    if (count < 1) throw std::domain_error("bessel_zeros: need at least one zero");
    std::vector<double> zeros;
    zeros.reserve(count);
    // j_{n,1} > n, and consecutive zeros are more than 2.5 apart.
    constexpr double step = 0.5;
    double a = n == 0 ? step : static_cast<double>(n);
    double fa = bessel_j(n, a);
    while (static_cast<int>(zeros.size()) < count) {
        const double b = a + step;
        const double fb = bessel_j(n, b);
        if (fb == 0.0) {
            zeros.push_back(b);
            a = b + step;
            fa = bessel_j(n, a);
            continue;
        }
        if ((fa < 0.0) != (fb < 0.0)) {
            const int k = static_cast<int>(zeros.size()) + 1;
            zeros.push_back(refine_zero(n, a, b, mcmahon(n, k)));
        }
        a = b;
        fa = fb;
    }
    return zeros;
}

double bessel_zero(int n, int k) {
    if (k < 1) throw std::domain_error("bessel_zero: k must be >= 1");
    return bessel_zeros(n, k).back();
}

}  // namespace gffdisk
