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

// Reference computations that share no code with the library.

#include <cmath>
#include <complex>
#include <functional>

namespace oracle {

// J_n(x) by its ascending series in long double; good to ~1e-15 for x < 15.
inline double bessel_series(int n, double x) {
    const long double h = 0.5L * x;
    long double term = 1.0L;
    for (int i = 1; i <= n; ++i) term *= h / i;
    long double sum = term;
    for (int m = 1; m < 200; ++m) {
        term *= -(h * h) / (static_cast<long double>(m) * (m + n));
        sum += term;
        if (std::fabs(static_cast<double>(term)) < 1e-22) break;
    }
    return static_cast<double>(sum);
}

inline double bisect(const std::function<double(double)>& f, double lo, double hi) {
    double flo = f(lo);
    for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// k-th positive zero of J_n: scan for sign changes with step 0.05, then
// bisect. `j` evaluates J_n.
inline double bessel_zero(const std::function<double(double)>& j, int n, int k) {
    double x = n == 0 ? 0.05 : n + 0.05;
    double prev = j(x);
    int found = 0;
    for (;;) {
        const double next_x = x + 0.05;
        const double next = j(next_x);
        if ((prev < 0) != (next < 0) && ++found == k) return bisect(j, x, next_x);
        x = next_x;
        prev = next;
    }
}

// The disk involution written directly from its defining formula.
inline std::complex<double> involution(std::complex<double> z0, std::complex<double> z) {
    if (z0 == 0.0) return z;
    return (z0 / std::conj(z0)) * (std::conj(z) - std::conj(z0)) / (z0 * std::conj(z) - 1.0);
}

inline double hyperbolic_distance(std::complex<double> a, std::complex<double> b) {
    const double t = std::abs(involution(a, b));
    return 0.5 * std::log((1.0 + t) / (1.0 - t));
}

}  // namespace oracle
