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

#include <optional>
#include <string>

#include "gffdisk/numerics.hpp"
#include "gffdisk/poincare.hpp"
#include "gffdisk/spectral.hpp"

namespace gffdisk {

enum class TestFunctionKind { kPolynomialBump, kHarmonicPoly, kBasisMode };

/// Functions with closed-form gradient and Laplacian used by the identity
/// checks:
///  - polynomial bump (s^2 - |z - c|^2)^3 on |z - c| < s, 0 elsewhere. C^2,
///    compactly supported, closed support disk inside the unit disk;
///  - harmonic polynomial Re(z^m) or Im(z^m);
///  - a spectral basis mode.
class TestFunction {
public:
    static TestFunction bump(Complex center, double support_radius);
    static TestFunction harmonic(int degree, bool imaginary = false);
    static TestFunction mode(const SpectralMode& m);

    TestFunctionKind kind() const { return kind_; }

    double value(Complex z) const;
    Vec2 gradient(Complex z) const;
    double laplacian(Complex z) const;

    /// Support disk for bumps.
    std::optional<EuclideanCircle> support() const;
    ScalarField as_field() const;
    std::string describe() const;

private:
    TestFunctionKind kind_ = TestFunctionKind::kHarmonicPoly;
    Complex center_;
    double radius_ = 0.0;
    int degree_ = 0;
    bool imaginary_ = false;
    SpectralMode mode_;
};

}  // namespace gffdisk
