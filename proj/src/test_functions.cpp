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

#include "gffdisk/test_functions.hpp"

#include <sstream>
#include <stdexcept>

namespace gffdisk {

namespace {

Complex ipow(Complex z, int m) {
    Complex p(1.0, 0.0);
    for (int i = 0; i < m; ++i) p *= z;
    return p;
}

}  // namespace

TestFunction TestFunction::bump(Complex center, double support_radius) {
    if (!(support_radius > 0.0) || std::abs(center) + support_radius >= 1.0)
        throw std::invalid_argument("bump support must be a closed disk inside the unit disk");
    TestFunction f;
    f.kind_ = TestFunctionKind::kPolynomialBump;
    f.center_ = center;
    f.radius_ = support_radius;
    return f;
}

TestFunction TestFunction::harmonic(int degree, bool imaginary) {
    if (degree < 0) throw std::invalid_argument("harmonic polynomial degree must be >= 0");
    TestFunction f;
    f.kind_ = TestFunctionKind::kHarmonicPoly;
    f.degree_ = degree;
    f.imaginary_ = imaginary;
    return f;
}

TestFunction TestFunction::mode(const SpectralMode& m) {
    TestFunction f;
    f.kind_ = TestFunctionKind::kBasisMode;
    f.mode_ = m;
    return f;
}

double TestFunction::value(Complex z) const {
    switch (kind_) {
        case TestFunctionKind::kPolynomialBump: {
            const double u = radius_ * radius_ - std::norm(z - center_);
            return u > 0.0 ? u * u * u : 0.0;
        }
        case TestFunctionKind::kHarmonicPoly: {
            const Complex p = ipow(z, degree_);
            return imaginary_ ? p.imag() : p.real();
        }
        case TestFunctionKind::kBasisMode: return mode_eval_raw(mode_, z);
    }
    return 0.0;
}

Vec2 TestFunction::gradient(Complex z) const {
    switch (kind_) {
        case TestFunctionKind::kPolynomialBump: {
            const Complex w = z - center_;
            const double u = radius_ * radius_ - std::norm(w);
            if (u <= 0.0) return {};
            const double s = -6.0 * u * u;
            return {s * w.real(), s * w.imag()};
        }
        case TestFunctionKind::kHarmonicPoly: {
            if (degree_ == 0) return {};
            // For holomorphic g = z^m: grad Re g = (Re g', -Im g'),
            // grad Im g = (Im g', Re g').
            const Complex d = static_cast<double>(degree_) * ipow(z, degree_ - 1);
            return imaginary_ ? Vec2{d.imag(), d.real()} : Vec2{d.real(), -d.imag()};
        }
        case TestFunctionKind::kBasisMode: return mode_gradient(mode_, z);
    }
    return {};
}

double TestFunction::laplacian(Complex z) const {
    switch (kind_) {
        case TestFunctionKind::kPolynomialBump: {
            const double d2 = std::norm(z - center_);
            const double u = radius_ * radius_ - d2;
            return u > 0.0 ? -12.0 * u * u + 24.0 * u * d2 : 0.0;
        }
        case TestFunctionKind::kHarmonicPoly: return 0.0;
        case TestFunctionKind::kBasisMode: return -mode_.eigenvalue * mode_eval_raw(mode_, z);
    }
    return 0.0;
}

std::optional<EuclideanCircle> TestFunction::support() const {
    if (kind_ == TestFunctionKind::kPolynomialBump) return EuclideanCircle{center_, radius_};
    return std::nullopt;
}

ScalarField TestFunction::as_field() const {
    return {[f = *this](Complex z) { return f.value(z); },
            [f = *this](Complex z) { return f.gradient(z); }};
}

std::string TestFunction::describe() const {
    std::ostringstream os;
    os.precision(6);
    switch (kind_) {
        case TestFunctionKind::kPolynomialBump:
            os << "bump(c=" << center_.real() << (center_.imag() < 0 ? "" : "+") << center_.imag()
               << "i, s=" << radius_ << ")";
            break;
        case TestFunctionKind::kHarmonicPoly:
            os << (imaginary_ ? "Im" : "Re") << "(z^" << degree_ << ")";
            break;
        case TestFunctionKind::kBasisMode:
            os << "mode(n=" << mode_.n << "," << parity_name(mode_.parity) << ",k=" << mode_.k << ")";
            break;
    }
    return os.str();
}

}  // namespace gffdisk
