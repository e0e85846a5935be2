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

#include "gffdisk/poincare.hpp"

#include <stdexcept>
#include <string>

namespace gffdisk {

namespace {

constexpr double kMaxRadius = 1.0 - kBoundaryMargin;

std::string fmt_point(double x, double y) {
    return "(" + std::to_string(x) + ", " + std::to_string(y) + ")";
}

}  // namespace

bool inside_disk(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag()) && std::abs(z) < kMaxRadius;
}

DiskPoint::DiskPoint(double x, double y) : x_(x), y_(y) {
    if (!inside_disk({x, y}))
        throw std::domain_error("point " + fmt_point(x, y) + " is not inside the unit disk");
}

MobiusInvolution::MobiusInvolution(DiskPoint pole) : pole_(pole) {
    if (!pole_.is_origin()) {
        const Complex z0 = pole_.z();
        rotation_ = z0 / std::conj(z0);
    }
}

Complex MobiusInvolution::apply(Complex z) const {
    if (is_identity()) return z;
    const Complex z0 = pole_.z();
    const Complex zb = std::conj(z);
    return rotation_ * (zb - std::conj(z0)) / (z0 * zb - 1.0);
}

DiskPoint MobiusInvolution::apply(const DiskPoint& z) const {
    return DiskPoint(apply(z.z()));
}

MobiusInvolution mobius_to_origin(const DiskPoint& z0) { return MobiusInvolution(z0); }

double tanh_distance(const DiskPoint& z, const DiskPoint& w) {
    if (z == w) return 0.0;
    return std::abs(MobiusInvolution(z).apply(w.z()));
}

double hyp_distance(const DiskPoint& z, const DiskPoint& w) {
    return artanh(tanh_distance(z, w));
}

double rho_to_r(double rho) {
    if (!(rho > 0.0) || !std::isfinite(rho))
        throw std::domain_error("hyperbolic radius must be positive and finite");
    return std::tanh(rho);
}

double r_to_rho(double r) {
    if (!(r > 0.0 && r < 1.0))
        throw std::domain_error("Euclidean radius must lie in (0, 1)");
    return artanh(r);
}

double time_to_rho(double t) {
    if (!(t > 0.0) || !std::isfinite(t))
        throw std::domain_error("Brownian time must be positive and finite");
    return artanh(std::exp(-t));
}

EuclideanCircle circumcircle(Complex a, Complex b, Complex c) {
    const Complex ab = b - a;
    const Complex ac = c - a;
    const double d = 2.0 * (ab.real() * ac.imag() - ab.imag() * ac.real());
    if (d == 0.0) throw std::domain_error("circumcircle of collinear points");
    const double nab = std::norm(ab);
    const double nac = std::norm(ac);
    const Complex offset((ac.imag() * nab - ab.imag() * nac) / d,
                         (ab.real() * nac - ac.real() * nab) / d);
    return {a + offset, std::abs(offset)};
}

EuclideanCircle map_circle(const MobiusInvolution& phi, const EuclideanCircle& c) {
    if (phi.is_identity()) return c;
    // Mobius maps send circles to circles; three images pin the result.
    const Complex p1 = phi.apply(c.center + Complex(c.radius, 0.0));
    const Complex p2 = phi.apply(c.center + Complex(0.0, c.radius));
    const Complex p3 = phi.apply(c.center - Complex(c.radius, 0.0));
    return circumcircle(p1, p2, p3);
}

HyperbolicCircle::HyperbolicCircle(DiskPoint center, double rho)
    : center_(center), rho_(rho), r_(rho_to_r(rho)), phi_(center) {
    if (center_.is_origin()) {
        const EuclideanCircle c = circumcircle({r_, 0.0}, {0.0, r_}, {-r_, 0.0});
        euclid_center_ = DiskPoint(c.center);
        euclid_radius_ = c.radius;
        return;
    }
    // The diameter through 0 and z0 is a geodesic fixed setwise by Phi, so
    // the images of +-r along it are diametrically opposite on the image.
    const Complex u = center_.z() / center_.abs();
    const Complex a = phi_.apply(r_ * u);
    const Complex b = phi_.apply(-r_ * u);
    euclid_center_ = DiskPoint(0.5 * (a + b));
    euclid_radius_ = 0.5 * std::abs(a - b);
}

Complex HyperbolicCircle::point_at_raw(double t) const {
    return phi_.apply(std::polar(r_, t));
}

DiskPoint HyperbolicCircle::point_at(double t) const { return DiskPoint(point_at_raw(t)); }

}  // namespace gffdisk
