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

#include "gffdisk/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "gffdisk/kernels.hpp"
#include "gffdisk/numerics.hpp"
#include "gffdisk/parallel.hpp"

namespace gffdisk {

namespace {

std::string format_detail(std::initializer_list<std::pair<const char*, double>> items) {
    std::ostringstream os;
    os.precision(17);
    bool first = true;
    for (const auto& [k, v] : items) {
        if (!first) os << ", ";
        os << k << "=" << v;
        first = false;
    }
    return os.str();
}

double radial_integral(const std::function<double(Complex)>& f, Complex origin, double theta,
                       double a, double b, const GaussLegendre& gl, bool cluster) {
    if (!(b > a)) return 0.0;
    const Complex dir = std::polar(1.0, theta);
    CompensatedSum s;
    if (cluster && a == 0.0) {
        for (int i = 0; i < gl.size(); ++i) {
            const double u = 0.5 * (gl.nodes[i] + 1.0);
            const double rho = b * u * u;
            s.add(0.5 * gl.weights[i] * 2.0 * b * b * u * u * u * f(origin + rho * dir));
        }
    } else {
        const double half = 0.5 * (b - a);
        for (int i = 0; i < gl.size(); ++i) {
            const double rho = a + half * (gl.nodes[i] + 1.0);
            s.add(half * gl.weights[i] * rho * f(origin + rho * dir));
        }
    }
    return s.value();
}

// Sample moments with a fixed summation order.
struct Moments {
    double mean = 0.0;
    double var = 0.0;  // unbiased
    double skew = 0.0;
    double excess_kurtosis = 0.0;
};

Moments moments(std::span<const double> x) {
    const double n = static_cast<double>(x.size());
    Moments m;
    m.mean = compensated_sum(x) / n;
    CompensatedSum s2, s3, s4;
    for (double v : x) {
        const double d = v - m.mean;
        s2.add(d * d);
        s3.add(d * d * d);
        s4.add(d * d * d * d);
    }
    const double m2 = s2.value() / n;
    m.var = s2.value() / (n - 1.0);
    m.skew = (s3.value() / n) / std::pow(m2, 1.5);
    m.excess_kurtosis = (s4.value() / n) / (m2 * m2) - 3.0;
    return m;
}

// Sample covariance of (x, y) and the standard error of that estimate from
// the spread of the centred products.
std::pair<double, double> covariance_with_error(std::span<const double> x,
                                                std::span<const double> y) {
    const double n = static_cast<double>(x.size());
    const double mx = compensated_sum(x) / n;
    const double my = compensated_sum(y) / n;
    std::vector<double> prod(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) prod[i] = (x[i] - mx) * (y[i] - my);
    const double cov = compensated_sum(prod) / (n - 1.0);
    const double pm = compensated_sum(prod) / n;
    CompensatedSum ss;
    for (double p : prod) ss.add((p - pm) * (p - pm));
    const double se = std::sqrt(ss.value() / (n - 1.0) / n);
    return {cov, se};
}

double correlation(std::span<const double> x, std::span<const double> y) {
    const auto [cxy, se] = covariance_with_error(x, y);
    const double vx = covariance_with_error(x, x).first;
    const double vy = covariance_with_error(y, y).first;
    return cxy / std::sqrt(vx * vy);
}

std::string fmt_time(double t) {
    std::ostringstream os;
    os << t;
    return os.str();
}

}  // namespace

std::string_view check_kind_name(CheckKind k) {
    return k == CheckKind::kDeterministic ? "deterministic" : "statistical";
}

CheckResult make_check(std::string name, CheckKind kind, double value, double reference,
                       double tolerance, std::string detail) {
    CheckResult r;
    r.name = std::move(name);
    r.kind = kind;
    r.value = value;
    r.reference = reference;
    r.tolerance = tolerance;
    r.passed = std::isfinite(value) && std::fabs(value - reference) <= tolerance;
    r.detail = std::move(detail);
    return r;
}

double integrate_polar_region(const PolarRegion& region, int radial_nodes, int angular_nodes,
                              const std::function<double(Complex)>& f, bool cluster_origin) {
    if (radial_nodes < 1 || angular_nodes < 1)
        throw std::invalid_argument("integrate_polar_region needs positive node counts");
    const GaussLegendre gl(radial_nodes);
    const Complex o = region.origin;
    CompensatedSum total;

    if (!region.clip) {
        for (int k = 0; k < angular_nodes; ++k) {
            const double theta = kTwoPi * k / angular_nodes;
            total.add(kTwoPi / angular_nodes *
                      radial_integral(f, o, theta, region.rho_min, region.rho_max, gl,
                                      cluster_origin));
        }
        return total.value();
    }

    const Complex v = o - region.clip->center;
    const double s = region.clip->radius;
    const double v2 = std::norm(v);
    auto chord = [&](double theta) -> std::pair<double, double> {
        const double b = v.real() * std::cos(theta) + v.imag() * std::sin(theta);
        const double disc = b * b - v2 + s * s;
        if (disc <= 0.0) return {0.0, 0.0};
        const double root = std::sqrt(disc);
        return {-b - root, -b + root};
    };

    if (std::sqrt(v2) < s) {
        for (int k = 0; k < angular_nodes; ++k) {
            const double theta = kTwoPi * k / angular_nodes;
            const double hi = std::min(region.rho_max, chord(theta).second);
            total.add(kTwoPi / angular_nodes *
                      radial_integral(f, o, theta, region.rho_min, hi, gl, cluster_origin));
        }
        return total.value();
    }

    const Complex to_center = region.clip->center - o;
    const double psi = std::arg(to_center);
    const double half = std::asin(std::min(1.0, s / std::abs(to_center)));
    const GaussLegendre ga(angular_nodes);
    for (int k = 0; k < angular_nodes; ++k) {
        const double u = 0.5 * std::numbers::pi * ga.nodes[k];
        const double theta = psi + half * std::sin(u);
        const double jac = 0.5 * std::numbers::pi * half * std::cos(u);
        const auto [lo, hi] = chord(theta);
        total.add(ga.weights[k] * jac *
                  radial_integral(f, o, theta, std::max(region.rho_min, lo),
                                  std::min(region.rho_max, hi), gl, cluster_origin));
    }
    return total.value();
}

double circle_integral(double radius, const std::optional<EuclideanCircle>& clip, int nodes,
                       const std::function<double(double)>& g) {
    auto full = [&] {
        CompensatedSum s;
        for (int k = 0; k < nodes; ++k) s.add(g(kTwoPi * k / nodes));
        return kTwoPi * s.value() / nodes;
    };
    if (!clip) return full();
    const double d = std::abs(clip->center);
    const double s = clip->radius;
    if (d + radius <= s) return full();
    if (radius + s <= d || radius >= d + s || d == 0.0) return 0.0;
    const double half = std::acos(
        std::clamp((radius * radius + d * d - s * s) / (2.0 * radius * d), -1.0, 1.0));
    const double phi = std::arg(clip->center);
    const GaussLegendre gl(nodes);
    CompensatedSum sum;
    for (int k = 0; k < nodes; ++k) sum.add(half * gl.weights[k] * g(phi + half * gl.nodes[k]));
    return sum.value();
}

CheckResult check_annulus_identity(const TestFunction& f, double r, double big_r,
                                   const QuadratureSpec& q, double tolerance) {
    if (!(r > 0.0 && r < big_r && big_r < 1.0))
        throw std::invalid_argument("annulus radii must satisfy 0 < r < R < 1");
    const auto clip = f.support();
    const int circle_nodes = std::max(q.angular_nodes, 64);

    auto circle_mean = [&](double radius) {
        return circle_integral(radius, clip, circle_nodes,
                               [&](double t) { return f.value(std::polar(radius, t)); }) /
               kTwoPi;
    };
    auto flux = [&](double radius) {
        return circle_integral(radius, clip, circle_nodes, [&](double t) {
            const Vec2 g = f.gradient(std::polar(radius, t));
            return (g.x * std::cos(t) + g.y * std::sin(t)) * radius;
        });
    };

    const double lhs = circle_mean(r) - circle_mean(big_r);
    const PolarRegion annulus{{0.0, 0.0}, r, big_r, clip};
    const double grad_form =
        integrate_polar_region(annulus, q.radial_nodes, q.angular_nodes,
                               [&](Complex z) {
                                   return f.gradient(z).dot(grad_green_euclidean(z));
                               }) /
        kTwoPi;
    const double interior =
        integrate_polar_region(annulus, q.radial_nodes, q.angular_nodes,
                               [&](Complex z) { return green_euclidean(z) * f.laplacian(z); }) /
        kTwoPi;
    const double flux_form =
        std::log(r) / kTwoPi * flux(r) - std::log(big_r) / kTwoPi * flux(big_r) - interior;

    const double ref =
        std::fabs(lhs - grad_form) >= std::fabs(lhs - flux_form) ? grad_form : flux_form;
    std::ostringstream name;
    name << "annulus_identity " << f.describe() << " r=" << r << " R=" << big_r;
    return make_check(name.str(), CheckKind::kDeterministic, lhs, ref, tolerance,
                      format_detail({{"mean_difference", lhs},
                                     {"gradient_form", grad_form},
                                     {"flux_form", flux_form}}));
}

CheckResult check_mean_value(const TestFunction& f, const DiskPoint& z0, double rho, int n_nodes,
                             double tolerance) {
    if (f.kind() != TestFunctionKind::kHarmonicPoly)
        throw std::invalid_argument("check_mean_value needs a harmonic test function");
    const double mean =
        circle_avg_fn([&](const DiskPoint& z) { return f.value(z.z()); }, z0, rho, n_nodes);
    std::ostringstream name;
    name << "mean_value " << f.describe() << " z0=(" << z0.x() << "," << z0.y() << ") rho=" << rho;
    return make_check(name.str(), CheckKind::kDeterministic, mean, f.value(z0.z()), tolerance);
}

namespace {

double bump_peak(const TestFunction& f) {
    const auto supp = f.support();
    if (!supp) throw std::invalid_argument("inversion checks need a polynomial bump");
    return std::pow(supp->radius, 6);
}

}  // namespace

CheckResult check_inversion(const TestFunction& f, const DiskPoint& z0, const QuadratureSpec& q) {
    const double peak = bump_peak(f);
    const PolarRegion region{z0.z(), 0.0, 2.0, f.support()};
    const MobiusInvolution phi(z0);
    const double integral =
        -integrate_polar_region(region, q.radial_nodes, q.angular_nodes,
                                [&](Complex z) {
                                    const double t = std::abs(phi.apply(z));
                                    return -std::log(t) * f.laplacian(z);
                                },
                                true) /
        kTwoPi;
    std::ostringstream name;
    name << "inversion_disk " << f.describe() << " z0=(" << z0.x() << "," << z0.y() << ")";
    return make_check(name.str(), CheckKind::kDeterministic, integral, f.value(z0.z()),
                      1e-5 * peak, format_detail({{"peak", peak}}));
}

CheckResult check_inversion_euclidean(const TestFunction& f, const QuadratureSpec& q) {
    const double peak = bump_peak(f);
    const PolarRegion region{{0.0, 0.0}, 0.0, 2.0, f.support()};
    const double integral =
        -integrate_polar_region(region, q.radial_nodes, q.angular_nodes,
                                [&](Complex z) { return green_euclidean(z) * f.laplacian(z); },
                                true) /
        kTwoPi;
    return make_check("inversion_plane " + f.describe(), CheckKind::kDeterministic, integral,
                      f.value({0.0, 0.0}), 1e-5 * peak, format_detail({{"peak", peak}}));
}

CheckResult check_isometry_invariance(const TestFunction& u, const TestFunction& v,
                                      const DiskPoint& z0, const QuadratureSpec& q,
                                      double tolerance) {
    const auto su = u.support();
    const auto sv = v.support();
    if (!su || !sv) throw std::invalid_argument("isometry check needs compactly supported bumps");
    const MobiusInvolution phi(z0);

    auto dirichlet_on_support = [&](const EuclideanCircle& du, const EuclideanCircle& dv,
                                    const std::function<double(Complex)>& integrand) {
        const PolarRegion region{du.center, 0.0, du.radius, dv};
        return integrate_polar_region(region, q.radial_nodes, q.angular_nodes, integrand) / kTwoPi;
    };

    const double plain = dirichlet_on_support(
        *su, *sv, [&](Complex z) { return u.gradient(z).dot(v.gradient(z)); });

    double moved = plain;
    if (!phi.is_identity()) {
        constexpr double h = 1e-6;
        auto composed_grad = [&](const TestFunction& f, Complex z) {
            const Complex dx = (phi.apply(z + Complex(h, 0.0)) - phi.apply(z - Complex(h, 0.0))) /
                               (2.0 * h);
            const Complex dy = (phi.apply(z + Complex(0.0, h)) - phi.apply(z - Complex(0.0, h))) /
                               (2.0 * h);
            const Vec2 g = f.gradient(phi.apply(z));
            return Vec2{g.x * dx.real() + g.y * dx.imag(), g.x * dy.real() + g.y * dy.imag()};
        };
        moved = dirichlet_on_support(map_circle(phi, *su), map_circle(phi, *sv), [&](Complex z) {
            return composed_grad(u, z).dot(composed_grad(v, z));
        });
    }
    std::ostringstream name;
    name << "isometry_invariance " << u.describe() << " " << v.describe() << " pole=(" << z0.x()
         << "," << z0.y() << ")";
    const double relative = plain != 0.0 ? std::fabs(moved - plain) / std::fabs(plain) : 0.0;
    return make_check(name.str(), CheckKind::kDeterministic, moved, plain, tolerance,
                      format_detail({{"relative_error", relative}}));
}

CheckResult mc_covariance(const CovarianceQuery& q, std::size_t n_replicates, std::uint64_t seed,
                          const SpectralBasis& basis, ModeAverageCache* cache) {
    if (n_replicates < 100) throw std::invalid_argument("mc_covariance needs >= 100 replicates");
    ModeAverageCache local;
    ModeAverageCache& c = cache ? *cache : local;
    const auto m1 = c.get(basis, q.z1, q.rho1);
    const auto m2 = c.get(basis, q.z2, q.rho2);
    const double truncated = truncated_covariance(*m1, *m2);
    const double exact = exact_cov(q);

    const std::vector<std::vector<double>> functionals{*m1, *m2};
    const Matrix pairs = replicate_pairings(basis, seed, n_replicates, functionals);
    std::vector<double> x(n_replicates), y(n_replicates);
    for (std::size_t i = 0; i < n_replicates; ++i) {
        x[i] = pairs(i, 0);
        y[i] = pairs(i, 1);
    }
    const auto [cov, se] = covariance_with_error(x, y);

    std::ostringstream name;
    name << "mc_covariance " << regime_name(q.regime()) << " (" << q.z1.x() << "," << q.z1.y()
         << ";" << q.rho1 << ") (" << q.z2.x() << "," << q.z2.y() << ";" << q.rho2 << ")";
    return make_check(name.str(), CheckKind::kStatistical, cov, truncated, 3.0 * se,
                      format_detail({{"standard_error", se},
                                     {"exact", exact},
                                     {"truncation_gap", std::fabs(truncated - exact)},
                                     {"replicates", static_cast<double>(n_replicates)}}));
}

std::vector<CheckResult> brownian_suite(const DiskPoint& z0, std::span<const double> times,
                                        std::size_t n_replicates, std::uint64_t seed,
                                        const SpectralBasis& basis, ModeAverageCache* cache) {
    if (n_replicates < 100) throw std::invalid_argument("brownian_suite needs >= 100 replicates");
    validate_times(times);
    ModeAverageCache local;
    ModeAverageCache& c = cache ? *cache : local;

    const std::size_t nt = times.size();
    std::vector<std::vector<double>> m;
    for (double t : times) m.push_back(*c.get(basis, z0, time_to_rho(t), brownian_nodes(t)));
    const Matrix paths = replicate_pairings(basis, seed, n_replicates, m);
    std::vector<std::vector<double>> b(nt, std::vector<double>(n_replicates));
    for (std::size_t i = 0; i < n_replicates; ++i)
        for (std::size_t k = 0; k < nt; ++k) b[k][i] = paths(i, k);

    std::vector<CheckResult> out;
    const double sqrt_n = std::sqrt(static_cast<double>(n_replicates));

    for (std::size_t a = 0; a < nt; ++a) {
        for (std::size_t k = a; k < nt; ++k) {
            const auto [cov, se] = covariance_with_error(b[a], b[k]);
            const double ref = truncated_covariance(m[a], m[k]);
            const double law = std::min(times[a], times[k]);
            out.push_back(make_check(
                "brownian_cov t=" + fmt_time(times[a]) + "," + fmt_time(times[k]),
                CheckKind::kStatistical, cov, ref, 3.0 * se,
                format_detail({{"standard_error", se},
                               {"min_s_t", law},
                               {"truncation_gap", std::fabs(ref - law)}})));
        }
    }

    // Increments from B_0 = 0.
    std::vector<std::vector<double>> inc(nt, std::vector<double>(n_replicates));
    std::vector<std::vector<double>> inc_m(nt, std::vector<double>(basis.size()));
    for (std::size_t k = 0; k < nt; ++k) {
        for (std::size_t i = 0; i < n_replicates; ++i)
            inc[k][i] = b[k][i] - (k > 0 ? b[k - 1][i] : 0.0);
        for (std::size_t j = 0; j < basis.size(); ++j)
            inc_m[k][j] = m[k][j] - (k > 0 ? m[k - 1][j] : 0.0);
    }
    for (std::size_t k = 0; k < nt; ++k) {
        const double s = k > 0 ? times[k - 1] : 0.0;
        const std::string label = fmt_time(s) + "->" + fmt_time(times[k]);
        const auto [var, se] = covariance_with_error(inc[k], inc[k]);
        const double ref = truncated_covariance(inc_m[k], inc_m[k]);
        out.push_back(make_check("brownian_increment_variance " + label, CheckKind::kStatistical,
                                 var, ref, 3.0 * se,
                                 format_detail({{"standard_error", se},
                                                {"t_minus_s", times[k] - s},
                                                {"truncation_gap", std::fabs(ref - (times[k] - s))}})));
        const Moments mo = moments(inc[k]);
        const double n = static_cast<double>(n_replicates);
        out.push_back(make_check("brownian_increment_skewness " + label, CheckKind::kStatistical,
                                 mo.skew, 0.0, 4.0 * std::sqrt(6.0 / n)));
        out.push_back(make_check("brownian_increment_kurtosis " + label, CheckKind::kStatistical,
                                 mo.excess_kurtosis, 0.0, 4.0 * std::sqrt(24.0 / n)));
    }
    for (std::size_t k = 1; k < nt; ++k) {
        const double ref = truncated_covariance(inc_m[k - 1], inc_m[k]) /
                           std::sqrt(truncated_covariance(inc_m[k - 1], inc_m[k - 1]) *
                                     truncated_covariance(inc_m[k], inc_m[k]));
        const double corr = correlation(inc[k - 1], inc[k]);
        out.push_back(make_check("brownian_increment_correlation " + fmt_time(times[k - 1]),
                                 CheckKind::kStatistical, corr, ref, 3.0 / sqrt_n,
                                 format_detail({{"independent_law", 0.0},
                                                {"truncation_gap", std::fabs(ref)}})));
    }
    return out;
}

}  // namespace gffdisk
