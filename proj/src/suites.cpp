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

#include "gffdisk/suites.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <string>

#include "gffdisk/bessel.hpp"
#include "gffdisk/kernels.hpp"
#include "gffdisk/parallel.hpp"
#include "gffdisk/rng.hpp"

namespace gffdisk {

namespace {

// Deterministic uniform stream for randomised cases.
class CaseStream {
public:
    explicit CaseStream(std::uint64_t seed) : seed_(seed) {}
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(seed_, counter_++); }
    DiskPoint point(double max_radius) {
        const double r = max_radius * std::sqrt(uniform(0.0, 1.0));
        return DiskPoint(std::polar(r, uniform(0.0, kTwoPi)));
    }
    // A point at hyperbolic distance d from `from`.
    DiskPoint at_distance(const DiskPoint& from, double d) {
        const Complex w = std::polar(std::tanh(d), uniform(0.0, kTwoPi));
        return DiskPoint(MobiusInvolution(from).apply(w));
    }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

std::string describe_query(const CovarianceQuery& q) {
    std::ostringstream os;
    os.precision(17);
    os << "z1=(" << q.z1.x() << "," << q.z1.y() << ") rho1=" << q.rho1 << " z2=(" << q.z2.x() << ","
       << q.z2.y() << ") rho2=" << q.rho2;
    return os.str();
}

CovarianceQuery random_query(CaseStream& rs, Regime regime, double rho_lo, double rho_hi) {
    const DiskPoint z1 = rs.point(0.8);
    const double rho1 = rs.uniform(rho_lo, rho_hi);
    double rho2 = rs.uniform(rho_lo, rho_hi);
    double d = 0.0;
    switch (regime) {
        case Regime::kNested: d = std::fabs(rho2 - rho1) * rs.uniform(0.0, 1.0); break;
        case Regime::kDisjoint: d = rho1 + rho2 + rs.uniform(0.0, 2.0); break;
        case Regime::kOverlapping: {
            const double lo = std::fabs(rho2 - rho1);
            d = lo + (rho1 + rho2 - lo) * rs.uniform(0.01, 0.99);
            break;
        }
    }
    return {z1, rho1, d == 0.0 ? z1 : rs.at_distance(z1, d), rho2};
}

struct WorstCase {
    double error = -1.0;
    std::string where;

    void update(double e, const std::string& label) {
        if (!(e <= error)) {
            error = e;
            where = label;
        }
    }
};

}  // namespace

CheckResult check_variance_law(std::uint64_t seed, int count) {
    CaseStream rs(seed);
    WorstCase worst;
    for (int i = 0; i < count; ++i) {
        const DiskPoint z = rs.point(0.9);
        const double rho = rs.uniform(0.1, 3.0);
        const CovarianceQuery q{z, rho, z, rho};
        worst.update(std::fabs(exact_cov(q) + std::log(std::tanh(rho))), describe_query(q));
    }
    return make_check("variance_law", CheckKind::kDeterministic, worst.error, 0.0, 1e-9,
                      "cases=" + std::to_string(count) + " worst: " + worst.where);
}

CheckResult check_nested_covariance(std::uint64_t seed, int count) {
    CaseStream rs(seed);
    WorstCase worst;
    for (int i = 0; i < count; ++i) {
        const CovarianceQuery q = random_query(rs, Regime::kNested, 0.1, 3.0);
        worst.update(std::fabs(exact_cov(q) - closed_cov(q)), describe_query(q));
    }
    return make_check("nested_covariance", CheckKind::kDeterministic, worst.error, 0.0, 1e-9,
                      "cases=" + std::to_string(count) + " worst: " + worst.where);
}

CheckResult check_disjoint_covariance(std::uint64_t seed, int count) {
    CaseStream rs(seed);
    WorstCase worst;
    for (int i = 0; i < count; ++i) {
        const CovarianceQuery q = random_query(rs, Regime::kDisjoint, 0.1, 1.5);
        worst.update(std::fabs(exact_cov(q) - green_disk(q.z1, q.z2)), describe_query(q));
    }
    return make_check("disjoint_covariance", CheckKind::kDeterministic, worst.error, 0.0, 1e-9,
                      "cases=" + std::to_string(count) + " worst: " + worst.where);
}

CheckResult check_increment_bound(std::uint64_t seed, int count) {
    CaseStream rs(seed);
    double worst_excess = -std::numeric_limits<double>::infinity();
    std::string where;
    std::map<Regime, int> seen;
    for (int i = 0; i < count; ++i) {
        const Regime target = static_cast<Regime>(i % 3);
        const CovarianceQuery q = random_query(rs, target, 0.1, 3.0);
        ++seen[q.regime()];
        const double second_moment = exact_cov({q.z1, q.rho1, q.z1, q.rho1}) +
                                     exact_cov({q.z2, q.rho2, q.z2, q.rho2}) - 2.0 * exact_cov(q);
        const double excess = second_moment - mean_square_increment_bound(q);
        if (excess > worst_excess) {
            worst_excess = excess;
            where = describe_query(q);
        }
    }
    std::ostringstream detail;
    detail.precision(17);
    detail << "cases=" << count << " nested=" << seen[Regime::kNested]
           << " disjoint=" << seen[Regime::kDisjoint]
           << " overlapping=" << seen[Regime::kOverlapping] << " max(E-bound)=" << worst_excess
           << " at " << where;
    return make_check("increment_bound", CheckKind::kDeterministic, std::max(0.0, worst_excess), 0.0,
                      1e-9, detail.str());
}

CheckResult check_mean_value_random(std::uint64_t seed, int count) {
    CaseStream rs(seed);
    WorstCase worst;
    int cases = 0;
    for (int i = 0; i < count; ++i) {
        const DiskPoint z0 = rs.point(0.9);
        const double rho = rs.uniform(0.1, 3.0);
        for (int degree = 0; degree <= 6; ++degree) {
            for (bool imaginary : {false, true}) {
                if (degree == 0 && imaginary) continue;
                const CheckResult r =
                    check_mean_value(TestFunction::harmonic(degree, imaginary), z0, rho);
                worst.update(std::fabs(r.value - r.reference), r.name);
                ++cases;
            }
        }
    }
    return make_check("mean_value", CheckKind::kDeterministic, worst.error, 0.0, 1e-9,
                      "cases=" + std::to_string(cases) + " worst: " + worst.where);
}

QuadratureSpec singular_quadrature(const QuadratureSpec& configured) {
    return {std::max(128, configured.radial_nodes), std::max(256, configured.angular_nodes)};
}

QuadratureSpec fine_quadrature(const QuadratureSpec& configured) {
    return {std::max(64, configured.radial_nodes), std::max(1024, configured.angular_nodes)};
}

std::vector<CheckResult> inversion_checks(const QuadratureSpec& q) {
    const TestFunction bump = TestFunction::bump({0.3, 0.2}, 0.4);
    const TestFunction centred = TestFunction::bump({0.05, -0.1}, 0.5);
    return {
        check_inversion(bump, DiskPoint(0.3, 0.2), q),
        check_inversion(bump, DiskPoint(0.4, 0.05), q),
        check_inversion(bump, DiskPoint(-0.5, -0.3), q),
        check_inversion(centred, DiskPoint(0.0, 0.0), q),
        check_inversion_euclidean(centred, q),
        check_inversion_euclidean(TestFunction::bump({0.0, 0.0}, 0.6), q),
    };
}

std::vector<CheckResult> annulus_checks(const QuadratureSpec& q) {
    struct Case {
        TestFunction f;
        double r;
        double big_r;
    };
    const std::vector<Case> cases{
        {TestFunction::harmonic(2), 0.3, 0.7},
        {TestFunction::harmonic(3, true), 0.2, 0.9},
        {TestFunction::bump({0.0, 0.0}, 0.5), 0.3, 0.7},
        {TestFunction::bump({0.0, 0.0}, 0.8), 0.2, 0.6},
        {TestFunction::bump({0.5, 0.0}, 0.1), 0.3, 0.8},
        {TestFunction::bump({0.1, 0.1}, 0.85), 0.2, 0.6},
        {TestFunction::bump({0.3, 0.0}, 0.5), 0.1, 0.5},
        {TestFunction::bump({0.0, 0.5}, 0.3), 0.4, 0.6},
        {TestFunction::bump({-0.4, 0.2}, 0.35), 0.15, 0.45},
        {TestFunction::bump({0.2, -0.3}, 0.6), 0.5, 0.9},
    };
    std::vector<CheckResult> out;
    for (const Case& c : cases) out.push_back(check_annulus_identity(c.f, c.r, c.big_r, q));
    return out;
}

std::vector<CheckResult> isometry_checks(std::uint64_t seed, const QuadratureSpec& q, int count) {
    CaseStream rs(seed);
    std::vector<CheckResult> out;
    for (int i = 0; i < count; ++i) {
        auto random_bump = [&] {
            const double s = rs.uniform(0.2, 0.45);
            const double c = rs.uniform(0.0, 0.9 - s);
            return TestFunction::bump(std::polar(c, rs.uniform(0.0, kTwoPi)), s);
        };
        const TestFunction u = random_bump();
        const TestFunction v = i % 3 == 0 ? u : random_bump();
        const DiskPoint pole = rs.point(0.7);
        out.push_back(check_isometry_invariance(u, v, pole, q));
    }
    return out;
}

CheckResult check_gram(const SpectralBasis& basis, std::size_t count, const QuadratureSpec& q) {
    count = std::min(count, basis.size());
    const Matrix g = gram_matrix(basis, count, q);
    double worst = 0.0;
    for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = 0; b < count; ++b)
            worst = std::max(worst, std::fabs(g(a, b) - (a == b ? 1.0 : 0.0)));
    return make_check("gram_orthonormality", CheckKind::kDeterministic, worst, 0.0, 1e-6,
                      "modes=" + std::to_string(count) + " quadrature=" +
                          std::to_string(q.radial_nodes) + "x" + std::to_string(q.angular_nodes));
}

CheckResult check_zero_residuals(const SpectralBasis& basis) {
    double worst = 0.0;
    for (const SpectralMode& m : basis.modes())
        worst = std::max(worst, std::fabs(bessel_j(m.n, m.zero)));
    return make_check("bessel_zero_residual", CheckKind::kDeterministic, worst, 0.0, 1e-12,
                      "modes=" + std::to_string(basis.size()));
}

std::vector<CheckResult> truncation_checks(const SpectralBasis& basis,
                                           const std::vector<double>& rhos) {
    std::vector<CheckResult> out;
    const DiskPoint origin;
    for (double rho : rhos) {
        const std::vector<double> m = mode_circle_averages(basis, origin, rho, kModeAverageNodes);
        const double exact = -std::log(std::tanh(rho));
        CompensatedSum partial;
        double prev = 0.0;
        double violation = 0.0;
        for (double mj : m) {
            partial.add(mj * mj);
            const double cur = partial.value();
            violation = std::max({violation, prev - cur, cur - exact});
            prev = cur;
        }
        std::ostringstream label;
        label << "rho=" << rho;
        std::ostringstream detail;
        detail.precision(17);
        detail << "truncated=" << prev << " exact=" << exact << " modes=" << basis.size();
        out.push_back(make_check("truncation_fraction " + label.str(), CheckKind::kDeterministic,
                                 prev / exact, 1.0, 0.02, detail.str()));
        out.push_back(make_check("truncation_monotone_bounded " + label.str(),
                                 CheckKind::kDeterministic, violation, 0.0, 1e-12, detail.str()));
    }
    return out;
}

std::vector<CovarianceQuery> statistical_queries() {
    return {
        {DiskPoint(0.0, 0.0), 0.5, DiskPoint(0.0, 0.0), 0.5},
        {DiskPoint(0.0, 0.0), 0.3, DiskPoint(0.0, 0.0), 1.0},
        {DiskPoint(0.2, 0.0), 0.4, DiskPoint(0.25, 0.05), 1.2},
        {DiskPoint(-0.5, 0.0), 0.4, DiskPoint(0.5, 0.0), 0.4},
        {DiskPoint(0.0, 0.3), 0.3, DiskPoint(-0.4, -0.2), 0.5},
        {DiskPoint(0.0, 0.0), 0.5, DiskPoint(0.1, 0.0), 0.5},
        {DiskPoint(0.5, 0.2), 0.7, DiskPoint(0.4, 0.0), 0.9},
        {DiskPoint(-0.3, -0.3), 0.6, DiskPoint(0.3, 0.3), 0.35},
        {DiskPoint(0.6, 0.0), 0.3, DiskPoint(0.6, 0.0), 0.8},
        {DiskPoint(0.1, -0.6), 0.45, DiskPoint(-0.2, 0.5), 0.45},
    };
}

std::vector<CheckResult> deterministic_suite(const SuiteConfig& config, const SpectralBasis& basis) {
    std::vector<CheckResult> out;
    const std::uint64_t s = config.seed;
    out.push_back(check_variance_law(derive_seed(s, 1)));
    out.push_back(check_nested_covariance(derive_seed(s, 2)));
    out.push_back(check_disjoint_covariance(derive_seed(s, 3)));
    out.push_back(check_increment_bound(derive_seed(s, 4)));
    out.push_back(check_mean_value_random(derive_seed(s, 5)));

    for (auto& r : inversion_checks(singular_quadrature(config.quad))) out.push_back(std::move(r));
    const QuadratureSpec fine = fine_quadrature(config.quad);
    for (auto& r : annulus_checks(fine)) out.push_back(std::move(r));
    for (auto& r : isometry_checks(derive_seed(s, 6), fine)) out.push_back(std::move(r));

    out.push_back(check_gram(basis, 100, config.quad));
    out.push_back(check_zero_residuals(basis));
    for (auto& r : truncation_checks(basis, {0.3, 0.5, 1.0})) out.push_back(std::move(r));
    return out;
}

namespace {

std::vector<CheckResult> statistical_group(std::size_t group, std::uint64_t seed,
                                           const SuiteConfig& config, const SpectralBasis& basis,
                                           ModeAverageCache* cache) {
    const auto queries = statistical_queries();
    if (group < queries.size())
        return {mc_covariance(queries[group], config.replicates, seed, basis, cache)};
    return brownian_suite(DiskPoint(), kBrownianTimes, config.replicates, seed, basis, cache);
}

}  // namespace

std::vector<CheckResult> statistical_suite(const SuiteConfig& config, const SpectralBasis& basis,
                                           ModeAverageCache* cache) {
    ModeAverageCache local;
    ModeAverageCache& c = cache ? *cache : local;
    std::vector<CheckResult> out;
    const std::size_t groups = statistical_queries().size() + 1;
    for (std::size_t g = 0; g < groups; ++g) {
        auto first = statistical_group(g, derive_seed(config.seed, 100 + g), config, basis, &c);
        const bool failed = std::any_of(first.begin(), first.end(),
                                        [](const CheckResult& r) { return !r.passed; });
        for (auto& r : first) out.push_back(std::move(r));
        if (!failed) continue;
        auto retry = statistical_group(g, derive_seed(config.seed, 1000 + g), config, basis, &c);
        for (auto& r : retry) {
            r.name += " [retry]";
            out.push_back(std::move(r));
        }
    }
    return out;
}

int suite_exit_code(const std::vector<CheckResult>& checks) {
    std::map<std::string, bool> retry_passed;
    for (const CheckResult& r : checks) {
        const std::string suffix = " [retry]";
        if (r.name.size() > suffix.size() &&
            r.name.compare(r.name.size() - suffix.size(), suffix.size(), suffix) == 0)
            retry_passed[r.name.substr(0, r.name.size() - suffix.size())] = r.passed;
    }
    for (const CheckResult& r : checks) {
        if (r.passed || r.name.ends_with(" [retry]")) continue;
        if (r.kind == CheckKind::kDeterministic) return 1;
        const auto it = retry_passed.find(r.name);
        if (it == retry_passed.end() || !it->second) return 1;
    }
    return 0;
}

}  // namespace gffdisk
