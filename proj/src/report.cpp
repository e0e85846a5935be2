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

#include "gffdisk/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace gffdisk {

using nlohmann::ordered_json;

namespace {

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

void dump(std::ostream& os, const ordered_json& j) { os << j.dump(2) << '\n'; }

ordered_json json_number(double v) {
    return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr);
}

}  // namespace

Format parse_format(std::string_view s) {
    if (s == "csv") return Format::kCsv;
    if (s == "json") return Format::kJson;
    throw std::invalid_argument("unknown format '" + std::string(s) + "' (expected csv or json)");
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_checks(std::ostream& os, std::span<const CheckResult> checks, Format f) {
    std::size_t passed = 0;
    for (const CheckResult& c : checks) passed += c.passed;
    if (f == Format::kCsv) {
        os << "name,kind,value,reference,tolerance,passed,detail\n";
        for (const CheckResult& c : checks)
            os << csv_quote(c.name) << ',' << check_kind_name(c.kind) << ','
               << format_double(c.value) << ',' << format_double(c.reference) << ','
               << format_double(c.tolerance) << ',' << (c.passed ? "true" : "false") << ','
               << csv_quote(c.detail) << '\n';
        return;
    }
    ordered_json list = ordered_json::array();
    for (const CheckResult& c : checks)
        list.push_back({{"name", c.name},
                        {"kind", check_kind_name(c.kind)},
                        {"value", json_number(c.value)},
                        {"reference", json_number(c.reference)},
                        {"tolerance", json_number(c.tolerance)},
                        {"passed", c.passed},
                        {"detail", c.detail}});
    dump(os, {{"checks", list},
              {"summary",
               {{"total", checks.size()}, {"passed", passed}, {"failed", checks.size() - passed}}}});
}

void write_basis(std::ostream& os, const SpectralBasis& basis, Format f) {
    if (f == Format::kCsv) {
        os << "n,parity,k,zero,eigenvalue,norm_const\n";
        for (const SpectralMode& m : basis.modes())
            os << m.n << ',' << parity_name(m.parity) << ',' << m.k << ',' << format_double(m.zero)
               << ',' << format_double(m.eigenvalue) << ',' << format_double(m.norm_const) << '\n';
        return;
    }
    ordered_json list = ordered_json::array();
    for (const SpectralMode& m : basis.modes())
        list.push_back({{"n", m.n},
                        {"parity", parity_name(m.parity)},
                        {"k", m.k},
                        {"zero", m.zero},
                        {"eigenvalue", m.eigenvalue},
                        {"norm_const", m.norm_const}});
    dump(os, list);
}

void write_grid(std::ostream& os, const FieldGrid& grid, Format f) {
    const int n = grid.resolution;
    if (f == Format::kCsv) {
        os << "x,y,value\n";
        for (int iy = 0; iy < n; ++iy)
            for (int ix = 0; ix < n; ++ix) {
                const std::size_t i = static_cast<std::size_t>(iy) * n + ix;
                if (!grid.inside[i]) continue;
                os << format_double(grid.coord(ix)) << ',' << format_double(grid.coord(iy)) << ','
                   << format_double(grid.values[i]) << '\n';
            }
        return;
    }
    ordered_json mask = ordered_json::array();
    for (std::uint8_t b : grid.inside) mask.push_back(b != 0);
    dump(os, {{"resolution", n}, {"values", grid.values}, {"mask", mask}});
}

void write_coefficients(std::ostream& os, const FieldSample& s, Format f) {
    const SpectralBasis& basis = s.basis();
    if (f == Format::kCsv) {
        os << "n,parity,k,coefficient\n";
        for (std::size_t j = 0; j < basis.size(); ++j)
            os << basis[j].n << ',' << parity_name(basis[j].parity) << ',' << basis[j].k << ','
               << format_double(s.coeffs()[j]) << '\n';
        return;
    }
    dump(os, {{"seed", s.seed()}, {"coeffs", s.coeffs()}});
}

CovarianceRow covariance_row(const CovarianceQuery& q) {
    CovarianceRow row{q, q.regime(), exact_cov(q), std::nullopt, mean_square_increment_bound(q)};
    if (row.regime != Regime::kOverlapping) row.closed = closed_cov(q);
    return row;
}

void write_covariance_table(std::ostream& os, std::span<const CovarianceRow> rows, Format f) {
    if (f == Format::kCsv) {
        os << "z1x,z1y,rho1,z2x,z2y,rho2,regime,exact,closed,bound\n";
        for (const CovarianceRow& r : rows) {
            const CovarianceQuery& q = r.query;
            os << format_double(q.z1.x()) << ',' << format_double(q.z1.y()) << ','
               << format_double(q.rho1) << ',' << format_double(q.z2.x()) << ','
               << format_double(q.z2.y()) << ',' << format_double(q.rho2) << ','
               << regime_name(r.regime) << ',' << format_double(r.exact) << ','
               << (r.closed ? format_double(*r.closed) : "") << ',' << format_double(r.bound)
               << '\n';
        }
        return;
    }
    ordered_json list = ordered_json::array();
    for (const CovarianceRow& r : rows) {
        const CovarianceQuery& q = r.query;
        list.push_back({{"z1x", q.z1.x()},
                        {"z1y", q.z1.y()},
                        {"rho1", q.rho1},
                        {"z2x", q.z2.x()},
                        {"z2y", q.z2.y()},
                        {"rho2", q.rho2},
                        {"regime", regime_name(r.regime)},
                        {"exact", r.exact},
                        {"closed", r.closed ? ordered_json(*r.closed) : ordered_json(nullptr)},
                        {"bound", r.bound}});
    }
    dump(os, list);
}

void write_brownian(std::ostream& os, std::span<const double> times, std::span<const double> values,
                    Format f) {
    if (times.size() != values.size())
        throw std::invalid_argument("brownian times and values differ in length");
    if (f == Format::kCsv) {
        os << "t,B_t\n";
        for (std::size_t i = 0; i < times.size(); ++i)
            os << format_double(times[i]) << ',' << format_double(values[i]) << '\n';
        return;
    }
    ordered_json list = ordered_json::array();
    for (std::size_t i = 0; i < times.size(); ++i)
        list.push_back({{"t", times[i]}, {"B_t", values[i]}});
    dump(os, list);
}

std::vector<CovarianceQuery> read_queries(std::istream& is) {
    std::vector<CovarianceQuery> out;
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        std::vector<double> v;
        std::stringstream ss(line);
        std::string cell;
        bool numeric = true;
        while (std::getline(ss, cell, ',')) {
            try {
                std::size_t used = 0;
                v.push_back(std::stod(cell, &used));
                if (cell.find_first_not_of(" \t", used) != std::string::npos) numeric = false;
            } catch (const std::exception&) {
                numeric = false;
            }
        }
        if (!numeric && out.empty() && line_no == 1) continue;  // header
        const std::string where = "query line " + std::to_string(line_no);
        if (!numeric || v.size() != 6)
            throw std::invalid_argument(where + ": expected z1x,z1y,rho1,z2x,z2y,rho2");
        try {
            if (!(v[2] > 0.0) || !(v[5] > 0.0) || !std::isfinite(v[2]) || !std::isfinite(v[5]))
                throw std::domain_error("radii must be positive and finite");
            out.push_back({DiskPoint(v[0], v[1]), v[2], DiskPoint(v[3], v[4]), v[5]});
        } catch (const std::domain_error& e) {
            throw std::invalid_argument(where + ": " + e.what());
        }
    }
    return out;
}

}  // namespace gffdisk
