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

#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gffdisk/circles.hpp"
#include "gffdisk/field.hpp"
#include "gffdisk/spectral.hpp"
#include "gffdisk/verify.hpp"

namespace gffdisk {

enum class Format { kCsv, kJson };

/// "csv" or "json"; throws std::invalid_argument otherwise.
Format parse_format(std::string_view s);

/// %.17g, round-trippable.
std::string format_double(double v);

/// {"checks": [...], "summary": {"total", "passed", "failed"}} or one CSV
/// row per check.
void write_checks(std::ostream& os, std::span<const CheckResult> checks, Format f);

void write_basis(std::ostream& os, const SpectralBasis& basis, Format f);

/// CSV lists only cells inside the disk as x,y,value; JSON carries the full
/// lattice with its mask.
void write_grid(std::ostream& os, const FieldGrid& grid, Format f);

void write_coefficients(std::ostream& os, const FieldSample& s, Format f);

struct CovarianceRow {
    CovarianceQuery query;
    Regime regime;
    double exact;
    std::optional<double> closed;  // absent for overlapping circles
    double bound;
};

CovarianceRow covariance_row(const CovarianceQuery& q);

void write_covariance_table(std::ostream& os, std::span<const CovarianceRow> rows, Format f);

void write_brownian(std::ostream& os, std::span<const double> times, std::span<const double> values,
                    Format f);

/// Parses `z1x,z1y,rho1,z2x,z2y,rho2` lines. A non-numeric first line is
/// taken as a header; blank lines are skipped. Throws std::invalid_argument
/// naming the offending line.
std::vector<CovarianceQuery> read_queries(std::istream& is);

}  // namespace gffdisk
