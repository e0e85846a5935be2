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

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "gffdisk/quadrature.hpp"
#include "gffdisk/report.hpp"

namespace gffdisk {

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2, kExitIo = 3 };

/// Settings shared by every subcommand. Resolution order: command-line flag,
/// then the JSON file given by --config, then these defaults.
struct RunConfig {
    int n_max = 24;
    int k_max = 24;
    std::uint64_t seed = 1;
    QuadratureSpec quad{64, 256};
    Format format = Format::kCsv;
    std::optional<std::string> output_path;  // stdout when empty

    /// Throws std::invalid_argument on out-of-range values.
    void validate() const;
};

/// Entry point of the gffdisk tool. Output goes to --out or `out`;
/// diagnostics to `err`. Returns one of ExitCode.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gffdisk
