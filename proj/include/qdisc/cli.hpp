// Copyright 2026 The qdisc Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qdisc/ensemble_io.hpp"
#include "qdisc/measures.hpp"

namespace qdisc::cli {

/// Stable process exit codes.
enum ExitCode : int {
    kOk = 0,
    kInputError = 2,
    kInvariantViolation = 3,
    kIoError = 4,
    kVerificationFailure = 5,
};

enum class Subcommand { Compute, Bounds, Scan, Reproduce, Verify };
enum class Format { Json, Csv, Text };

struct CliConfig {
    Subcommand subcommand = Subcommand::Reproduce;
    std::optional<std::string> input_path;
    std::optional<std::string> output_path;
    Format format = Format::Text;
    std::uint64_t seed = 0;
    std::size_t n = 3;
    double p_usd = 0.5;
    std::size_t p_usd_steps = 100;
    std::size_t epsilon_steps = 100;
    bool verbose = false;
};

/// Measure values for one ensemble: p_usd, p_hyp (with certificate status when
/// a measurement was built) and entropy. Measures that do not apply are left
/// out.
std::vector<MeasureReport> compute_measures(const LoadedEnsemble &loaded);

/// The n = 3 pair with P_USD(E1) = 0.5, P_USD(E2) = 0.4, checked against
/// P_HYP(E1) = 8/9 (1e-12) and P_HYP(E2) ~ 0.943 (1e-3).
struct WorkedExample {
    double p_usd_1 = 0.0;
    double p_usd_2 = 0.0;
    double p_hyp_1 = 0.0;
    double p_hyp_2 = 0.0;
    double ratio = 0.0;
    bool witness = false;
    bool passed = false;
};

WorkedExample reproduce_worked_example();

int cmd_compute(const CliConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_bounds(const CliConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_scan(const CliConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_reproduce(std::ostream &out);
int cmd_verify(const CliConfig &cfg, std::ostream &out);

/// Parses `args` (without the program name) and dispatches.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

} // namespace qdisc::cli
