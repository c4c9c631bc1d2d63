// Copyright 2026 The ftlab Authors
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

#ifndef FTLAB_TOOLS_COMMANDS_H
#define FTLAB_TOOLS_COMMANDS_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ftlab/codes.h"
#include "ftlab/hierarchy.h"
#include "ftlab/oqft.h"

namespace ftlab::cli {

enum ExitCode : int {
    kOk = 0,
    kConfigError = 2,
    kCapacityError = 3,
    kBracketingError = 4,
    kVerificationFailed = 5,
    kIoError = 6,
};

/// `steps` evenly spaced points from start to stop inclusive; a single point when steps == 1.
struct Range {
    double start = 0.0;
    double stop = 0.0;
    std::size_t steps = 1;

    /// "0.06" or "start:stop:steps". Throws ConfigError.
    static Range parse(std::string_view text);
    std::vector<double> values() const;
    std::string str() const;
};

struct RunConfig {
    std::string code = "five_qubit";
    Range px{0.001, 0.1, 50};
    Range pz{0.001, 0.1, 50};
    /// The compared pair is (levels - 1, levels).
    std::size_t levels = 2;
    /// Empty or "-" writes to stdout.
    std::string out;
    double tol = 1e-6;
    unsigned workers = 1;
    std::uint64_t seed = 20260101;
    NoiseModel noise = NoiseModel::independent;
    Bracket bracket{};
};

/// Throws ConfigError for empty/out-of-range ranges, levels < 1, workers == 0, tol <= 0.
void validate(const RunConfig &config);

/// Fixed scientific notation with 12 significant digits.
std::string format_number(double v);

/// Complete CSV document for the (p_x, p_z) grid in row-major order (p_x outer).
std::string scan_csv(const RunConfig &config, std::string_view command = "scan");

/// Writes scan_csv to config.out. Throws std::ios_base::failure on I/O problems.
void cmd_scan(const RunConfig &config, std::ostream &stdout_stream);
/// Like cmd_scan, with p_z required to be a single value.
void cmd_slice(const RunConfig &config, std::ostream &stdout_stream);

struct ThresholdResult {
    double p_z = 0.0;
    double qft_crossing = 0.0;
    double p_crossing = 0.0;
    /// (p_crossing - qft_crossing) / qft_crossing
    double advantage = 0.0;
};

ThresholdResult run_threshold(const RunConfig &config);
void cmd_threshold(const RunConfig &config, std::ostream &stdout_stream);

/// Per-level table for a single (p_x, p_z) point.
std::string channel_csv(const RunConfig &config);
void cmd_channel(const RunConfig &config, std::ostream &stdout_stream);

struct VerifyOptions {
    std::uint64_t seed = 20260101;
    std::size_t resolution = 200;
    /// Code used for the standard-QEC instances; tests swap in a corrupted decoder.
    std::optional<StabilizerCode> qec_code;
    /// Extra instance bundle (JSON) checked for identity and the alpha = 0 QCC.
    std::optional<std::string> bundle_path;
};

/// Hierarchy checks (one per arrow) followed by cross-engine consistency checks.
HierarchyReport run_verify(const VerifyOptions &options);
/// Prints one PASS/FAIL line per check; returns kOk or kVerificationFailed.
int cmd_verify(const VerifyOptions &options, std::ostream &stdout_stream);

/// Full command-line entry point. Returns the process exit status.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace ftlab::cli

#endif
