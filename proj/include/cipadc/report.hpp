// SPDX-License-Identifier: Apache-2.0
//
// cipadc: frequency-response simulator for channel-interleaved photonic ADCs
// Copyright (C) 2026 The cipadc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef CIPADC_REPORT_HPP
#define CIPADC_REPORT_HPP

#include "cipadc/response.hpp"
#include "cipadc/scenario.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace cipadc
{
enum ExitCode : int
{
    kExitOk = 0,
    kExitValidation = 2,
    kExitGridMismatch = 3,
    kExitIo = 4,
};

struct RunResult
{
    FrequencyResponse response;
    std::optional<double> max_oracle_deviation_db; // set when the oracle ran
    std::size_t num_steps = 0;
};

// Analytic sweep, plus the oracle column when the mode asks for it.
RunResult evaluate(const SimScenario &scenario);

// Header plus one row per sweep point, columns fixed:
// f0_hz,k0_channel,alias_channel_hz,k0_full,alias_full_hz,power_db_rel,oracle_power_db_rel,flag
void write_csv(std::ostream &out, const FrequencyResponse &response);

// e.g. "analog_bandwidth_hz=1.5e10 steps=5".
std::string summary_line(const RunResult &result);

// Shortest round-trip scientific form ("1.5e+10").
std::string format_scientific(double value);

// Same digits with a bare exponent ("1.5e10").
std::string format_compact(double value);

// Evaluates, writes the CSV to `out_path` (or `csv_fallback` when empty) and
// the summary to `summary`. Maps failures to exit codes, printing the
// diagnostic to `diag`.
int run(const SimScenario &scenario, const std::optional<std::string> &out_path, std::ostream &csv_fallback,
        std::ostream &summary, std::ostream &diag);

} // namespace cipadc

#endif // CIPADC_REPORT_HPP
