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

#ifndef CIPADC_SCENARIO_HPP
#define CIPADC_SCENARIO_HPP

#include "cipadc/comb.hpp"
#include "cipadc/detection.hpp"
#include "cipadc/oracle.hpp"
#include "cipadc/otdm.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cipadc
{
enum class Mode
{
    analytic,
    oracle,
    both,
};

enum class Approximation
{
    exact_gk,
    triangular_gk,
};

struct SweepGrid
{
    double start_hz = 0.5e9;
    double stop_hz = 43.5e9;
    double step_hz = 0.5e9;

    void validate() const;

    // start, start + step, ... up to and including stop.
    std::vector<double> points() const;
};

// One complete CI-PADC configuration plus the sweep to run on it.
struct SimScenario
{
    std::string name;
    std::string description;
    OpticalComb comb;
    OtdmChain chain;
    DetectionParams detection;
    SweepGrid sweep;
    Mode mode = Mode::analytic;
    Approximation approximation = Approximation::exact_gk;
    OracleConfig oracle;

    double sampling_rate_hz() const { return chain.sampling_rate_hz(); }
    int num_channels() const { return chain.num_channels(); }
    double channel_rate_hz() const { return chain.channel_rate_hz(); }
};

// Parses and validates a scenario document. Throws ParseError for malformed JSON
// (message carries line and column) and ValidationError for schema violations.
SimScenario parse_scenario(std::string_view document);

// Throws IoError when the file cannot be read.
SimScenario load_scenario(const std::filesystem::path &path);

struct PresetInfo
{
    std::string name;
    std::string description;
    std::string document; // scenario JSON
};

std::span<const PresetInfo> list_presets();

// Throws ValidationError for an unknown name.
SimScenario preset_scenario(std::string_view name);

std::string_view to_string(Mode mode);
std::string_view to_string(Approximation approximation);

} // namespace cipadc

#endif // CIPADC_SCENARIO_HPP
