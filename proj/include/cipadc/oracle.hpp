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

#ifndef CIPADC_ORACLE_HPP
#define CIPADC_ORACLE_HPP

#include "cipadc/comb.hpp"
#include "cipadc/detection.hpp"
#include "cipadc/otdm.hpp"
#include "cipadc/sampling.hpp"

#include <optional>
#include <span>
#include <vector>

namespace cipadc
{
struct SimScenario;

// Brute-force time-domain model. Every frequency involved must be an integer
// multiple of base_resolution_hz so a record of 1/base_resolution_hz seconds
// holds an integer number of periods of everything and DFT bins are leak-free.
struct OracleConfig
{
    double base_resolution_hz = 0.5e9;
    int oversample_factor = 8; // dense rate relative to the highest field component
    double alpha = 0.05;       // modulation index used for swept tones

    double duration_s() const { return 1.0 / base_resolution_hz; }
    void validate() const;
};

// Uniformly sampled real record; sample i is taken at start_time_s + i / sample_rate_hz.
struct SampledSeries
{
    double sample_rate_hz = 0.0;
    double start_time_s = 0.0;
    std::vector<double> samples;
};

// Everything the time-domain model needs to build one channel's photocurrent.
struct OracleSetup
{
    OpticalComb comb;
    OtdmChain chain;
    DetectionParams detection;

    static OracleSetup from_scenario(const SimScenario &scenario);
};

// Photocurrent R_0 eta^2 |h_n(t) v(t)|^2 on a dense grid covering one record,
// starting at the channel's first pulse (channel-1) T_S. No photodetector
// bandwidth limit is applied. `tones` may be empty.
SampledSeries synthesize_dense_photocurrent(const OracleSetup &setup, int channel, std::span<const Tone> tones,
                                            const OracleConfig &cfg);

// Same photocurrent after the rectangular photodetector low-pass, sampled by the
// channel's EADC at f_s/N starting at (channel-1) T_S.
SampledSeries synthesize_photocurrent(const OracleSetup &setup, int channel, std::span<const Tone> tones,
                                      const OracleConfig &cfg);

// Scenario form with an optional single swept tone at cfg.alpha.
SampledSeries synthesize_photocurrent(const SimScenario &scenario, int channel, std::optional<double> tone_hz,
                                      const OracleConfig &cfg);

// One-sided DFT magnitude at an exact bin: DC and Nyquist unscaled, others doubled.
double tone_magnitude(std::span<const double> samples, double sample_rate_hz, double target_hz);
inline double tone_magnitude(const SampledSeries &s, double target_hz)
{
    return tone_magnitude(s.samples, s.sample_rate_hz, target_hz);
}

struct OracleComparison
{
    // Per f0: oracle level relative to a baseband reference tone, in dB.
    // Empty where no comparison is defined (step boundary, no replica, alias at DC).
    std::vector<std::optional<double>> oracle_db;
    std::vector<std::optional<double>> deviation_db;
    double max_deviation_db = 0.0;
    std::size_t compared = 0;
};

// Runs the oracle at each f0 and compares with the analytic power_db_rel.
// Throws GridMismatchError if any frequency is off the base grid.
OracleComparison compare_response(const SimScenario &scenario, std::span<const double> f0_grid,
                                  const OracleConfig &cfg, int channel = 1);

// Largest deviation only.
double max_response_deviation_db(const SimScenario &scenario, std::span<const double> f0_grid,
                                 const OracleConfig &cfg, int channel = 1);

} // namespace cipadc

#endif // CIPADC_ORACLE_HPP
