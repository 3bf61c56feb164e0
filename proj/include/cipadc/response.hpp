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

#ifndef CIPADC_RESPONSE_HPP
#define CIPADC_RESPONSE_HPP

#include "cipadc/detection.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace cipadc
{
struct SimScenario;

// Level written for tones that have no replica inside the channel band.
inline constexpr double kBelowNoiseDb = -300.0;

enum class PointFlag
{
    ok,
    below_noise, // k0 beyond the last harmonic (or a zero weight): nothing to digitise
    boundary,    // f0 sits exactly on a step edge (k0 + 1/2) * f_s/N
};

std::string_view to_string(PointFlag flag);

struct ResponsePoint
{
    double f0_hz = 0.0;
    int k0 = 0;                    // harmonic the tone beats against in one channel
    double alias_channel_hz = 0.0; // |k0 f_s/N - f0|
    int k0_full = 0;               // Nyquist zone index after interleaving
    double alias_full_hz = 0.0;    // |k0_full f_s - f0|
    double power_db_rel = 0.0;     // 10 log10(g_k0 / g_0)
    PointFlag flag = PointFlag::ok;
    std::optional<double> oracle_power_db_rel;
};

// Nearest multiple of `spacing_hz` to f0 with ties going up, and the distance to it.
struct NearestHarmonic
{
    long long index;
    double distance_hz;
    bool tie;
};
NearestHarmonic nearest_harmonic(double f0_hz, double spacing_hz);

// Per-channel digitised output of a single tone.
ResponsePoint channel_output(const HarmonicSpectrum &g, double f0_hz, const DetectionParams &params);

// Relocates the tone into the full-rate Nyquist band; the level is untouched.
ResponsePoint interleave(ResponsePoint point, int num_channels, double sampling_rate_hz);

// (k* - 1/2) * delta where k* is the first harmonic with g_k / g_0 < 1/2.
double analog_bandwidth(const HarmonicSpectrum &g);

struct FrequencyResponse
{
    std::vector<ResponsePoint> points;
    double analog_bandwidth_hz = 0.0;
    bool exceeds_sweep = false; // bandwidth lies beyond sweep_max_hz
    double sweep_max_hz = 0.0;
};

// g_k of channel 1 under the scenario's approximation.
HarmonicSpectrum scenario_harmonics(const SimScenario &scenario);

// Analytic stepped response over the scenario's sweep grid.
FrequencyResponse sweep(const SimScenario &scenario);
FrequencyResponse sweep(const SimScenario &scenario, std::span<const double> f0_grid);

} // namespace cipadc

#endif // CIPADC_RESPONSE_HPP
