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

#include "cipadc/response.hpp"
#include "cipadc/errors.hpp"
#include "cipadc/scenario.hpp"

#include <algorithm>
#include <cmath>

namespace cipadc
{

std::string_view to_string(PointFlag flag)
{
    switch (flag)
    {
    case PointFlag::ok:
        return "ok";
    case PointFlag::below_noise:
        return "below-noise";
    case PointFlag::boundary:
        return "boundary";
    }
    return "ok";
}

NearestHarmonic nearest_harmonic(double f0_hz, double spacing_hz)
{
    // fmod is exact, so ties are detected without rounding error.
    const double rem = std::fmod(f0_hz, spacing_hz);
    const double half = spacing_hz / 2.0;
    const long long base = std::llround((f0_hz - rem) / spacing_hz);
    if (rem < half)
        return {base, rem, false};
    return {base + 1, spacing_hz - rem, rem == half};
}

ResponsePoint channel_output(const HarmonicSpectrum &g, double f0_hz, const DetectionParams &params)
{
    if (!(f0_hz > 0.0) || !std::isfinite(f0_hz))
        throw InvalidArgument("input tone frequency must be positive");

    const NearestHarmonic h = nearest_harmonic(f0_hz, g.delta_hz());
    ResponsePoint p;
    p.f0_hz = f0_hz;
    p.k0 = static_cast<int>(std::min<long long>(h.index, 1 << 30));
    p.alias_channel_hz = h.distance_hz;
    p.flag = h.tie ? PointFlag::boundary : PointFlag::ok;

    const bool has_replica = p.k0 <= g.k_max() && g.at(p.k0) > 0.0 && pd_passes(p.alias_channel_hz, params);
    if (has_replica)
    {
        p.power_db_rel = 10.0 * std::log10(g.ratio(p.k0));
    }
    else
    {
        p.power_db_rel = kBelowNoiseDb;
        p.flag = PointFlag::below_noise;
    }
    return p;
}

ResponsePoint interleave(ResponsePoint point, int num_channels, double sampling_rate_hz)
{
    if (num_channels < 1 || !(sampling_rate_hz > 0.0))
        throw InvalidArgument("interleave needs a positive channel count and sampling rate");
    const NearestHarmonic h = nearest_harmonic(point.f0_hz, sampling_rate_hz);
    point.k0_full = static_cast<int>(std::min<long long>(h.index, 1 << 30));
    point.alias_full_hz = h.distance_hz;
    return point;
}

double analog_bandwidth(const HarmonicSpectrum &g)
{
    int k_star = g.num_lines();
    for (int k = 0; k < g.num_lines(); ++k)
    {
        if (g.ratio(k) < 0.5)
        {
            k_star = k;
            break;
        }
    }
    return (k_star - 0.5) * g.delta_hz();
}

HarmonicSpectrum scenario_harmonics(const SimScenario &scenario)
{
    const GridSpectrum demux = demultiplex(scenario.comb, scenario.chain, 1);
    if (scenario.approximation == Approximation::triangular_gk)
    {
        const int lines = static_cast<int>(demux.lines.trimmed().nonzero_count());
        return triangular_gk(lines, demux.grid_spacing_hz());
    }
    return beat_harmonics(demux);
}

FrequencyResponse sweep(const SimScenario &scenario, std::span<const double> f0_grid)
{
    const HarmonicSpectrum g = scenario_harmonics(scenario);
    FrequencyResponse out;
    out.points.reserve(f0_grid.size());
    double previous = 0.0;
    for (double f0 : f0_grid)
    {
        if (!out.points.empty() && !(f0 > previous))
            throw InvalidArgument("sweep frequencies must be strictly increasing");
        previous = f0;
        out.points.push_back(
            interleave(channel_output(g, f0, scenario.detection), scenario.num_channels(), scenario.sampling_rate_hz()));
    }
    out.sweep_max_hz = f0_grid.empty() ? 0.0 : f0_grid.back();
    out.analog_bandwidth_hz = analog_bandwidth(g);
    out.exceeds_sweep = out.analog_bandwidth_hz > out.sweep_max_hz;
    return out;
}

FrequencyResponse sweep(const SimScenario &scenario)
{
    const std::vector<double> grid = scenario.sweep.points();
    return sweep(scenario, grid);
}

} // namespace cipadc
