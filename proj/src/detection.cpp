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

#include "cipadc/detection.hpp"
#include "cipadc/errors.hpp"

#include <cmath>
#include <string>

namespace cipadc
{

HarmonicSpectrum::HarmonicSpectrum(double delta_hz, std::vector<double> g) : delta_hz_(delta_hz), g_(std::move(g))
{
    if (!(delta_hz_ > 0.0))
        throw InvalidArgument("harmonic spacing must be positive");
    if (g_.empty())
        throw InvalidArgument("harmonic spectrum must not be empty");
    if (!(g_.front() > 0.0))
        throw InvalidArgument("g_0 must be positive");
    for (double v : g_)
        if (!(v >= 0.0) || !std::isfinite(v))
            throw InvalidArgument("harmonic weights must be finite and non-negative");
}

HarmonicSpectrum beat_harmonics(const LineSpectrum &spectrum)
{
    if (spectrum.all_zero())
        throw InvalidArgument("cannot detect an empty line spectrum");
    const LineSpectrum lines = spectrum.trimmed();
    const auto a = lines.amplitudes();
    const std::size_t M = a.size();

    std::vector<double> g(M);
    for (std::size_t k = 0; k < M; ++k)
    {
        Complex acc{};
        for (std::size_t r = 0; r + k < M; ++r)
            acc += std::conj(a[r]) * a[r + k];
        g[k] = std::abs(acc);
    }
    // Exact for k = 0; avoids a rounding-level sqrt(re^2 + im^2) difference.
    g[0] = lines.total_power();
    return {lines.spacing_hz(), std::move(g)};
}

HarmonicSpectrum triangular_gk(int num_lines, double delta_hz)
{
    if (num_lines < 1)
        throw InvalidArgument("triangular g_k needs at least one line, got " + std::to_string(num_lines));
    std::vector<double> g(static_cast<std::size_t>(num_lines));
    for (int k = 0; k < num_lines; ++k)
        g[static_cast<std::size_t>(k)] = static_cast<double>(num_lines - k);
    return {delta_hz, std::move(g)};
}

DetectionParams DetectionParams::for_channel_rate(double channel_rate_hz)
{
    DetectionParams p;
    p.pd_cutoff_hz = channel_rate_hz / 2.0;
    return p;
}

void DetectionParams::validate() const
{
    if (!(load_resistance_ohm > 0.0))
        throw InvalidArgument("load resistance must be positive");
    if (!(responsivity_a_per_w > 0.0))
        throw InvalidArgument("responsivity must be positive");
    if (!(pd_cutoff_hz > 0.0))
        throw InvalidArgument("photodetector cutoff must be positive");
    if (!(norm_constant > 0.0))
        throw InvalidArgument("normalisation constant must be positive");
}

bool pd_passes(double freq_hz, const DetectionParams &params)
{
    if (!(freq_hz >= 0.0))
        throw InvalidArgument("frequency must be non-negative");
    return freq_hz <= params.pd_cutoff_hz;
}

} // namespace cipadc
