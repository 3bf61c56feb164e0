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

#include "cipadc/otdm.hpp"
#include "cipadc/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace cipadc
{

MzmStage MzmStage::ideal(double driver_freq_hz)
{
    MzmStage s;
    s.driver_freq_hz = driver_freq_hz;
    return s;
}

void MzmStage::validate() const
{
    if (!(driver_freq_hz > 0.0) || !std::isfinite(driver_freq_hz))
        throw InvalidArgument("driver frequency must be positive and finite");
    if (!(extinction_ratio > 1.0))
        throw InvalidArgument("extinction ratio must exceed 1 (linear)");
    if (!(mu > 0.0 && mu <= 1.0))
        throw InvalidArgument("mu must lie in (0, 1]");
    if (!(alpha_max > 0.0 && alpha_max <= 1.0))
        throw InvalidArgument("alpha_max must lie in (0, 1]");
    if (!std::isfinite(driver_phase_rad))
        throw InvalidArgument("driver phase must be finite");
}

double MzmStage::inverse_extinction() const
{
    return std::isinf(extinction_ratio) ? 0.0 : 1.0 / extinction_ratio;
}

double extinction_from_db(double extinction_db)
{
    if (!(extinction_db > 0.0))
        throw InvalidArgument("extinction ratio in dB must be positive");
    return std::pow(10.0, extinction_db / 10.0);
}

StageCoeffs stage_coeffs(const MzmStage &stage, Port port)
{
    const double inv = stage.inverse_extinction();
    const double sign = port == Port::bar ? 1.0 : -1.0;
    const double side = sign * (stage.alpha_max / 4.0) * (1.0 - inv) * stage.mu;
    return {
        side * std::polar(1.0, stage.driver_phase_rad),
        Complex{(stage.alpha_max / 2.0) * (1.0 + inv), 0.0},
        side * std::polar(1.0, -stage.driver_phase_rad),
    };
}

double switching_window(const MzmStage &stage, Port port, double t)
{
    const double inv = stage.inverse_extinction();
    const double sign = port == Port::bar ? 1.0 : -1.0;
    const double c = std::cos(2.0 * std::numbers::pi * stage.driver_freq_hz * t - stage.driver_phase_rad);
    return (stage.alpha_max / 2.0) * ((1.0 + inv) + sign * (1.0 - inv) * stage.mu * c);
}

OtdmChain::OtdmChain(double sampling_rate_hz, std::vector<MzmStage> stages)
    : sampling_rate_hz_(sampling_rate_hz), stages_(std::move(stages))
{
    if (!(sampling_rate_hz_ > 0.0) || !std::isfinite(sampling_rate_hz_))
        throw InvalidArgument("sampling rate must be positive and finite");
    if (stages_.size() > 30)
        throw InvalidArgument("too many demultiplexer stages");
    double expected = sampling_rate_hz_;
    for (std::size_t s = 0; s < stages_.size(); ++s)
    {
        stages_[s].validate();
        expected /= 2.0;
        // Halving is exact in binary floating point, so equality is the right test.
        if (stages_[s].driver_freq_hz != expected)
            throw InvalidArgument("stage " + std::to_string(s + 1) + " must be driven at f_s/" +
                                  std::to_string(1 << (s + 1)));
    }
}

OtdmChain OtdmChain::ideal(double sampling_rate_hz, int num_channels)
{
    if (num_channels < 1 || (num_channels & (num_channels - 1)) != 0)
        throw InvalidArgument("num_channels must be a power of two");
    std::vector<MzmStage> stages;
    double f = sampling_rate_hz;
    for (int n = num_channels; n > 1; n /= 2)
    {
        f /= 2.0;
        stages.push_back(MzmStage::ideal(f));
    }
    return {sampling_rate_hz, std::move(stages)};
}

Port OtdmChain::channel_port(int channel, int stage_index) const
{
    const unsigned slot = static_cast<unsigned>(channel - 1);
    return ((slot >> stage_index) & 1U) ? Port::cross : Port::bar;
}

double OtdmChain::channel_phase_rad(int channel, int stage_index) const
{
    // A delay of (channel-1) T_S shifts the stage drive by 2 pi (channel-1) / 2^(s+1);
    // the multiple of pi from bit s is carried by the port instead.
    const unsigned slot = static_cast<unsigned>(channel - 1);
    const unsigned low = slot & ((1U << stage_index) - 1U);
    const double frac = static_cast<double>(low) / static_cast<double>(1U << (stage_index + 1));
    return stages_[static_cast<std::size_t>(stage_index)].driver_phase_rad + 2.0 * std::numbers::pi * frac;
}

GridSpectrum demultiplex(const OpticalComb &comb, const OtdmChain &chain, int channel)
{
    if (channel < 1 || channel > chain.num_channels())
        throw InvalidArgument("channel " + std::to_string(channel) + " outside [1, " +
                              std::to_string(chain.num_channels()) + "]");
    if (comb.line_spacing_hz() != chain.sampling_rate_hz())
        throw InvalidArgument("comb line spacing must equal the demultiplexer sampling rate");

    std::vector<Complex> current(comb.lines().amplitudes().begin(), comb.lines().amplitudes().end());
    double spacing = comb.line_spacing_hz();

    for (int s = 0; s < chain.num_stages(); ++s)
    {
        MzmStage stage = chain.stages()[static_cast<std::size_t>(s)];
        stage.driver_phase_rad = chain.channel_phase_rad(channel, s);
        const StageCoeffs b = stage_coeffs(stage, chain.channel_port(channel, s));

        // Old line r moves to slot 2r on the half-spacing grid; each window harmonic
        // shifts it by one slot. Half width R becomes 2R + 1.
        const int R = static_cast<int>(current.size() / 2);
        const int R2 = 2 * R + 1;
        std::vector<Complex> next(static_cast<std::size_t>(2 * R2 + 1));
        for (int r = -R; r <= R; ++r)
        {
            const Complex a = current[static_cast<std::size_t>(r + R)];
            const std::size_t centre = static_cast<std::size_t>(2 * r + R2);
            next[centre - 1] += a * b.minus;
            next[centre] += a * b.zero;
            next[centre + 1] += a * b.plus;
        }
        current = std::move(next);
        spacing /= 2.0;
    }
    return {LineSpectrum{spacing, std::move(current)}, channel};
}

int line_count(int half_width, int stages)
{
    if (half_width < 0 || stages < 0)
        throw InvalidArgument("line_count needs non-negative arguments");
    int count = 2 * half_width + 1;
    for (int s = 0; s < stages; ++s)
        count = 2 * count + 1;
    return count;
}

} // namespace cipadc
