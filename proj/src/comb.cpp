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

#include "cipadc/comb.hpp"
#include "cipadc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace cipadc
{

LineSpectrum::LineSpectrum(double spacing_hz, std::vector<Complex> amplitudes)
    : spacing_hz_(spacing_hz), half_width_(0), amplitudes_(std::move(amplitudes))
{
    if (!(spacing_hz_ > 0.0) || !std::isfinite(spacing_hz_))
        throw InvalidArgument("line spacing must be positive and finite");
    if (amplitudes_.empty() || amplitudes_.size() % 2 == 0)
        throw InvalidArgument("line spectrum needs an odd number of slots, got " + std::to_string(amplitudes_.size()));
    half_width_ = static_cast<int>(amplitudes_.size() / 2);
}

Complex LineSpectrum::at(int offset) const
{
    if (offset < -half_width_ || offset > half_width_)
        return {0.0, 0.0};
    return amplitudes_[static_cast<std::size_t>(offset + half_width_)];
}

std::size_t LineSpectrum::nonzero_count(double tolerance) const
{
    return static_cast<std::size_t>(
        std::count_if(amplitudes_.begin(), amplitudes_.end(), [&](Complex a) { return std::abs(a) > tolerance; }));
}

double LineSpectrum::total_power() const
{
    double sum = 0.0;
    for (const auto &a : amplitudes_)
        sum += std::norm(a);
    return sum;
}

bool LineSpectrum::all_zero() const
{
    return std::all_of(amplitudes_.begin(), amplitudes_.end(), [](Complex a) { return a == Complex{}; });
}

LineSpectrum LineSpectrum::trimmed() const
{
    int reach = 0;
    for (int r = -half_width_; r <= half_width_; ++r)
        if (at(r) != Complex{})
            reach = std::max(reach, std::abs(r));
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(2 * reach + 1));
    for (int r = -reach; r <= reach; ++r)
        out.push_back(at(r));
    return {spacing_hz_, std::move(out)};
}

OpticalComb::OpticalComb(double center_freq_hz, LineSpectrum lines)
    : center_freq_hz_(center_freq_hz), lines_(std::move(lines))
{
    if (!(center_freq_hz_ >= 0.0))
        throw InvalidArgument("comb centre frequency must be non-negative");
    if (lines_.all_zero())
        throw EmptyCombError("optical comb has no nonzero line");
}

OpticalComb uniform_comb(int num_lines, double spacing_hz, double center_hz, double amplitude)
{
    if (num_lines < 1 || num_lines % 2 == 0)
        throw InvalidArgument("num_lines must be odd and positive, got " + std::to_string(num_lines));
    if (!(spacing_hz > 0.0))
        throw InvalidArgument("comb spacing must be positive");
    if (!(amplitude > 0.0))
        throw InvalidArgument("comb amplitude must be positive");
    std::vector<Complex> lines(static_cast<std::size_t>(num_lines), Complex{amplitude, 0.0});
    return {center_hz, LineSpectrum{spacing_hz, std::move(lines)}};
}

OpticalComb comb_from_amplitudes(std::span<const double> amplitudes, double spacing_hz, double center_hz)
{
    std::vector<Complex> lines;
    lines.reserve(amplitudes.size());
    for (double a : amplitudes)
    {
        if (!(a >= 0.0) || !std::isfinite(a))
            throw InvalidArgument("comb line amplitudes must be finite and non-negative");
        lines.emplace_back(a, 0.0);
    }
    return {center_hz, LineSpectrum{spacing_hz, std::move(lines)}};
}

OpticalComb apply_obpf(const OpticalComb &comb, const std::map<int, double> &weights)
{
    const int L = comb.half_width();
    for (const auto &[offset, w] : weights)
    {
        if (offset < -L || offset > L)
            throw InvalidArgument("filter weight at offset " + std::to_string(offset) + " lies outside the comb");
        if (!(w >= 0.0 && w <= 1.0))
            throw InvalidArgument("filter weights must lie in [0, 1]");
    }

    std::vector<Complex> filtered;
    filtered.reserve(comb.lines().size());
    for (int m = -L; m <= L; ++m)
    {
        auto it = weights.find(m);
        const double w = it == weights.end() ? 0.0 : it->second;
        filtered.push_back(w * comb.amplitude(m));
    }
    LineSpectrum lines{comb.line_spacing_hz(), std::move(filtered)};
    if (lines.all_zero())
        throw EmptyCombError("optical bandpass filter removed every comb line");
    return {comb.center_freq_hz(), lines.trimmed()};
}

Complex field_waveform(const LineSpectrum &spectrum, double t)
{
    const double w = 2.0 * std::numbers::pi * spectrum.spacing_hz() * t;
    Complex sum{};
    const int R = spectrum.half_width();
    for (int r = -R; r <= R; ++r)
    {
        const Complex a = spectrum.at(r);
        if (a != Complex{})
            sum += a * std::polar(1.0, w * r);
    }
    return sum;
}

} // namespace cipadc
