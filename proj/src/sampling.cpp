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

#include "cipadc/sampling.hpp"
#include "cipadc/errors.hpp"

#include <cmath>
#include <numbers>

namespace cipadc
{

ToneSet::ToneSet(std::vector<Tone> tones) : tones_(std::move(tones))
{
    if (tones_.empty())
        throw InvalidArgument("tone set must not be empty");
    for (std::size_t i = 0; i < tones_.size(); ++i)
    {
        const Tone &t = tones_[i];
        if (!(t.freq_hz > 0.0) || !std::isfinite(t.freq_hz))
            throw InvalidArgument("tone frequencies must be positive and finite");
        if (!(t.mod_index > 0.0 && t.mod_index <= 1.0))
            throw InvalidArgument("modulation index must lie in (0, 1]");
        for (std::size_t j = 0; j < i; ++j)
            if (tones_[j].freq_hz == t.freq_hz)
                throw InvalidArgument("tone frequencies must be distinct");
    }
}

Complex ComponentSet::field_at(double t) const
{
    Complex sum{};
    for (const auto &c : components)
        sum += c.amplitude * std::polar(1.0, 2.0 * std::numbers::pi * c.offset_hz * t);
    return sum;
}

ComponentSet modulate(const LineSpectrum &spectrum, const ToneSet &signal)
{
    ComponentSet out;
    const int R = spectrum.half_width();
    out.components.reserve(spectrum.size() * (1 + 2 * signal.size()));
    for (int r = -R; r <= R; ++r)
    {
        const Complex a = spectrum.at(r);
        const double nu = r * spectrum.spacing_hz();
        out.components.push_back({nu, a, ComponentKind::carrier, r, -1});
        for (std::size_t i = 0; i < signal.size(); ++i)
        {
            const Tone &tone = signal.tones()[i];
            const Complex side = a * (tone.mod_index / 2.0);
            const int idx = static_cast<int>(i);
            out.components.push_back({nu + tone.freq_hz, side, ComponentKind::upper_sideband, r, idx});
            out.components.push_back({nu - tone.freq_hz, side, ComponentKind::lower_sideband, r, idx});
        }
    }
    return out;
}

} // namespace cipadc
