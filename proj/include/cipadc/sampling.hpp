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

#ifndef CIPADC_SAMPLING_HPP
#define CIPADC_SAMPLING_HPP

#include "cipadc/comb.hpp"

#include <initializer_list>
#include <span>
#include <vector>

namespace cipadc
{
struct Tone
{
    double freq_hz = 0.0;
    double mod_index = 0.0; // alpha in (0, 1]
};

// Analog input: one or more cosines, each with its own modulation index.
class ToneSet
{
public:
    explicit ToneSet(std::vector<Tone> tones);
    ToneSet(std::initializer_list<Tone> tones) : ToneSet(std::vector<Tone>(tones)) {}

    std::span<const Tone> tones() const { return tones_; }
    std::size_t size() const { return tones_.size(); }

private:
    std::vector<Tone> tones_;
};

enum class ComponentKind
{
    carrier,
    upper_sideband,
    lower_sideband,
};

struct Component
{
    double offset_hz = 0.0; // relative to the optical carrier
    Complex amplitude{};
    ComponentKind kind = ComponentKind::carrier;
    int parent_line = 0;
    int tone_index = -1; // -1 for carriers
};

// Term-by-term expansion of the modulated optical field.
struct ComponentSet
{
    std::vector<Component> components;

    std::size_t size() const { return components.size(); }

    // Complex-baseband field at time t.
    Complex field_at(double t) const;
};

// Small-signal intensity modulation of every line: carrier a at nu, sidebands
// a*alpha/2 at nu +- f0 for each tone. Tone-tone products are not generated.
ComponentSet modulate(const LineSpectrum &spectrum, const ToneSet &signal);
inline ComponentSet modulate(const OpticalComb &comb, const ToneSet &signal) { return modulate(comb.lines(), signal); }

} // namespace cipadc

#endif // CIPADC_SAMPLING_HPP
