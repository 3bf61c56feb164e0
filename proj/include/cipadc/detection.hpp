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

#ifndef CIPADC_DETECTION_HPP
#define CIPADC_DETECTION_HPP

#include "cipadc/comb.hpp"
#include "cipadc/otdm.hpp"

#include <span>
#include <vector>

namespace cipadc
{
// Weights g_k of the photocurrent harmonics at k * delta_hz, k = 0 .. M-1.
//
// The same weight scales the replica of an input tone that beats against
// harmonic k, which is what makes the frequency response stepped.
class HarmonicSpectrum
{
public:
    HarmonicSpectrum(double delta_hz, std::vector<double> g);

    double delta_hz() const { return delta_hz_; }
    std::span<const double> g() const { return g_; }
    double g0() const { return g_.front(); }
    double at(int k) const { return g_.at(static_cast<std::size_t>(k)); }
    int num_lines() const { return static_cast<int>(g_.size()); }
    int k_max() const { return num_lines() - 1; }

    // g_k / g_0.
    double ratio(int k) const { return at(k) / g0(); }

private:
    double delta_hz_;
    std::vector<double> g_;
};

// g_k = | sum_r conj(a_r) a_{r+k} | on the (trimmed) line range.
HarmonicSpectrum beat_harmonics(const LineSpectrum &spectrum);
inline HarmonicSpectrum beat_harmonics(const GridSpectrum &s) { return beat_harmonics(s.lines); }
inline HarmonicSpectrum beat_harmonics(const OpticalComb &c) { return beat_harmonics(c.lines()); }

// Equal-amplitude approximation g_k = M - k.
HarmonicSpectrum triangular_gk(int num_lines, double delta_hz);

struct DetectionParams
{
    double load_resistance_ohm = 1.0;
    double responsivity_a_per_w = 1.0;
    double pd_cutoff_hz = 0.0; // rectangular photodetector/EADC edge, normally f_s / 2N
    double norm_constant = 1.0;

    // Defaults with the cutoff at half the channel rate.
    static DetectionParams for_channel_rate(double channel_rate_hz);

    void validate() const;

    // R_0 * eta^2.
    double photocurrent_scale() const { return load_resistance_ohm * responsivity_a_per_w * responsivity_a_per_w; }
};

// Rectangular low-pass, closed at the edge.
bool pd_passes(double freq_hz, const DetectionParams &params);

} // namespace cipadc

#endif // CIPADC_DETECTION_HPP
