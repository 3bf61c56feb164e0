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

#ifndef CIPADC_OTDM_HPP
#define CIPADC_OTDM_HPP

#include "cipadc/comb.hpp"

#include <limits>
#include <vector>

namespace cipadc
{
enum class Port
{
    bar,
    cross,
};

// One dual-output Mach-Zehnder switch of the demultiplexer tree.
//
// Its power transmittance on the bar port is
//   (alpha_max / 2) [ (1 + 1/eps) + (1 - 1/eps) mu cos(2 pi f_driver t - phase) ]
// and the cross port flips the sign of the cosine term.
struct MzmStage
{
    static constexpr double kInfiniteExtinction = std::numeric_limits<double>::infinity();

    double driver_freq_hz = 0.0;
    double extinction_ratio = kInfiniteExtinction; // linear max/min transmittance, > 1
    double mu = 1.0;
    double alpha_max = 1.0;
    double driver_phase_rad = 0.0;

    static MzmStage ideal(double driver_freq_hz);

    // Throws InvalidArgument on out-of-range parameters.
    void validate() const;

    // 1/eps, exactly zero for an infinite extinction ratio.
    double inverse_extinction() const;
};

// Linear extinction ratio from a dB figure (10 log10 convention).
double extinction_from_db(double extinction_db);

// Fourier coefficients of the switching window at -f_driver, 0, +f_driver.
struct StageCoeffs
{
    Complex minus;
    Complex zero;
    Complex plus;
};

StageCoeffs stage_coeffs(const MzmStage &stage, Port port);

// Window of one stage/port as a time function.
double switching_window(const MzmStage &stage, Port port, double t);

// Cascade of log2(N) switches driven at f_s/2, f_s/4, ..., f_s/N.
class OtdmChain
{
public:
    // Stages must be ordered by halving drive frequency starting at f_s/2.
    OtdmChain(double sampling_rate_hz, std::vector<MzmStage> stages);

    // Ideal chain with log2(num_channels) lossless, infinite-extinction stages.
    static OtdmChain ideal(double sampling_rate_hz, int num_channels);

    double sampling_rate_hz() const { return sampling_rate_hz_; }
    double sample_period_s() const { return 1.0 / sampling_rate_hz_; }
    int num_stages() const { return static_cast<int>(stages_.size()); }
    int num_channels() const { return 1 << stages_.size(); }
    double channel_rate_hz() const { return sampling_rate_hz_ / num_channels(); }
    const std::vector<MzmStage> &stages() const { return stages_; }

    // Port and absolute driver phase that stage `stage_index` (0-based) presents to
    // channel `channel` (1-based). The port follows bit `stage_index` of channel-1;
    // the lower bits add the fractional phase of the (channel-1) T_S delay.
    Port channel_port(int channel, int stage_index) const;
    double channel_phase_rad(int channel, int stage_index) const;

private:
    double sampling_rate_hz_;
    std::vector<MzmStage> stages_;
};

// Demultiplexed line spectrum of one channel on the refined grid f_s / N.
struct GridSpectrum
{
    LineSpectrum lines;
    int channel_index = 1;

    double grid_spacing_hz() const { return lines.spacing_hz(); }
};

GridSpectrum demultiplex(const OpticalComb &comb, const OtdmChain &chain, int channel);

// Lines present after `stages` ideal switches starting from 2L+1 lines.
int line_count(int half_width, int stages);

inline Complex field_waveform(const GridSpectrum &spectrum, double t) { return field_waveform(spectrum.lines, t); }

} // namespace cipadc

#endif // CIPADC_OTDM_HPP
