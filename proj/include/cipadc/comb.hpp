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

#ifndef CIPADC_COMB_HPP
#define CIPADC_COMB_HPP

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace cipadc
{
using Complex = std::complex<double>;

// Complex line amplitudes on an integer-indexed frequency grid.
//
// Offsets run over the contiguous symmetric range [-R, R]; the line at offset r
// sits at r * spacing_hz relative to the optical carrier. The carrier itself is
// never represented numerically (square-law detection removes it).
class LineSpectrum
{
public:
    // `amplitudes` must have odd length 2R+1; element i holds offset i - R.
    LineSpectrum(double spacing_hz, std::vector<Complex> amplitudes);

    double spacing_hz() const { return spacing_hz_; }
    int half_width() const { return half_width_; }
    std::size_t size() const { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const { return amplitudes_; }

    // Amplitude at `offset`; zero outside [-R, R].
    Complex at(int offset) const;

    // Lines whose magnitude exceeds `tolerance`.
    std::size_t nonzero_count(double tolerance = 0.0) const;

    // Sum of |a_r|^2.
    double total_power() const;

    bool all_zero() const;

    // Same lines with the range shrunk to the largest nonzero |offset|.
    LineSpectrum trimmed() const;

private:
    double spacing_hz_;
    int half_width_;
    std::vector<Complex> amplitudes_;
};

// Photonic sampling pulse train seen as an optical frequency comb.
class OpticalComb
{
public:
    OpticalComb(double center_freq_hz, LineSpectrum lines);

    double center_freq_hz() const { return center_freq_hz_; }
    double line_spacing_hz() const { return lines_.spacing_hz(); }
    int half_width() const { return lines_.half_width(); }
    Complex amplitude(int offset) const { return lines_.at(offset); }
    const LineSpectrum &lines() const { return lines_; }

private:
    double center_freq_hz_;
    LineSpectrum lines_;
};

// `num_lines` equal field amplitudes centred on the carrier.
OpticalComb uniform_comb(int num_lines, double spacing_hz, double center_hz, double amplitude);

// Comb built from explicit real line amplitudes (odd count, centred).
OpticalComb comb_from_amplitudes(std::span<const double> amplitudes, double spacing_hz, double center_hz);

// Optical bandpass filter as per-line field weights in [0, 1]; missing keys block the line.
// Throws EmptyCombError if nothing survives.
OpticalComb apply_obpf(const OpticalComb &comb, const std::map<int, double> &weights);

// Complex-baseband envelope: sum_r a_r exp(j 2 pi r spacing t).
Complex field_waveform(const LineSpectrum &spectrum, double t);
inline Complex field_waveform(const OpticalComb &comb, double t) { return field_waveform(comb.lines(), t); }

} // namespace cipadc

#endif // CIPADC_COMB_HPP
