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

#include "catch_amalgamated.hpp"

#include "cipadc/detection.hpp"
#include "cipadc/errors.hpp"
#include "cipadc/otdm.hpp"

#include <cmath>
#include <random>

using namespace cipadc;
using Catch::Approx;

TEST_CASE("beat_harmonics examples")
{
    const HarmonicSpectrum one = beat_harmonics(LineSpectrum(10e9, {1.0}));
    REQUIRE(one.num_lines() == 1);
    CHECK(one.g0() == 1.0);

    const HarmonicSpectrum three = beat_harmonics(uniform_comb(3, 10e9, 0.0, 1.0));
    REQUIRE(three.num_lines() == 3);
    CHECK(three.at(0) == Approx(3.0));
    CHECK(three.at(1) == Approx(2.0));
    CHECK(three.at(2) == Approx(1.0));
    CHECK(three.delta_hz() == 10e9);

    // Brute-force autocorrelation of (0.5, 1, 1, 1, 1, 1, 0.5).
    const HarmonicSpectrum seven = beat_harmonics(LineSpectrum(5e9, {0.5, 1, 1, 1, 1, 1, 0.5}));
    const std::vector<double> expect{5.5, 5, 4, 3, 2, 1, 0.25};
    REQUIRE(seven.num_lines() == 7);
    CHECK(seven.k_max() == 6);
    for (int k = 0; k < 7; ++k)
        CHECK(seven.at(k) == Approx(expect[static_cast<std::size_t>(k)]).epsilon(1e-15));
}

TEST_CASE("beat_harmonics trims empty edges")
{
    const HarmonicSpectrum g = beat_harmonics(LineSpectrum(1e9, {0.0, 1.0, 1.0, 1.0, 0.0}));
    CHECK(g.num_lines() == 3);
    CHECK_THROWS_AS(beat_harmonics(LineSpectrum(1e9, {0.0, 0.0, 0.0})), InvalidArgument);
}

TEST_CASE("triangular_gk")
{
    const HarmonicSpectrum g3 = triangular_gk(3, 10e9);
    CHECK(g3.ratio(0) == 1.0);
    CHECK(g3.ratio(1) == Approx(2.0 / 3.0));
    CHECK(g3.ratio(2) == Approx(1.0 / 3.0));
    CHECK(triangular_gk(1, 10e9).num_lines() == 1);

    const HarmonicSpectrum g7 = triangular_gk(7, 10e9);
    CHECK(g7.ratio(1) == Approx(6.0 / 7.0));
    CHECK(g7.ratio(6) == Approx(1.0 / 7.0));
    CHECK(g7.ratio(3) >= 0.5);
    CHECK(g7.ratio(4) < 0.5);
    CHECK_THROWS_AS(triangular_gk(0, 10e9), InvalidArgument);
}

TEST_CASE("pd_passes is a closed rectangular low-pass")
{
    DetectionParams p = DetectionParams::for_channel_rate(10e9);
    CHECK(p.pd_cutoff_hz == 5e9);
    CHECK(pd_passes(2e9, p));
    CHECK(pd_passes(5e9, p));
    CHECK_FALSE(pd_passes(7e9, p));
    CHECK(pd_passes(0.0, p));
    CHECK_THROWS_AS(pd_passes(-1.0, p), InvalidArgument);
    p.responsivity_a_per_w = 0.0;
    CHECK_THROWS_AS(p.validate(), InvalidArgument);
}

TEST_CASE("autocorrelation bound and g_0 identity on random line sets")
{
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> amp(0.0, 1.0);
    std::uniform_int_distribution<int> half(0, 12);
    for (int trial = 0; trial < 1000; ++trial)
    {
        const int R = half(rng);
        std::vector<Complex> a(static_cast<std::size_t>(2 * R + 1));
        for (auto &v : a)
            v = amp(rng);
        a[static_cast<std::size_t>(R)] = 0.5 + amp(rng);
        const LineSpectrum s(10e9, a);
        const HarmonicSpectrum g = beat_harmonics(s);
        CHECK(g.g0() == Approx(s.total_power()).epsilon(1e-15));
        for (int k = 0; k < g.num_lines(); ++k)
            CHECK(g.at(k) <= g.g0() * (1.0 + 1e-15));
    }
}

TEST_CASE("complex amplitudes use the conjugated autocorrelation")
{
    const LineSpectrum s(1e9, {Complex{0.0, 1.0}, Complex{1.0, 0.0}, Complex{0.0, -1.0}});
    const HarmonicSpectrum g = beat_harmonics(s);
    // k=1: conj(j)*1 + conj(1)*(-j) = -2j ; k=2: conj(j)*(-j) = -1
    CHECK(g.at(0) == Approx(3.0));
    CHECK(g.at(1) == Approx(2.0));
    CHECK(g.at(2) == Approx(1.0));
}

TEST_CASE("exact g_k after one stage stays within 1.1 dB of the triangular form")
{
    for (int L = 1; L <= 8; ++L)
    {
        const double fs = 20e9;
        const GridSpectrum demux = demultiplex(uniform_comb(2 * L + 1, fs, 0.0, 1.0), OtdmChain::ideal(fs, 2), 1);
        const HarmonicSpectrum exact = beat_harmonics(demux);
        const int M = 4 * L + 3;
        REQUIRE(exact.num_lines() == M);
        const HarmonicSpectrum tri = triangular_gk(M, demux.grid_spacing_hz());
        for (int k = 0; 2 * k <= M; ++k)
        {
            const double diff_db = std::abs(10.0 * std::log10(exact.ratio(k) / tri.ratio(k)));
            CHECK(diff_db <= 1.1);
        }
    }
}

TEST_CASE("harmonic weights do not depend on the channel")
{
    const double fs = 40e9;
    const OtdmChain chain = OtdmChain::ideal(fs, 4);
    const OpticalComb comb = comb_from_amplitudes(std::vector<double>{0.4, 0.9, 1.0, 0.7, 0.3}, fs, 0.0);
    const HarmonicSpectrum ref = beat_harmonics(demultiplex(comb, chain, 1));
    for (int n = 2; n <= 4; ++n)
    {
        const HarmonicSpectrum g = beat_harmonics(demultiplex(comb, chain, n));
        REQUIRE(g.num_lines() == ref.num_lines());
        for (int k = 0; k < g.num_lines(); ++k)
            CHECK(std::abs(g.at(k) - ref.at(k)) <= 1e-12 * ref.g0());
    }
}
