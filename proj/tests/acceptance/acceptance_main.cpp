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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "cipadc/detection.hpp"
#include "cipadc/oracle.hpp"
#include "cipadc/otdm.hpp"
#include "cipadc/response.hpp"
#include "cipadc/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace cipadc;

namespace
{
constexpr double kPi = std::numbers::pi;

struct Outcome
{
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string &what)
    {
        if (!ok)
        {
            if (!pass)
                detail << "; ";
            detail << what;
            pass = false;
        }
    }
};

std::string bandwidth_text(const FrequencyResponse &r)
{
    std::ostringstream s;
    if (r.exceeds_sweep)
        s << "exceeds " << r.sweep_max_hz / 1e9 << " GHz";
    else
        s << r.analog_bandwidth_hz / 1e9 << " GHz";
    return s.str();
}

void expect_bandwidth(Outcome &o, const char *preset, double expected_hz)
{
    const FrequencyResponse r = sweep(preset_scenario(preset));
    const bool ok = !r.exceeds_sweep && r.analog_bandwidth_hz == expected_hz;
    o.require(ok, std::string(preset) + " gave " + bandwidth_text(r));
    if (ok)
        o.detail << preset << "=" << bandwidth_text(r) << " ";
}

void expect_exceeds(Outcome &o, const char *preset)
{
    const FrequencyResponse r = sweep(preset_scenario(preset));
    const bool ok = r.exceeds_sweep && r.sweep_max_hz == 43.5e9;
    o.require(ok, std::string(preset) + " gave " + bandwidth_text(r));
    if (ok)
        o.detail << preset << "=" << bandwidth_text(r) << " ";
}

// Line amplitudes of the channel-1 field read off a DFT of the windowed time signal.
std::vector<Complex> time_domain_lines(int half_width, int stages)
{
    const double fs = 10e9 * (1 << stages);
    const int N = 1 << stages;
    const int R = N * half_width + N - 1;
    const int K = 4 * (2 * R + 1);
    const double period = N / fs;
    std::vector<Complex> samples(static_cast<std::size_t>(K));
    for (int i = 0; i < K; ++i)
    {
        const double t = period * i / K;
        Complex field{};
        for (int m = -half_width; m <= half_width; ++m)
            field += std::polar(1.0, 2.0 * kPi * m * fs * t);
        double h = 1.0;
        for (int s = 1; s <= stages; ++s)
            h *= 0.5 * (1.0 + std::cos(2.0 * kPi * (fs / (1 << s)) * t));
        samples[static_cast<std::size_t>(i)] = field * h;
    }
    std::vector<Complex> lines;
    for (int r = -R - 2; r <= R + 2; ++r)
    {
        Complex acc{};
        for (int i = 0; i < K; ++i)
            acc += samples[static_cast<std::size_t>(i)] * std::polar(1.0, -2.0 * kPi * r * i / K);
        lines.push_back(acc / static_cast<double>(K));
    }
    return lines;
}

Outcome ac1()
{
    Outcome o;
    expect_bandwidth(o, "fig7a-3line", 15e9);
    SimScenario tri = preset_scenario("fig7a-3line");
    tri.approximation = Approximation::triangular_gk;
    const FrequencyResponse r = sweep(tri);
    o.require(!r.exceeds_sweep && r.analog_bandwidth_hz == 15e9, "triangular form gave " + bandwidth_text(r));
    return o;
}

Outcome ac2()
{
    Outcome o;
    expect_bandwidth(o, "fig7a-7line", 35e9);
    expect_exceeds(o, "fig7a-15line");
    return o;
}

Outcome ac3()
{
    Outcome o;
    expect_bandwidth(o, "fig7b-3line", 35e9);
    expect_exceeds(o, "fig7b-7line");
    expect_exceeds(o, "fig7c-4ch-3line");
    return o;
}

Outcome ac4()
{
    Outcome o;
    expect_bandwidth(o, "fig8-single-20g", 30e9);
    expect_bandwidth(o, "fig8-two-channel-20g", 35e9);
    expect_bandwidth(o, "fig8b-single-channel", 30e9);
    expect_bandwidth(o, "fig8b-two-channel", 35e9);
    const HarmonicSpectrum single = scenario_harmonics(preset_scenario("fig8-single-20g"));
    const HarmonicSpectrum dual = scenario_harmonics(preset_scenario("fig8-two-channel-20g"));
    for (int k = 0; k < single.num_lines(); ++k)
        o.require(dual.ratio(2 * k) >= single.ratio(k), "two-channel g below single-channel at k=" + std::to_string(k));
    return o;
}

Outcome ac5()
{
    Outcome o;
    const double fs3 = 10e9;
    const OpticalComb three = uniform_comb(3, fs3, 0.0, 1.0);
    o.require(demultiplex(three, OtdmChain::ideal(fs3, 1), 1).lines.nonzero_count(1e-12) == 3, "3 lines unswitched");
    o.require(demultiplex(uniform_comb(3, 2 * fs3, 0.0, 1.0), OtdmChain::ideal(2 * fs3, 2), 1).lines.nonzero_count(1e-12) ==
                  7,
              "3 lines after one stage");
    o.require(demultiplex(uniform_comb(3, 4 * fs3, 0.0, 1.0), OtdmChain::ideal(4 * fs3, 4), 1).lines.nonzero_count(1e-12) ==
                  15,
              "3 lines after two stages");

    int cases = 0;
    for (int L = 0; L <= 8; ++L)
        for (int S = 0; S <= 4; ++S)
        {
            const auto brute = time_domain_lines(L, S);
            int counted = 0;
            for (const auto &v : brute)
                counted += std::abs(v) > 1e-9;
            const double fs = 10e9 * (1 << S);
            const GridSpectrum d = demultiplex(uniform_comb(2 * L + 1, fs, 0.0, 1.0), OtdmChain::ideal(fs, 1 << S), 1);
            const int analytic = d.lines.nonzero_count(1e-12);
            const bool ok = counted == line_count(L, S) && analytic == counted;
            o.require(ok, "L=" + std::to_string(L) + " S=" + std::to_string(S) + " brute=" + std::to_string(counted) +
                              " law=" + std::to_string(line_count(L, S)) + " demux=" + std::to_string(analytic));
            ++cases;
        }
    if (o.pass)
        o.detail << "3->7->15, " << cases << " (L,S) cases match the time-domain count";
    return o;
}

Outcome ac6()
{
    Outcome o;
    double worst = 0.0;
    std::size_t compared = 0;
    for (const auto &p : list_presets())
    {
        const SimScenario s = preset_scenario(p.name);
        const std::vector<double> grid = s.sweep.points();
        double previous = 0.0;
        for (double alpha : {0.1, 0.05, 0.01})
        {
            OracleConfig cfg;
            cfg.alpha = alpha;
            const OracleComparison c = compare_response(s, grid, cfg);
            if (alpha == 0.05)
            {
                worst = std::max(worst, c.max_deviation_db);
                compared += c.compared;
                o.require(c.max_deviation_db < 0.1, p.name + " deviates " + std::to_string(c.max_deviation_db) + " dB");
                o.require(c.compared > 0, p.name + " had nothing to compare");
            }
            // Deviations sit at rounding level, so a 1e-9 dB floor absorbs ties.
            if (alpha != 0.1)
                o.require(c.max_deviation_db <= previous + 1e-9, p.name + " deviation grew as alpha shrank");
            previous = c.max_deviation_db;
        }
    }
    if (o.pass)
        o.detail << compared << " points, max deviation " << worst << " dB at alpha=0.05";
    return o;
}

Outcome ac7()
{
    Outcome o;
    double worst = 0.0;
    for (const auto &p : list_presets())
    {
        const SimScenario s = preset_scenario(p.name);
        const HarmonicSpectrum g = scenario_harmonics(s);
        const OracleSetup setup = OracleSetup::from_scenario(s);
        for (int ch = 1; ch <= s.num_channels(); ++ch)
        {
            const SampledSeries d = synthesize_dense_photocurrent(setup, ch, {}, OracleConfig{});
            const double dc = tone_magnitude(d, 0.0);
            for (int k = 1; k < g.num_lines(); ++k)
            {
                const double ratio = tone_magnitude(d, k * g.delta_hz()) / 2.0 / dc;
                const double rel = std::abs(ratio - g.ratio(k)) / g.ratio(k);
                worst = std::max(worst, rel);
                o.require(rel <= 1e-9, p.name + " ch" + std::to_string(ch) + " k=" + std::to_string(k));
            }
        }
    }

    const OpticalComb comb = uniform_comb(3, 20e9, 0.0, 1.0);
    const OracleSetup setup{comb, OtdmChain::ideal(20e9, 2), DetectionParams::for_channel_rate(10e9)};
    const SampledSeries d = synthesize_dense_photocurrent(setup, 1, {}, OracleConfig{});
    const double expect[] = {5.5, 5, 4, 3, 2, 1, 0.25};
    const double scale = tone_magnitude(d, 0.0) / 5.5;
    for (int k = 0; k < 7; ++k)
    {
        const double m = tone_magnitude(d, k * 10e9) / (k == 0 ? 1.0 : 2.0);
        o.require(std::abs(m - expect[k] * scale) <= 1e-9 * expect[k] * scale,
                  "edge-halved pattern at k=" + std::to_string(k));
    }
    o.require(std::abs(scale - 0.25) < 1e-12, "edge-halved scale");
    if (o.pass)
        o.detail << "max relative error " << worst << "; (5.5,5,4,3,2,1,0.25)*" << scale;
    return o;
}

Outcome ac8()
{
    Outcome o;
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    // Autocorrelation bound.
    std::uniform_int_distribution<int> half(0, 15);
    for (int trial = 0; trial < 1000; ++trial)
    {
        const int R = half(rng);
        std::vector<Complex> a(static_cast<std::size_t>(2 * R + 1));
        for (auto &v : a)
            v = unit(rng);
        a[static_cast<std::size_t>(R)] += 0.1;
        const HarmonicSpectrum g = beat_harmonics(LineSpectrum(1e9, a));
        for (int k = 1; k < g.num_lines(); ++k)
            o.require(g.at(k) <= g.g0(), "autocorrelation bound, trial " + std::to_string(trial));
    }

    for (const auto &p : list_presets())
    {
        const SimScenario s = preset_scenario(p.name);

        // Channel magnitude invariance.
        const GridSpectrum ref = demultiplex(s.comb, s.chain, 1);
        for (int n = 2; n <= s.num_channels(); ++n)
        {
            const GridSpectrum d = demultiplex(s.comb, s.chain, n);
            bool same = d.lines.size() == ref.lines.size();
            for (int r = -ref.lines.half_width(); same && r <= ref.lines.half_width(); ++r)
                same = std::abs(std::abs(d.lines.at(r)) - std::abs(ref.lines.at(r))) <= 1e-12;
            o.require(same, p.name + " channel " + std::to_string(n) + " magnitudes differ");
        }

        // Interleaving invariance and step constancy.
        const HarmonicSpectrum g = scenario_harmonics(s);
        const double delta = g.delta_hz();
        for (int trial = 0; trial < 200; ++trial)
        {
            const double f0 = 1e6 + unit(rng) * 60e9;
            const ResponsePoint before = channel_output(g, f0, s.detection);
            const ResponsePoint after = interleave(before, s.num_channels(), s.sampling_rate_hz());
            o.require(std::memcmp(&before.power_db_rel, &after.power_db_rel, sizeof(double)) == 0,
                      p.name + " interleave changed the level");
            const double lo = std::max(1e3, (before.k0 - 0.5) * delta);
            const double hi = (before.k0 + 0.5) * delta;
            const double f1 = lo + (0.001 + 0.998 * unit(rng)) * (hi - lo);
            o.require(channel_output(g, f1, s.detection).power_db_rel == before.power_db_rel,
                      p.name + " step not constant");
        }
    }

    // Complementary ports.
    for (int trial = 0; trial < 200; ++trial)
    {
        MzmStage st = MzmStage::ideal(5e9);
        st.alpha_max = 0.1 + 0.9 * unit(rng);
        st.mu = 0.1 + 0.9 * unit(rng);
        st.driver_phase_rad = 2.0 * kPi * unit(rng);
        const double t = unit(rng) * 1e-9;
        const double sum = switching_window(st, Port::bar, t) + switching_window(st, Port::cross, t);
        o.require(std::abs(sum - st.alpha_max) <= 1e-15, "bar + cross != alpha_max");
        st.extinction_ratio = 10.0 + 1000.0 * unit(rng);
        const double finite = switching_window(st, Port::bar, t) + switching_window(st, Port::cross, t);
        o.require(std::abs(finite - st.alpha_max * (1.0 + 1.0 / st.extinction_ratio)) <= 1e-15,
                  "finite-extinction port sum");
    }

    // Finite extinction converges to the ideal demultiplexed spectrum.
    const double fs = 40e9;
    const OpticalComb comb = uniform_comb(5, fs, 0.0, 1.0);
    const GridSpectrum ideal = demultiplex(comb, OtdmChain::ideal(fs, 4), 1);
    double previous = 1e300;
    for (double eps : {1e2, 1e4, 1e6})
    {
        std::vector<MzmStage> stages;
        for (int s = 1; s <= 2; ++s)
        {
            MzmStage st = MzmStage::ideal(fs / (1 << s));
            st.extinction_ratio = eps;
            stages.push_back(st);
        }
        const GridSpectrum d = demultiplex(comb, OtdmChain(fs, stages), 1);
        double err = 0.0;
        for (int r = -ideal.lines.half_width(); r <= ideal.lines.half_width(); ++r)
            err = std::max(err, std::abs(d.lines.at(r) - ideal.lines.at(r)));
        o.require(err < previous && err <= 2.0 / eps, "extinction " + std::to_string(eps) + " error " +
                                                          std::to_string(err));
        previous = err;
    }
    if (o.pass)
        o.detail << "bound, channel invariance, interleave, steps, port sum, extinction convergence";
    return o;
}

struct Criterion
{
    const char *id;
    const char *title;
    double budget_s;
    std::function<Outcome()> check;
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {"AC1", "single channel, 3 lines: 15 GHz", 1.0, ac1},
        {"AC2", "single channel, 7/15 lines: 35 GHz / exceeds", 1.0, ac2},
        {"AC3", "two and four channels: 35 GHz / exceeds / exceeds", 1.0, ac3},
        {"AC4", "20 GSa/s single vs two channel: 30 vs 35 GHz", 1.0, ac4},
        {"AC5", "line-count law vs time-domain count", 5.0, ac5},
        {"AC6", "oracle equivalence < 0.1 dB, alpha monotone", 60.0, ac6},
        {"AC7", "harmonic-spectrum equivalence 1e-9", 5.0, ac7},
        {"AC8", "property suites", 10.0, ac8},
    };

    int failures = 0;
    for (const auto &c : criteria)
    {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try
        {
            o = c.check();
        }
        catch (const std::exception &e)
        {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > c.budget_s)
            o.require(false, "took " + std::to_string(elapsed) + " s, budget " + std::to_string(c.budget_s) + " s");
        failures += !o.pass;
        std::printf("%s %s: %s (%.3f s) %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, elapsed, o.detail.str().c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
