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

#include "cipadc/oracle.hpp"
#include "cipadc/errors.hpp"
#include "cipadc/response.hpp"
#include "cipadc/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <string>
#include <thread>

namespace cipadc
{
namespace
{
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Integer multiple of `quantum`, or GridMismatchError. Never rounds silently.
long long grid_index(double freq_hz, double quantum_hz, std::string_view what)
{
    const double q = freq_hz / quantum_hz;
    const double r = std::round(q);
    if (std::abs(q - r) > 1e-9 * std::max(1.0, std::abs(q)))
        throw GridMismatchError(std::string(what) + " " + std::to_string(freq_hz) +
                                " Hz is not a multiple of the oracle resolution " + std::to_string(quantum_hz) + " Hz");
    return static_cast<long long>(r);
}

void check_commensurate(const OracleSetup &setup, std::span<const Tone> tones, const OracleConfig &cfg)
{
    const double base = cfg.base_resolution_hz;
    grid_index(setup.comb.line_spacing_hz(), base, "comb spacing");
    grid_index(setup.chain.channel_rate_hz(), base, "channel rate");
    for (const auto &stage : setup.chain.stages())
        grid_index(stage.driver_freq_hz, base, "driver frequency");
    for (const auto &tone : tones)
        grid_index(tone.freq_hz, base, "tone frequency");
}

// Whole switching tree seen by channel 1, as a time function.
double channel_one_window(const OtdmChain &chain, double t)
{
    double h = 1.0;
    for (const auto &stage : chain.stages())
        h *= switching_window(stage, Port::bar, t);
    return h;
}

struct DenseRecord
{
    double rate_hz;
    long long samples_per_eadc_period;
};

DenseRecord dense_rate(const OracleSetup &setup, const ComponentSet &field, const OracleConfig &cfg)
{
    double f_max = 0.0;
    for (const auto &c : field.components)
        if (c.amplitude != Complex{})
            f_max = std::max(f_max, std::abs(c.offset_hz));
    for (const auto &stage : setup.chain.stages())
        f_max += stage.driver_freq_hz;
    const double delta = setup.chain.channel_rate_hz();
    const long long ratio = std::max(1LL, static_cast<long long>(std::ceil(cfg.oversample_factor * f_max / delta)));
    return {static_cast<double>(ratio) * delta, ratio};
}

} // namespace

void OracleConfig::validate() const
{
    if (!(base_resolution_hz > 0.0) || !std::isfinite(base_resolution_hz))
        throw InvalidArgument("base resolution must be positive");
    if (oversample_factor < 8)
        throw InvalidArgument("oversample factor must be at least 8");
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw InvalidArgument("oracle alpha must lie in (0, 1]");
}

OracleSetup OracleSetup::from_scenario(const SimScenario &scenario)
{
    return {scenario.comb, scenario.chain, scenario.detection};
}

SampledSeries synthesize_dense_photocurrent(const OracleSetup &setup, int channel, std::span<const Tone> tones,
                                            const OracleConfig &cfg)
{
    cfg.validate();
    if (channel < 1 || channel > setup.chain.num_channels())
        throw InvalidArgument("channel " + std::to_string(channel) + " out of range");
    check_commensurate(setup, tones, cfg);

    // Modulated field; without tones it is just the comb.
    ComponentSet field = tones.empty() ? ComponentSet{} : modulate(setup.comb, ToneSet(std::vector<Tone>(tones.begin(), tones.end())));
    if (tones.empty())
    {
        const int L = setup.comb.half_width();
        for (int m = -L; m <= L; ++m)
            field.components.push_back({m * setup.comb.line_spacing_hz(), setup.comb.amplitude(m),
                                        ComponentKind::carrier, m, -1});
    }

    const DenseRecord rec = dense_rate(setup, field, cfg);
    const long long n = grid_index(rec.rate_hz, cfg.base_resolution_hz, "dense sample rate");
    const double delay = (channel - 1) * setup.chain.sample_period_s();
    const double scale = setup.detection.photocurrent_scale();

    SampledSeries out;
    out.sample_rate_hz = rec.rate_hz;
    out.start_time_s = delay;
    out.samples.resize(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i)
    {
        const double local = static_cast<double>(i) / rec.rate_hz;
        // Channel n sees the channel-1 window delayed by (n-1) T_S.
        const Complex v = field.field_at(delay + local) * channel_one_window(setup.chain, local);
        out.samples[static_cast<std::size_t>(i)] = scale * std::norm(v);
    }
    return out;
}

SampledSeries synthesize_photocurrent(const OracleSetup &setup, int channel, std::span<const Tone> tones,
                                      const OracleConfig &cfg)
{
    const SampledSeries dense = synthesize_dense_photocurrent(setup, channel, tones, cfg);
    const double base = cfg.base_resolution_hz;
    const double delta = setup.chain.channel_rate_hz();
    const auto n = static_cast<long long>(dense.samples.size());

    // Rectangular photodetector: keep the DFT bins with |f| <= cutoff, drop the rest.
    std::vector<std::pair<long long, Complex>> kept;
    for (long long j = -n / 2; j <= n / 2; ++j)
    {
        if (2 * std::abs(j) == n && j < 0)
            continue;
        const double f = std::abs(static_cast<double>(j)) * base;
        if (!pd_passes(f, setup.detection))
            continue;
        Complex acc{};
        for (long long i = 0; i < n; ++i)
        {
            const double phase = -kTwoPi * static_cast<double>((j * i) % n) / static_cast<double>(n);
            acc += dense.samples[static_cast<std::size_t>(i)] * std::polar(1.0, phase);
        }
        kept.emplace_back(j, acc / static_cast<double>(n));
    }

    const long long m_count = grid_index(delta, base, "channel rate");
    SampledSeries out;
    out.sample_rate_hz = delta;
    out.start_time_s = dense.start_time_s;
    out.samples.resize(static_cast<std::size_t>(m_count));
    for (long long m = 0; m < m_count; ++m)
    {
        Complex acc{};
        for (const auto &[j, x] : kept)
        {
            // EADC sample m sits at dense index m * (dense_rate / delta).
            const double phase = kTwoPi * static_cast<double>(((j % m_count) + m_count) % m_count * m % m_count) /
                                 static_cast<double>(m_count);
            acc += x * std::polar(1.0, phase);
        }
        out.samples[static_cast<std::size_t>(m)] = acc.real();
    }
    return out;
}

SampledSeries synthesize_photocurrent(const SimScenario &scenario, int channel, std::optional<double> tone_hz,
                                      const OracleConfig &cfg)
{
    std::vector<Tone> tones;
    if (tone_hz)
        tones.push_back({*tone_hz, cfg.alpha});
    return synthesize_photocurrent(OracleSetup::from_scenario(scenario), channel, tones, cfg);
}

double tone_magnitude(std::span<const double> samples, double sample_rate_hz, double target_hz)
{
    if (samples.empty() || !(sample_rate_hz > 0.0))
        throw InvalidArgument("tone_magnitude needs a non-empty series and a positive rate");
    const auto n = static_cast<long long>(samples.size());
    const double bin_width = sample_rate_hz / static_cast<double>(n);
    if (!(target_hz >= 0.0) || target_hz > sample_rate_hz / 2.0 * (1.0 + 1e-12))
        throw InvalidArgument("target frequency must lie in [0, rate/2]");
    const long long bin = grid_index(target_hz, bin_width, "target");

    Complex acc{};
    for (long long i = 0; i < n; ++i)
    {
        const double phase = -kTwoPi * static_cast<double>((bin * i) % n) / static_cast<double>(n);
        acc += samples[static_cast<std::size_t>(i)] * std::polar(1.0, phase);
    }
    const double mag = std::abs(acc) / static_cast<double>(n);
    // DC and the Nyquist bin have no mirror image to fold in.
    const bool unpaired = bin == 0 || 2 * bin == n;
    return unpaired ? mag : 2.0 * mag;
}

OracleComparison compare_response(const SimScenario &scenario, std::span<const double> f0_grid,
                                  const OracleConfig &cfg, int channel)
{
    cfg.validate();
    const OracleSetup setup = OracleSetup::from_scenario(scenario);
    const double base = cfg.base_resolution_hz;
    const double delta = scenario.channel_rate_hz();
    for (double f0 : f0_grid)
        grid_index(f0, base, "sweep frequency");

    const FrequencyResponse analytic = sweep(scenario, f0_grid);

    // Baseband reference: the lowest on-grid tone, which always beats against g_0.
    const double f_ref = base;
    if (!(f_ref < delta / 2.0))
        throw GridMismatchError("oracle resolution must be finer than half the channel rate");
    const Tone ref_tone{f_ref, cfg.alpha};
    const double ref_mag = tone_magnitude(synthesize_photocurrent(setup, channel, {&ref_tone, 1}, cfg), f_ref);

    OracleComparison out;
    out.oracle_db.resize(f0_grid.size());
    out.deviation_db.resize(f0_grid.size());

    auto evaluate = [&](std::size_t i) {
        const ResponsePoint &p = analytic.points[i];
        if (p.flag != PointFlag::ok)
            return;
        // Alias at DC merges with the carrier power and depends on sampling phase.
        if (nearest_harmonic(p.f0_hz, delta).distance_hz == 0.0)
            return;
        const Tone tone{p.f0_hz, cfg.alpha};
        const SampledSeries series = synthesize_photocurrent(setup, channel, {&tone, 1}, cfg);
        const double db = 10.0 * std::log10(tone_magnitude(series, p.alias_channel_hz) / ref_mag);
        out.oracle_db[i] = db;
        out.deviation_db[i] = std::abs(db - p.power_db_rel);
    };

    // Points are independent; each worker owns a strided subset of indices.
    const std::size_t workers =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(1, f0_grid.size()));
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w)
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < f0_grid.size(); i += workers)
                evaluate(i);
        }));
    for (auto &j : jobs)
        j.get();

    for (const auto &d : out.deviation_db)
    {
        if (!d)
            continue;
        ++out.compared;
        out.max_deviation_db = std::max(out.max_deviation_db, *d);
    }
    return out;
}

double max_response_deviation_db(const SimScenario &scenario, std::span<const double> f0_grid,
                                 const OracleConfig &cfg, int channel)
{
    return compare_response(scenario, f0_grid, cfg, channel).max_deviation_db;
}

} // namespace cipadc
