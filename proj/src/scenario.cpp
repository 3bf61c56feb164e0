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

#include "cipadc/scenario.hpp"
#include "cipadc/errors.hpp"

#include <json.hpp>

#include <array>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <optional>
#include <sstream>

namespace cipadc
{
namespace
{
using nlohmann::json;

void reject_unknown_keys(const json &obj, std::string_view where, std::initializer_list<std::string_view> allowed)
{
    if (!obj.is_object())
        throw ValidationError(std::string(where) + " must be an object");
    for (const auto &item : obj.items())
    {
        bool known = false;
        for (auto key : allowed)
            known = known || item.key() == key;
        if (!known)
            throw ValidationError("unknown key \"" + item.key() + "\" in " + std::string(where));
    }
}

std::string path_of(std::string_view where, std::string_view key)
{
    return where.empty() ? std::string(key) : std::string(where) + "." + std::string(key);
}

std::optional<double> get_number(const json &obj, std::string_view where, std::string_view key)
{
    auto it = obj.find(key);
    if (it == obj.end())
        return std::nullopt;
    if (!it->is_number())
        throw ValidationError(path_of(where, key) + " must be a number");
    const double v = it->get<double>();
    if (!std::isfinite(v))
        throw ValidationError(path_of(where, key) + " must be finite");
    return v;
}

std::optional<int> get_int(const json &obj, std::string_view where, std::string_view key)
{
    auto it = obj.find(key);
    if (it == obj.end())
        return std::nullopt;
    if (!it->is_number_integer())
        throw ValidationError(path_of(where, key) + " must be an integer");
    const auto v = it->get<long long>();
    if (v < -1000000 || v > 1000000)
        throw ValidationError(path_of(where, key) + " is out of range");
    return static_cast<int>(v);
}

std::optional<std::string> get_string(const json &obj, std::string_view where, std::string_view key)
{
    auto it = obj.find(key);
    if (it == obj.end())
        return std::nullopt;
    if (!it->is_string())
        throw ValidationError(path_of(where, key) + " must be a string");
    return it->get<std::string>();
}

const json &require_object(const json &root, std::string_view key)
{
    auto it = root.find(key);
    if (it == root.end())
        throw ValidationError("missing required section \"" + std::string(key) + "\"");
    return *it;
}

OpticalComb parse_comb(const json &node)
{
    reject_unknown_keys(node, "comb", {"num_lines", "spacing_hz", "center_hz", "amplitude", "amplitudes"});
    const auto num_lines = get_int(node, "comb", "num_lines");
    const auto spacing = get_number(node, "comb", "spacing_hz");
    if (!num_lines)
        throw ValidationError("comb.num_lines is required");
    if (!spacing)
        throw ValidationError("comb.spacing_hz is required");
    if (*num_lines < 1 || *num_lines % 2 == 0)
        throw ValidationError("comb.num_lines must be odd and positive");
    if (!(*spacing > 0.0))
        throw ValidationError("comb.spacing_hz must be positive");
    const double center = get_number(node, "comb", "center_hz").value_or(0.0);
    if (!(center >= 0.0))
        throw ValidationError("comb.center_hz must be non-negative");

    if (auto it = node.find("amplitudes"); it != node.end())
    {
        if (node.contains("amplitude"))
            throw ValidationError("comb.amplitude and comb.amplitudes are mutually exclusive");
        if (!it->is_array() || it->size() != static_cast<std::size_t>(*num_lines))
            throw ValidationError("comb.amplitudes must be an array of num_lines numbers");
        std::vector<double> amps;
        for (const auto &v : *it)
        {
            if (!v.is_number() || !(v.get<double>() >= 0.0))
                throw ValidationError("comb.amplitudes entries must be non-negative numbers");
            amps.push_back(v.get<double>());
        }
        try
        {
            return comb_from_amplitudes(amps, *spacing, center);
        }
        catch (const EmptyCombError &)
        {
            throw ValidationError("comb.amplitudes must contain at least one nonzero line");
        }
    }
    const double amplitude = get_number(node, "comb", "amplitude").value_or(1.0);
    if (!(amplitude > 0.0))
        throw ValidationError("comb.amplitude must be positive");
    return uniform_comb(*num_lines, *spacing, center, amplitude);
}

MzmStage parse_stage(const json &node, double driver_freq_hz, std::size_t index)
{
    const std::string where = "otdm.stages[" + std::to_string(index) + "]";
    reject_unknown_keys(node, where, {"extinction_db", "mu", "alpha_max", "driver_phase_rad"});
    MzmStage stage = MzmStage::ideal(driver_freq_hz);
    if (auto it = node.find("extinction_db"); it != node.end())
    {
        if (it->is_null() || (it->is_string() && it->get<std::string>() == "infinite"))
            stage.extinction_ratio = MzmStage::kInfiniteExtinction;
        else if (it->is_number() && it->get<double>() > 0.0)
            stage.extinction_ratio = extinction_from_db(it->get<double>());
        else
            throw ValidationError(where + ".extinction_db must be a positive number, null or \"infinite\"");
    }
    stage.mu = get_number(node, where, "mu").value_or(1.0);
    stage.alpha_max = get_number(node, where, "alpha_max").value_or(1.0);
    stage.driver_phase_rad = get_number(node, where, "driver_phase_rad").value_or(0.0);
    if (!(stage.mu > 0.0 && stage.mu <= 1.0))
        throw ValidationError(where + ".mu must lie in (0, 1]");
    if (!(stage.alpha_max > 0.0 && stage.alpha_max <= 1.0))
        throw ValidationError(where + ".alpha_max must lie in (0, 1]");
    return stage;
}

OtdmChain parse_otdm(const json &node, double sampling_rate_hz)
{
    reject_unknown_keys(node, "otdm", {"num_channels", "stages"});
    const auto n = get_int(node, "otdm", "num_channels");
    if (!n)
        throw ValidationError("otdm.num_channels is required");
    if (*n < 1 || (*n & (*n - 1)) != 0)
        throw ValidationError("num_channels must be a power of two");
    int num_stages = 0;
    while ((1 << num_stages) < *n)
        ++num_stages;

    std::vector<MzmStage> stages;
    double f = sampling_rate_hz;
    auto it = node.find("stages");
    if (it != node.end())
    {
        if (!it->is_array())
            throw ValidationError("otdm.stages must be an array");
        if (it->size() != static_cast<std::size_t>(num_stages))
            throw ValidationError("otdm.stages must list log2(num_channels) = " + std::to_string(num_stages) +
                                  " stages");
    }
    for (int s = 0; s < num_stages; ++s)
    {
        f /= 2.0;
        if (it != node.end())
            stages.push_back(parse_stage((*it)[static_cast<std::size_t>(s)], f, static_cast<std::size_t>(s)));
        else
            stages.push_back(MzmStage::ideal(f));
    }
    return {sampling_rate_hz, std::move(stages)};
}

DetectionParams parse_detection(const json *node, double channel_rate_hz)
{
    DetectionParams p = DetectionParams::for_channel_rate(channel_rate_hz);
    if (node)
    {
        reject_unknown_keys(*node, "detection",
                            {"load_resistance_ohm", "responsivity_a_per_w", "pd_cutoff_hz", "norm_constant"});
        p.load_resistance_ohm = get_number(*node, "detection", "load_resistance_ohm").value_or(p.load_resistance_ohm);
        p.responsivity_a_per_w =
            get_number(*node, "detection", "responsivity_a_per_w").value_or(p.responsivity_a_per_w);
        p.pd_cutoff_hz = get_number(*node, "detection", "pd_cutoff_hz").value_or(p.pd_cutoff_hz);
        p.norm_constant = get_number(*node, "detection", "norm_constant").value_or(p.norm_constant);
    }
    try
    {
        p.validate();
    }
    catch (const InvalidArgument &e)
    {
        throw ValidationError(std::string("detection: ") + e.what());
    }
    return p;
}

SweepGrid parse_sweep(const json *node)
{
    SweepGrid g;
    if (node)
    {
        reject_unknown_keys(*node, "sweep", {"start_hz", "stop_hz", "step_hz"});
        g.start_hz = get_number(*node, "sweep", "start_hz").value_or(g.start_hz);
        g.stop_hz = get_number(*node, "sweep", "stop_hz").value_or(g.stop_hz);
        g.step_hz = get_number(*node, "sweep", "step_hz").value_or(g.step_hz);
    }
    g.validate();
    return g;
}

OracleConfig parse_oracle(const json *node)
{
    OracleConfig cfg;
    if (node)
    {
        reject_unknown_keys(*node, "oracle", {"alpha", "base_resolution_hz", "oversample_factor"});
        cfg.alpha = get_number(*node, "oracle", "alpha").value_or(cfg.alpha);
        cfg.base_resolution_hz = get_number(*node, "oracle", "base_resolution_hz").value_or(cfg.base_resolution_hz);
        cfg.oversample_factor = get_int(*node, "oracle", "oversample_factor").value_or(cfg.oversample_factor);
    }
    try
    {
        cfg.validate();
    }
    catch (const InvalidArgument &e)
    {
        throw ValidationError(std::string("oracle: ") + e.what());
    }
    return cfg;
}

const json *optional_section(const json &root, std::string_view key)
{
    auto it = root.find(key);
    return it == root.end() ? nullptr : &*it;
}

Mode parse_mode(const std::string &s)
{
    if (s == "analytic")
        return Mode::analytic;
    if (s == "oracle")
        return Mode::oracle;
    if (s == "both")
        return Mode::both;
    throw ValidationError("mode must be one of analytic, oracle, both");
}

Approximation parse_approximation(const std::string &s)
{
    if (s == "exact-gk")
        return Approximation::exact_gk;
    if (s == "triangular-gk")
        return Approximation::triangular_gk;
    throw ValidationError("approximation must be exact-gk or triangular-gk");
}

std::string preset_document(std::string_view name, std::string_view description, int num_lines, double spacing_hz,
                            int num_channels)
{
    json doc = {
        {"name", name},
        {"description", description},
        {"comb", {{"num_lines", num_lines}, {"spacing_hz", spacing_hz}, {"center_hz", 193.4e12}}},
        {"otdm", {{"num_channels", num_channels}}},
        {"sweep", {{"start_hz", 0.5e9}, {"stop_hz", 43.5e9}, {"step_hz", 0.5e9}}},
    };
    return doc.dump(2);
}

std::vector<PresetInfo> build_presets()
{
    struct Row
    {
        const char *name;
        const char *description;
        int lines;
        double spacing;
        int channels;
    };
    static constexpr std::array rows{
        Row{"fig7a-3line", "single channel, 10 GSa/s, 3 comb lines", 3, 10e9, 1},
        Row{"fig7a-7line", "single channel, 10 GSa/s, 7 comb lines", 7, 10e9, 1},
        Row{"fig7a-15line", "single channel, 10 GSa/s, 15 comb lines", 15, 10e9, 1},
        Row{"fig7b-3line", "two channels, 20 GSa/s, 3 original comb lines", 3, 20e9, 2},
        Row{"fig7b-7line", "two channels, 20 GSa/s, 7 original comb lines", 7, 20e9, 2},
        Row{"fig7c-4ch-3line", "four channels, 40 GSa/s, 3 original comb lines", 3, 40e9, 4},
        Row{"fig8-single-20g", "single channel at 20 GSa/s, 3 comb lines (no demultiplexer)", 3, 20e9, 1},
        Row{"fig8-two-channel-20g", "two channels at 20 GSa/s, 3 comb lines (one switch)", 3, 20e9, 2},
        Row{"fig8b-single-channel", "alias of fig8-single-20g", 3, 20e9, 1},
        Row{"fig8b-two-channel", "alias of fig8-two-channel-20g", 3, 20e9, 2},
    };
    std::vector<PresetInfo> out;
    for (const auto &r : rows)
        out.push_back({r.name, r.description, preset_document(r.name, r.description, r.lines, r.spacing, r.channels)});
    return out;
}

} // namespace

void SweepGrid::validate() const
{
    if (!(start_hz > 0.0))
        throw ValidationError("sweep start must be positive");
    if (!(start_hz < stop_hz))
        throw ValidationError("sweep start must be below sweep stop");
    if (!(step_hz > 0.0))
        throw ValidationError("sweep step must be positive");
    if ((stop_hz - start_hz) / step_hz > 1e7)
        throw ValidationError("sweep has too many points");
}

std::vector<double> SweepGrid::points() const
{
    std::vector<double> out;
    const double slack = step_hz * 1e-9;
    for (long long i = 0;; ++i)
    {
        const double f = start_hz + static_cast<double>(i) * step_hz;
        if (f > stop_hz + slack)
            break;
        out.push_back(f);
    }
    return out;
}

SimScenario parse_scenario(std::string_view document)
{
    json root;
    try
    {
        root = json::parse(document.begin(), document.end());
    }
    catch (const json::parse_error &e)
    {
        throw ParseError(e.what());
    }
    reject_unknown_keys(root, "scenario",
                        {"name", "description", "comb", "otdm", "detection", "sweep", "mode", "approximation",
                         "oracle"});

    try
    {
        OpticalComb comb = parse_comb(require_object(root, "comb"));
        OtdmChain chain = parse_otdm(require_object(root, "otdm"), comb.line_spacing_hz());
        DetectionParams detection = parse_detection(optional_section(root, "detection"), chain.channel_rate_hz());
        SweepGrid sweep = parse_sweep(optional_section(root, "sweep"));
        OracleConfig oracle = parse_oracle(optional_section(root, "oracle"));

        return SimScenario{
            get_string(root, "", "name").value_or("scenario"),
            get_string(root, "", "description").value_or(""),
            std::move(comb),
            std::move(chain),
            detection,
            sweep,
            parse_mode(get_string(root, "", "mode").value_or("analytic")),
            parse_approximation(get_string(root, "", "approximation").value_or("exact-gk")),
            oracle,
        };
    }
    catch (const InvalidArgument &e)
    {
        throw ValidationError(e.what());
    }
}

SimScenario load_scenario(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open scenario file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw IoError("cannot read scenario file " + path.string());
    return parse_scenario(buf.str());
}

std::span<const PresetInfo> list_presets()
{
    static const std::vector<PresetInfo> presets = build_presets();
    return presets;
}

SimScenario preset_scenario(std::string_view name)
{
    for (const auto &p : list_presets())
        if (p.name == name)
            return parse_scenario(p.document);
    throw ValidationError("unknown preset \"" + std::string(name) + "\"");
}

std::string_view to_string(Mode mode)
{
    switch (mode)
    {
    case Mode::analytic:
        return "analytic";
    case Mode::oracle:
        return "oracle";
    case Mode::both:
        return "both";
    }
    return "analytic";
}

std::string_view to_string(Approximation approximation)
{
    return approximation == Approximation::exact_gk ? "exact-gk" : "triangular-gk";
}

} // namespace cipadc
